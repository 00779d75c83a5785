#include "splitrank/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace splitrank {

namespace {

std::string su_name(int p, int q) {
  return "SU(" + std::to_string(p) + "," + std::to_string(q) + ")/S(U(" + std::to_string(p) +
         ")xU(" + std::to_string(q) + "))";
}

std::string sp_pq_name(int p, int q) {
  return "Sp(" + std::to_string(p) + "," + std::to_string(q) + ")/Sp(" + std::to_string(p) +
         ")xSp(" + std::to_string(q) + ")";
}

std::string so0_name(int p, int q) {
  return "SO_0(" + std::to_string(p) + "," + std::to_string(q) + ")/SO(" + std::to_string(p) +
         ")xSO(" + std::to_string(q) + ")";
}

}  // namespace

SymmetricSpaceEntry SymmetricSpaceEntry::point() {
  SymmetricSpaceEntry e;
  e.name = "point";
  e.is_point = true;
  return e;
}

SymmetricSpaceEntry SymmetricSpaceEntry::make(FamilyTag tag, int rank, MultiplicityMap mults,
                                              std::optional<int> param_k) {
  auto [family, normalized] = normalize_diagram(DynkinFamily(tag, rank), mults);
  SymmetricSpaceEntry e;
  e.family = family;
  e.mults = normalized;
  e.param_k = param_k;
  e.name = identify_component(family, normalized);
  return e;
}

long dimension(const SymmetricSpaceEntry& entry) {
  if (entry.is_point) return 0;
  const RestrictedRootSystem& sys = shared_root_system(entry.family);
  auto counts = sys.class_counts();
  long dim = entry.family.rank;
  for (int c = 0; c < 4; ++c)
    dim += static_cast<long>(counts[c]) * entry.mults.of(static_cast<OrbitClass>(c));
  return dim;
}

std::pair<DynkinFamily, MultiplicityMap> normalize_diagram(const DynkinFamily& family,
                                                           const MultiplicityMap& mults) {
  FamilyTag tag = family.tag;
  int rank = family.rank;
  // B_2 ~ C_2 and A_3 ~ D_3; one fixed side keeps the name lookup
  // deterministic. The B_2/C_2 identification maps short simple to short
  // simple, so the class-keyed multiplicities carry over unchanged.
  if (tag == FamilyTag::C && rank == 2) tag = FamilyTag::B;
  if (tag == FamilyTag::D && rank == 3) tag = FamilyTag::A;

  MultiplicityMap out;
  switch (tag) {
    case FamilyTag::A:
    case FamilyTag::D:
    case FamilyTag::E6:
    case FamilyTag::E7:
    case FamilyTag::E8:
      out.set(OrbitClass::Middle, mults.of(OrbitClass::Middle));
      break;
    case FamilyTag::B:
    case FamilyTag::C:
    case FamilyTag::F4:
    case FamilyTag::G2:
      out.set(OrbitClass::Long, mults.of(OrbitClass::Long));
      out.set(OrbitClass::Short, mults.of(OrbitClass::Short));
      break;
    case FamilyTag::BC:
      if (rank >= 2) out.set(OrbitClass::Middle, mults.of(OrbitClass::Middle));
      out.set(OrbitClass::Short, mults.of(OrbitClass::Short));
      out.set(OrbitClass::Double, mults.of(OrbitClass::Double));
      break;
  }
  return {DynkinFamily(tag, rank), out};
}

std::string identify_component(const DynkinFamily& family_in, const MultiplicityMap& mults_in) {
  auto [family, mults] = normalize_diagram(family_in, mults_in);
  const int r = family.rank;
  const int mid = mults.of(OrbitClass::Middle);
  const int lng = mults.of(OrbitClass::Long);
  const int sht = mults.of(OrbitClass::Short);
  const int dbl = mults.of(OrbitClass::Double);

  switch (family.tag) {
    case FamilyTag::A:
      if (r == 1) return mid >= 1 ? "H^" + std::to_string(mid + 1) : "unnamed";
      if (mid == 1) return "SL(" + std::to_string(r + 1) + ",R)/SO(" + std::to_string(r + 1) + ")";
      if (mid == 2) return "SL(" + std::to_string(r + 1) + ",C)/SU(" + std::to_string(r + 1) + ")";
      if (mid == 4)
        return "SU*(" + std::to_string(2 * r + 2) + ")/Sp(" + std::to_string(r + 1) + ")";
      if (r == 2 && mid == 8) return "E6^{-26}/F4";
      return "unnamed";
    case FamilyTag::B:
      if (lng == 1 && sht >= 1) return so0_name(r, r + sht);
      if (lng == 2 && sht == 2)
        return "SO(" + std::to_string(2 * r + 1) + ",C)/SO(" + std::to_string(2 * r + 1) + ")";
      if (r == 2 && lng == 3 && sht == 4) return sp_pq_name(2, 2);
      return "unnamed";
    case FamilyTag::C:
      if (sht == 1 && lng == 1) return "Sp(" + std::to_string(r) + ",R)/U(" + std::to_string(r) + ")";
      if (sht == 2 && lng == 1) return su_name(r, r);
      if (sht == 2 && lng == 2)
        return "Sp(" + std::to_string(r) + ",C)/Sp(" + std::to_string(r) + ")";
      if (sht == 4 && lng == 1)
        return "SO*(" + std::to_string(4 * r) + ")/U(" + std::to_string(2 * r) + ")";
      if (sht == 4 && lng == 3) return sp_pq_name(r, r);
      if (r == 3 && sht == 8 && lng == 1) return "E7^{-25}/E6xU(1)";
      return "unnamed";
    case FamilyTag::D:
      if (mid == 1) return so0_name(r, r);
      if (mid == 2) return "SO(" + std::to_string(2 * r) + ",C)/SO(" + std::to_string(2 * r) + ")";
      return "unnamed";
    case FamilyTag::BC: {
      if (r == 1) {
        if (dbl == 1 && sht >= 2 && sht % 2 == 0) return su_name(1, 1 + sht / 2);
        if (dbl == 3 && sht >= 4 && sht % 4 == 0) return sp_pq_name(1, 1 + sht / 4);
        return "unnamed";
      }
      if (mid == 4 && sht == 4 && dbl == 1)
        return "SO*(" + std::to_string(4 * r + 2) + ")/U(" + std::to_string(2 * r + 1) + ")";
      if (mid == 2 && dbl == 1 && sht >= 2 && sht % 2 == 0) return su_name(r, r + sht / 2);
      if (mid == 4 && dbl == 3 && sht >= 4 && sht % 4 == 0) return sp_pq_name(r, r + sht / 4);
      if (r == 2 && mid == 6 && sht == 8 && dbl == 1) return "E6^{-14}/Spin(10)xU(1)";
      return "unnamed";
    }
    case FamilyTag::E6:
      if (mid == 1) return "E6^6/Sp(4)";
      if (mid == 2) return "E6(C)/E6";
      return "unnamed";
    case FamilyTag::E7:
      if (mid == 1) return "E7^7/SU(8)";
      if (mid == 2) return "E7(C)/E7";
      return "unnamed";
    case FamilyTag::E8:
      if (mid == 1) return "E8^8/SO(16)";
      if (mid == 2) return "E8(C)/E8";
      return "unnamed";
    case FamilyTag::F4:
      if (lng == 1 && sht == 1) return "F4^4/Sp(3)xSp(1)";
      if (lng == 1 && sht == 2) return "E6^2/SU(6)xSp(1)";
      if (lng == 1 && sht == 4) return "E7^{-5}/SO(12)xSp(1)";
      if (lng == 1 && sht == 8) return "E8^{-24}/E7xSp(1)";
      if (lng == 2 && sht == 2) return "F4(C)/F4";
      return "unnamed";
    case FamilyTag::G2:
      if (lng == 1 && sht == 1) return "G2^2/SO(4)";
      if (lng == 2 && sht == 2) return "G2(C)/G2";
      return "unnamed";
  }
  return "unnamed";
}

const std::vector<CatalogRow>& catalog_rows() {
  static const std::vector<CatalogRow> rows = [] {
    std::vector<CatalogRow> v;
    auto add = [&v](std::string label, int min_r, int max_r, bool has_k,
                    std::function<SymmetricSpaceEntry(int, int)> make) {
      v.push_back({std::move(label), min_r, max_r, has_k, std::move(make)});
    };
    using E = SymmetricSpaceEntry;
    // A block
    add("SL(r+1,R)/SO(r+1)", 2, 0, false,
        [](int r, int) { return E::make(FamilyTag::A, r, MultiplicityMap::middle(1)); });
    add("SL(r+1,C)/SU(r+1)", 2, 0, false,
        [](int r, int) { return E::make(FamilyTag::A, r, MultiplicityMap::middle(2)); });
    add("SU*(2r+2)/Sp(r+1)", 2, 0, false,
        [](int r, int) { return E::make(FamilyTag::A, r, MultiplicityMap::middle(4)); });
    add("E6^{-26}/F4", 2, 2, false,
        [](int, int) { return E::make(FamilyTag::A, 2, MultiplicityMap::middle(8)); });
    // B block
    add("SO_0(r,r+k)/SO(r)xSO(r+k)", 2, 0, true, [](int r, int k) {
      return E::make(FamilyTag::B, r, MultiplicityMap::long_short(1, k), k);
    });
    add("SO(2r+1,C)/SO(2r+1)", 2, 0, false,
        [](int r, int) { return E::make(FamilyTag::B, r, MultiplicityMap::long_short(2, 2)); });
    // C block
    add("Sp(r,R)/U(r)", 3, 0, false,
        [](int r, int) { return E::make(FamilyTag::C, r, MultiplicityMap::long_short(1, 1)); });
    add("SU(r,r)/S(U(r)xU(r))", 3, 0, false,
        [](int r, int) { return E::make(FamilyTag::C, r, MultiplicityMap::long_short(1, 2)); });
    add("Sp(r,C)/Sp(r)", 3, 0, false,
        [](int r, int) { return E::make(FamilyTag::C, r, MultiplicityMap::long_short(2, 2)); });
    add("SO*(4r)/U(2r)", 4, 0, false,
        [](int r, int) { return E::make(FamilyTag::C, r, MultiplicityMap::long_short(1, 4)); });
    add("SO*(12)/U(6)", 3, 3, false,
        [](int, int) { return E::make(FamilyTag::C, 3, MultiplicityMap::long_short(1, 4)); });
    add("Sp(r,r)/Sp(r)xSp(r)", 2, 0, false,
        [](int r, int) { return E::make(FamilyTag::C, r, MultiplicityMap::long_short(3, 4)); });
    add("E7^{-25}/E6xU(1)", 3, 3, false,
        [](int, int) { return E::make(FamilyTag::C, 3, MultiplicityMap::long_short(1, 8)); });
    // D block
    add("SO_0(r,r)/SO(r)xSO(r)", 4, 0, false,
        [](int r, int) { return E::make(FamilyTag::D, r, MultiplicityMap::middle(1)); });
    add("SO(2r,C)/SO(2r)", 4, 0, false,
        [](int r, int) { return E::make(FamilyTag::D, r, MultiplicityMap::middle(2)); });
    // BC block
    add("SU(r,r+k)/S(U(r)xU(r+k))", 1, 0, true, [](int r, int k) {
      return E::make(FamilyTag::BC, r, MultiplicityMap::bc(2, 2 * k, 1), k);
    });
    add("Sp(r,r+k)/Sp(r)xSp(r+k)", 1, 0, true, [](int r, int k) {
      return E::make(FamilyTag::BC, r, MultiplicityMap::bc(4, 4 * k, 3), k);
    });
    add("SO*(4r+2)/U(2r+1)", 2, 0, false,
        [](int r, int) { return E::make(FamilyTag::BC, r, MultiplicityMap::bc(4, 4, 1)); });
    add("E6^{-14}/Spin(10)xU(1)", 2, 2, false,
        [](int, int) { return E::make(FamilyTag::BC, 2, MultiplicityMap::bc(6, 8, 1)); });
    // exceptional block
    add("E6^6/Sp(4)", 6, 6, false,
        [](int, int) { return E::make(FamilyTag::E6, 6, MultiplicityMap::middle(1)); });
    add("E6(C)/E6", 6, 6, false,
        [](int, int) { return E::make(FamilyTag::E6, 6, MultiplicityMap::middle(2)); });
    add("E7^7/SU(8)", 7, 7, false,
        [](int, int) { return E::make(FamilyTag::E7, 7, MultiplicityMap::middle(1)); });
    add("E7(C)/E7", 7, 7, false,
        [](int, int) { return E::make(FamilyTag::E7, 7, MultiplicityMap::middle(2)); });
    add("E8^8/SO(16)", 8, 8, false,
        [](int, int) { return E::make(FamilyTag::E8, 8, MultiplicityMap::middle(1)); });
    add("E8(C)/E8", 8, 8, false,
        [](int, int) { return E::make(FamilyTag::E8, 8, MultiplicityMap::middle(2)); });
    add("F4^4/Sp(3)xSp(1)", 4, 4, false,
        [](int, int) { return E::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, 1)); });
    add("E6^2/SU(6)xSp(1)", 4, 4, false,
        [](int, int) { return E::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, 2)); });
    add("E7^{-5}/SO(12)xSp(1)", 4, 4, false,
        [](int, int) { return E::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, 4)); });
    add("E8^{-24}/E7xSp(1)", 4, 4, false,
        [](int, int) { return E::make(FamilyTag::F4, 4, MultiplicityMap::long_short(1, 8)); });
    add("F4(C)/F4", 4, 4, false,
        [](int, int) { return E::make(FamilyTag::F4, 4, MultiplicityMap::long_short(2, 2)); });
    add("G2^2/SO(4)", 2, 2, false,
        [](int, int) { return E::make(FamilyTag::G2, 2, MultiplicityMap::long_short(1, 1)); });
    add("G2(C)/G2", 2, 2, false,
        [](int, int) { return E::make(FamilyTag::G2, 2, MultiplicityMap::long_short(2, 2)); });
    return v;
  }();
  return rows;
}

std::vector<SymmetricSpaceEntry> catalog_entries(int max_rank, int max_param_k) {
  if (max_rank < 1) throw std::invalid_argument("catalog_entries: max_rank must be >= 1");
  std::vector<SymmetricSpaceEntry> out;
  std::map<std::string, std::size_t> by_name;
  auto push = [&](SymmetricSpaceEntry e) {
    if (e.name == "unnamed")
      throw std::logic_error("catalog row produced an unnamed entry");
    auto it = by_name.find(e.name);
    if (it == by_name.end()) {
      by_name.emplace(e.name, out.size());
      out.push_back(std::move(e));
    }
  };
  // H^m, m = 2..10: the rank-1 constituents that truncation naming and
  // product factors need.
  for (int m = 1; m <= 9; ++m)
    push(SymmetricSpaceEntry::make(FamilyTag::A, 1, MultiplicityMap::middle(m)));
  for (const CatalogRow& row : catalog_rows()) {
    int hi = row.max_rank == 0 ? max_rank : std::min(row.max_rank, max_rank);
    for (int r = row.min_rank; r <= hi; ++r) {
      if (row.has_k)
        for (int k = 1; k <= max_param_k; ++k) push(row.make(r, k));
      else
        push(row.make(r, 0));
    }
  }
  return out;
}

const SymmetricSpaceEntry* find_entry(const std::vector<SymmetricSpaceEntry>& catalog,
                                      const std::string& name) {
  for (const auto& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

std::string nearest_name(const std::vector<SymmetricSpaceEntry>& catalog,
                         const std::string& name) {
  auto edit_distance = [](const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      cur[0] = i;
      for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
        cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
      }
      std::swap(prev, cur);
    }
    return prev[b.size()];
  };
  std::string best;
  std::size_t best_d = static_cast<std::size_t>(-1);
  for (const auto& e : catalog) {
    std::size_t d = edit_distance(name, e.name);
    if (d < best_d) {
      best_d = d;
      best = e.name;
    }
  }
  return best;
}

}  // namespace splitrank
