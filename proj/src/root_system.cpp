#include "splitrank/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace splitrank {

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A: return "A";
    case FamilyTag::B: return "B";
    case FamilyTag::C: return "C";
    case FamilyTag::D: return "D";
    case FamilyTag::BC: return "BC";
    case FamilyTag::E6: return "E6";
    case FamilyTag::E7: return "E7";
    case FamilyTag::E8: return "E8";
    case FamilyTag::F4: return "F4";
    case FamilyTag::G2: return "G2";
  }
  return "?";
}

FamilyTag family_tag_from_string(const std::string& s) {
  if (s == "A") return FamilyTag::A;
  if (s == "B") return FamilyTag::B;
  if (s == "C") return FamilyTag::C;
  if (s == "D") return FamilyTag::D;
  if (s == "BC") return FamilyTag::BC;
  if (s == "E6") return FamilyTag::E6;
  if (s == "E7") return FamilyTag::E7;
  if (s == "E8") return FamilyTag::E8;
  if (s == "F4") return FamilyTag::F4;
  if (s == "G2") return FamilyTag::G2;
  throw std::invalid_argument("unknown Dynkin family '" + s + "'");
}

std::string to_string(OrbitClass cls) {
  switch (cls) {
    case OrbitClass::Middle: return "middle";
    case OrbitClass::Long: return "long";
    case OrbitClass::Short: return "short";
    case OrbitClass::Double: return "double";
  }
  return "?";
}

DynkinFamily::DynkinFamily(FamilyTag t, int r) : tag(t), rank(r) {
  int min_rank = 1, fixed = 0;
  switch (tag) {
    case FamilyTag::A: min_rank = 1; break;
    case FamilyTag::B: min_rank = 2; break;
    case FamilyTag::C: min_rank = 2; break;
    case FamilyTag::D: min_rank = 3; break;
    case FamilyTag::BC: min_rank = 1; break;
    case FamilyTag::E6: fixed = 6; break;
    case FamilyTag::E7: fixed = 7; break;
    case FamilyTag::E8: fixed = 8; break;
    case FamilyTag::F4: fixed = 4; break;
    case FamilyTag::G2: fixed = 2; break;
  }
  if (fixed != 0 ? rank != fixed : rank < min_rank)
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                to_string(tag));
}

std::string DynkinFamily::str() const { return to_string(tag) + std::to_string(rank); }

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

Covector Covector::from_ints(const std::vector<IntScalar>& entries) {
  Covector v;
  v.values.resize(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    v.values[static_cast<Eigen::Index>(i)] = Rational(entries[i]);
  return v;
}

RestrictedRootSystem::RestrictedRootSystem(DynkinFamily family, std::vector<Root> positive,
                                           IntMat cartan)
    : family_(family), positive_(std::move(positive)), cartan_(std::move(cartan)) {
  std::sort(positive_.begin(), positive_.end(),
            [](const Root& a, const Root& b) { return lex_less(a.coeffs, b.coeffs); });
  simple_index_.assign(family_.rank, -1);
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    const IntVec& c = positive_[i].coeffs;
    if (c.sum() == 1 && c.maxCoeff() == 1) {
      Eigen::Index node = 0;
      while (c[node] == 0) ++node;
      simple_index_[static_cast<int>(node)] = static_cast<int>(i);
    }
  }
  for (int i = 0; i < family_.rank; ++i)
    if (simple_index_[i] < 0)
      throw std::logic_error("root system of " + family_.str() + " misses simple root " +
                             std::to_string(i + 1));
}

std::array<int, 4> RestrictedRootSystem::class_counts() const {
  std::array<int, 4> counts{};
  for (const Root& r : positive_) counts[static_cast<int>(r.cls)]++;
  return counts;
}

namespace {

IntVec interval_vector(int rank, int lo, int hi, IntScalar value) {
  IntVec v = IntVec::Zero(rank);
  for (int i = lo; i <= hi; ++i) v[i] = value;
  return v;
}

// A_r: e_i - e_j = alpha_i + ... + alpha_{j-1}.
std::vector<Root> roots_A(int r) {
  std::vector<Root> roots;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) roots.push_back({interval_vector(r, i, j, 1), OrbitClass::Middle});
  return roots;
}

// B_r: long e_i +- e_j, short e_i; alpha_r = e_r.
std::vector<Root> roots_B(int r) {
  std::vector<Root> roots;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      roots.push_back({interval_vector(r, i, j - 1, 1), OrbitClass::Long});  // e_i - e_j
      IntVec sum = interval_vector(r, i, j - 1, 1) + interval_vector(r, j, r - 1, 2);
      roots.push_back({sum, OrbitClass::Long});  // e_i + e_j
    }
    roots.push_back({interval_vector(r, i, r - 1, 1), OrbitClass::Short});  // e_i
  }
  return roots;
}

// C_r: short e_i +- e_j, long 2 e_i; alpha_r = 2 e_r.
std::vector<Root> roots_C(int r) {
  std::vector<Root> roots;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      roots.push_back({interval_vector(r, i, j - 1, 1), OrbitClass::Short});  // e_i - e_j
      IntVec sum = interval_vector(r, i, j - 1, 1);
      if (j <= r - 2) sum += interval_vector(r, j, r - 2, 2);
      sum[r - 1] += 1;
      roots.push_back({sum, OrbitClass::Short});  // e_i + e_j
    }
    IntVec dbl = IntVec::Zero(r);
    if (i <= r - 2) dbl = interval_vector(r, i, r - 2, 2);
    dbl[r - 1] += 1;
    roots.push_back({dbl, OrbitClass::Long});  // 2 e_i
  }
  return roots;
}

// D_r: e_i +- e_j; alpha_{r-1} = e_{r-1} - e_r, alpha_r = e_{r-1} + e_r
// (0-indexed: alpha_{r-2} and alpha_{r-1} are the fork nodes).
std::vector<Root> roots_D(int r) {
  std::vector<Root> roots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      roots.push_back({interval_vector(r, i, j - 1, 1), OrbitClass::Middle});  // e_{i+1}-e_{j+1}
      IntVec v;
      if (j == r - 1) {
        v = interval_vector(r, i, r - 3, 1);
        v[r - 1] += 1;
      } else if (j == r - 2) {
        v = interval_vector(r, i, r - 2, 1);
        v[r - 1] += 1;
      } else {
        v = interval_vector(r, i, j - 1, 1) + interval_vector(r, j, r - 3, 2);
        v[r - 2] += 1;
        v[r - 1] += 1;
      }
      roots.push_back({v, OrbitClass::Middle});  // e_{i+1}+e_{j+1}
    }
  return roots;
}

// BC_r: middle e_i +- e_j, short e_i, double 2 e_i; alpha_r = e_r.
std::vector<Root> roots_BC(int r) {
  std::vector<Root> roots;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      roots.push_back({interval_vector(r, i, j - 1, 1), OrbitClass::Middle});
      IntVec sum = interval_vector(r, i, j - 1, 1) + interval_vector(r, j, r - 1, 2);
      roots.push_back({sum, OrbitClass::Middle});
    }
    roots.push_back({interval_vector(r, i, r - 1, 1), OrbitClass::Short});
    roots.push_back({interval_vector(r, i, r - 1, 2), OrbitClass::Double});
  }
  return roots;
}

IntMat simply_laced_cartan(int rank, const std::vector<std::pair<int, int>>& edges) {
  IntMat c = IntMat::Identity(rank, rank) * 2;
  for (auto [i, j] : edges) {
    c(i, j) = -1;
    c(j, i) = -1;
  }
  return c;
}

IntMat chain_cartan(int rank) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
  return simply_laced_cartan(rank, edges);
}

// Cartan convention here: C(i,j) = <alpha_i, alpha_j-check>, so the
// reflection s_j sends coefficient vector c to c - (sum_i c_i C(i,j)) e_j.
IntMat cartan_matrix(const DynkinFamily& f) {
  int r = f.rank;
  switch (f.tag) {
    case FamilyTag::A: return chain_cartan(r);
    case FamilyTag::B:
    case FamilyTag::BC: {
      IntMat c = chain_cartan(r);
      if (r >= 2) {
        c(r - 2, r - 1) = -2;  // alpha_{r-1} long against short alpha_r-check
        c(r - 1, r - 2) = -1;
      }
      return c;
    }
    case FamilyTag::C: {
      IntMat c = chain_cartan(r);
      if (r >= 2) {
        c(r - 2, r - 1) = -1;
        c(r - 1, r - 2) = -2;
      }
      return c;
    }
    case FamilyTag::D: {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 2 < r; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(r - 3, r - 1);
      return simply_laced_cartan(r, edges);
    }
    case FamilyTag::E6:
      return simply_laced_cartan(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
    case FamilyTag::E7:
      return simply_laced_cartan(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}});
    case FamilyTag::E8:
      return simply_laced_cartan(8, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {6, 7}});
    case FamilyTag::F4: {
      IntMat c = chain_cartan(4);
      c(1, 2) = -2;  // alpha_2 long, alpha_3 short
      c(2, 1) = -1;
      return c;
    }
    case FamilyTag::G2: {
      IntMat c = IntMat::Identity(2, 2) * 2;
      c(0, 1) = -3;  // alpha_1 long, alpha_2 short
      c(1, 0) = -1;
      return c;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<OrbitClass> simple_classes_of(const DynkinFamily& f) {
  int r = f.rank;
  std::vector<OrbitClass> cls(r, OrbitClass::Middle);
  switch (f.tag) {
    case FamilyTag::B:
      std::fill(cls.begin(), cls.end(), OrbitClass::Long);
      cls[r - 1] = OrbitClass::Short;
      break;
    case FamilyTag::C:
      std::fill(cls.begin(), cls.end(), OrbitClass::Short);
      cls[r - 1] = OrbitClass::Long;
      break;
    case FamilyTag::BC:
      if (r >= 2) std::fill(cls.begin(), cls.end() - 1, OrbitClass::Middle);
      cls[r - 1] = OrbitClass::Short;
      break;
    case FamilyTag::F4:
      cls = {OrbitClass::Long, OrbitClass::Long, OrbitClass::Short, OrbitClass::Short};
      break;
    case FamilyTag::G2:
      cls = {OrbitClass::Long, OrbitClass::Short};
      break;
    default: break;
  }
  return cls;
}

int expected_positive_count(const DynkinFamily& f) {
  int r = f.rank;
  switch (f.tag) {
    case FamilyTag::A: return r * (r + 1) / 2;
    case FamilyTag::B:
    case FamilyTag::C: return r * r;
    case FamilyTag::D: return r * (r - 1);
    case FamilyTag::BC: return r * (r + 1);
    case FamilyTag::E6: return 36;
    case FamilyTag::E7: return 63;
    case FamilyTag::E8: return 120;
    case FamilyTag::F4: return 24;
    case FamilyTag::G2: return 6;
  }
  return -1;
}

}  // namespace

std::vector<Root> reflection_closure_positive(const IntMat& cartan,
                                              const std::vector<OrbitClass>& simple_classes) {
  const int rank = static_cast<int>(cartan.rows());
  auto cmp = [](const IntVec& a, const IntVec& b) { return lex_less(a, b); };
  std::map<IntVec, OrbitClass, decltype(cmp)> seen(cmp);
  std::vector<IntVec> queue;
  for (int i = 0; i < rank; ++i) {
    IntVec e = IntVec::Zero(rank);
    e[i] = 1;
    seen.emplace(e, simple_classes[i]);
    queue.push_back(e);
    seen.emplace(-e, simple_classes[i]);
    queue.push_back(-e);
  }
  while (!queue.empty()) {
    IntVec c = queue.back();
    queue.pop_back();
    OrbitClass cls = seen.at(c);
    for (int j = 0; j < rank; ++j) {
      IntScalar pairing = 0;
      for (int i = 0; i < rank; ++i) pairing += c[i] * cartan(i, j);
      IntVec next = c;
      next[j] -= pairing;
      if (seen.emplace(next, cls).second) queue.push_back(next);
    }
  }
  std::vector<Root> positive;
  for (const auto& [c, cls] : seen) {
    bool pos = c.minCoeff() >= 0 && c.maxCoeff() > 0;
    if (pos) positive.push_back({c, cls});
  }
  return positive;
}

RestrictedRootSystem build_root_system(const DynkinFamily& family) {
  std::vector<Root> roots;
  switch (family.tag) {
    case FamilyTag::A: roots = roots_A(family.rank); break;
    case FamilyTag::B: roots = roots_B(family.rank); break;
    case FamilyTag::C: roots = roots_C(family.rank); break;
    case FamilyTag::D: roots = roots_D(family.rank); break;
    case FamilyTag::BC: roots = roots_BC(family.rank); break;
    default:
      roots = reflection_closure_positive(cartan_matrix(family), simple_classes_of(family));
      break;
  }
  if (static_cast<int>(roots.size()) != expected_positive_count(family))
    throw std::logic_error("positive-root count mismatch for " + family.str());
  return RestrictedRootSystem(family, std::move(roots), cartan_matrix(family));
}

const RestrictedRootSystem& shared_root_system(const DynkinFamily& family) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, RestrictedRootSystem> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(static_cast<int>(family.tag), family.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_root_system(family)).first;
  return it->second;
}

Rational evaluate(const Root& root, const Covector& v) {
  if (root.coeffs.size() != v.values.size())
    throw std::invalid_argument("evaluate: dimension mismatch");
  Rational acc(0);
  for (Eigen::Index i = 0; i < root.coeffs.size(); ++i)
    acc += Rational(root.coeffs[i]) * v.values[i];
  return acc;
}

std::vector<Root> span_closure(const RestrictedRootSystem& sys,
                               const std::vector<Root>& generators) {
  for (const Root& g : generators) {
    bool found = false;
    for (const Root& r : sys.positive_roots())
      if (r.coeffs == g.coeffs) {
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("span_closure: generator is not a positive root");
  }
  IntRowSpan span(sys.rank());
  for (const Root& g : generators) span.insert(g.coeffs);
  std::vector<Root> result;
  for (const Root& r : sys.positive_roots())
    if (span.contains(r.coeffs)) result.push_back(r);
  return result;
}

std::vector<Root> vanishing_subsystem(const RestrictedRootSystem& sys,
                                      const std::vector<Covector>& vs) {
  if (vs.empty()) throw std::invalid_argument("vanishing_subsystem: empty covector list");
  std::vector<Root> result;
  for (const Root& r : sys.positive_roots()) {
    bool vanishes = true;
    for (const Covector& v : vs)
      if (!evaluate(r, v).is_zero()) {
        vanishes = false;
        break;
      }
    if (vanishes) result.push_back(r);
  }
  return result;
}

std::vector<Root> support_closure(const RestrictedRootSystem& sys, const std::vector<int>& nodes) {
  std::vector<bool> keep(sys.rank(), false);
  for (int n : nodes) keep[n] = true;
  std::vector<Root> result;
  for (const Root& r : sys.positive_roots()) {
    bool supported = true;
    for (Eigen::Index i = 0; i < r.coeffs.size(); ++i)
      if (r.coeffs[i] != 0 && !keep[static_cast<int>(i)]) {
        supported = false;
        break;
      }
    if (supported) result.push_back(r);
  }
  return result;
}

}  // namespace splitrank
