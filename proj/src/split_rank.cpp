#include "splitrank/split_rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitrank {

namespace {

long mult_weight(const MultiplicityMap& mults, const std::vector<Root>& roots) {
  long acc = 0;
  for (const Root& r : roots) acc += mults.of(r.cls);
  return acc;
}

// Family of a connected reduced sub-diagram from its shape. `nodes` indexes
// the ambient system; tags are the ambient orbit classes of the nodes.
struct Shape {
  FamilyTag tag;
  std::vector<int> long_nodes, short_nodes;  // only for two-length families
};

Shape classify_shape(const RestrictedRootSystem& sys, const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  const IntMat& cartan = sys.cartan_matrix();

  std::vector<std::pair<int, int>> double_edges;
  bool triple = false;
  std::vector<int> degree(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int u = nodes[a], v = nodes[b];
      if (!sys.adjacent(u, v)) continue;
      degree[a]++;
      degree[b]++;
      IntScalar w = std::min(cartan(u, v), cartan(v, u));
      if (w == -3) triple = true;
      if (w == -2) double_edges.emplace_back(u, v);
    }

  if (triple) {
    Shape s{FamilyTag::G2, {}, {}};
    for (int n : nodes)
      (sys.node_class(n) == OrbitClass::Long ? s.long_nodes : s.short_nodes).push_back(n);
    return s;
  }

  if (!double_edges.empty()) {
    Shape s{FamilyTag::B, {}, {}};
    for (int n : nodes)
      (sys.node_class(n) == OrbitClass::Long ? s.long_nodes : s.short_nodes).push_back(n);
    // interior double edge (both endpoints of degree 2) only occurs in F4
    auto [u, v] = double_edges.front();
    int du = 0, dv = 0;
    for (int n : nodes) {
      if (sys.adjacent(u, n)) ++du;
      if (sys.adjacent(v, n)) ++dv;
    }
    if (m == 4 && du == 2 && dv == 2) {
      s.tag = FamilyTag::F4;
    } else if (s.short_nodes.size() == 1) {
      s.tag = FamilyTag::B;
    } else if (s.long_nodes.size() == 1) {
      s.tag = FamilyTag::C;
    } else {
      throw std::logic_error("unclassifiable double-edge sub-diagram");
    }
    return s;
  }

  // simply laced: a path is A_m, one branch node gives D or E by arm lengths
  int branch = -1;
  for (int a = 0; a < m; ++a)
    if (degree[a] >= 3) branch = a;
  if (branch < 0) return {FamilyTag::A, {}, {}};

  std::vector<int> arms;
  for (int n : nodes) {
    if (n == nodes[branch] || !sys.adjacent(nodes[branch], n)) continue;
    int len = 1, prev = nodes[branch], cur = n;
    for (;;) {
      int next = -1;
      for (int w : nodes)
        if (w != prev && w != cur && sys.adjacent(cur, w)) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("sub-diagram with more than one branch");
  if (arms[0] == 1 && arms[1] == 1) return {FamilyTag::D, {}, {}};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return {FamilyTag::E6, {}, {}};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return {FamilyTag::E7, {}, {}};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return {FamilyTag::E8, {}, {}};
  throw std::logic_error("unclassifiable branched sub-diagram");
}

int ambient_mult(const RestrictedRootSystem& sys, const MultiplicityMap& mults, int node) {
  return mults.of(sys.node_class(node));
}

int constant_mult(const RestrictedRootSystem& sys, const MultiplicityMap& mults,
                  const std::vector<int>& nodes) {
  int m = ambient_mult(sys, mults, nodes.front());
  for (int n : nodes)
    if (ambient_mult(sys, mults, n) != m)
      throw std::logic_error("non-constant multiplicity across one orbit class");
  return m;
}

}  // namespace

std::vector<ComponentInfo> classify_subdiagram(const RestrictedRootSystem& sys,
                                               const MultiplicityMap& ambient_mults,
                                               const std::vector<int>& kept) {
  std::vector<ComponentInfo> result;
  std::vector<int> pending = kept;
  std::sort(pending.begin(), pending.end());

  while (!pending.empty()) {
    std::vector<int> comp{pending.front()};
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int n : pending)
        if (std::find(comp.begin(), comp.end(), n) == comp.end() &&
            sys.adjacent(comp[head], n))
          comp.push_back(n);
    std::sort(comp.begin(), comp.end());
    std::erase_if(pending, [&](int n) {
      return std::find(comp.begin(), comp.end(), n) != comp.end();
    });

    ComponentInfo info;
    info.nodes = comp;
    const int m = static_cast<int>(comp.size());

    bool bc_tail = sys.family().tag == FamilyTag::BC &&
                   std::find(comp.begin(), comp.end(), sys.rank() - 1) != comp.end();
    if (bc_tail) {
      info.family = DynkinFamily(FamilyTag::BC, m);
      MultiplicityMap mm;
      if (m >= 2) mm.set(OrbitClass::Middle, ambient_mults.of(OrbitClass::Middle));
      mm.set(OrbitClass::Short, ambient_mults.of(OrbitClass::Short));
      mm.set(OrbitClass::Double, ambient_mults.of(OrbitClass::Double));
      info.mults = mm;
    } else if (m == 1) {
      info.family = DynkinFamily(FamilyTag::A, 1);
      info.mults = MultiplicityMap::middle(ambient_mult(sys, ambient_mults, comp[0]));
    } else {
      Shape shape = classify_shape(sys, comp);
      info.family = DynkinFamily(shape.tag, m);
      switch (shape.tag) {
        case FamilyTag::A:
        case FamilyTag::D:
        case FamilyTag::E6:
        case FamilyTag::E7:
        case FamilyTag::E8:
          info.mults = MultiplicityMap::middle(constant_mult(sys, ambient_mults, comp));
          break;
        default:
          info.mults = MultiplicityMap::long_short(
              constant_mult(sys, ambient_mults, shape.long_nodes),
              constant_mult(sys, ambient_mults, shape.short_nodes));
          break;
      }
    }
    auto [fam, norm] = normalize_diagram(info.family, info.mults);
    info.family = fam;
    info.mults = norm;
    info.name = identify_component(fam, norm);
    result.push_back(std::move(info));
  }
  return result;
}

std::string truncation_name(const TruncationResult& t) {
  if (t.components.empty()) return "point";
  std::vector<std::string> names;
  for (const auto& c : t.components) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  std::string out = names.front();
  for (std::size_t i = 1; i < names.size(); ++i) out += "x" + names[i];
  return out;
}

namespace {

TruncationResult truncate(const SymmetricSpaceEntry& entry, const RestrictedRootSystem& sys,
                          std::vector<int> removed) {
  const int r = sys.rank();
  std::vector<int> kept;
  for (int i = 0; i < r; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) kept.push_back(i);

  TruncationResult t;
  t.removed_nodes = std::move(removed);
  t.components = classify_subdiagram(sys, entry.mults, kept);
  long weight = mult_weight(entry.mults, support_closure(sys, kept));
  t.dim_Y = static_cast<long>(kept.size()) + weight;
  t.dim_total = r + weight;  // = dim_Y + |removed|
  return t;
}

}  // namespace

std::vector<TruncationResult> truncations(const SymmetricSpaceEntry& entry) {
  if (entry.is_point || entry.rank() < 1)
    throw std::invalid_argument("truncations: entry must have rank >= 1");
  const RestrictedRootSystem& sys = shared_root_system(entry.family);
  std::vector<TruncationResult> out;
  for (int i = 0; i < sys.rank(); ++i) out.push_back(truncate(entry, sys, {i}));
  return out;
}

SplittingRankResult splitting_rank(const SymmetricSpaceEntry& entry) {
  SplittingRankResult res;
  for (TruncationResult& t : truncations(entry)) {
    if (t.dim_total > res.srk) {
      res.srk = t.dim_total;
      res.maximizers.clear();
    }
    if (t.dim_total == res.srk) res.maximizers.push_back(std::move(t));
  }
  return res;
}

SplittingRankResult splitting_rank_k(const SymmetricSpaceEntry& entry, int k) {
  const int r = entry.rank();
  if (k < 0 || k > r)
    throw std::invalid_argument("splitting_rank_k: k out of range 0.." + std::to_string(r));
  if (k == 0) {
    SplittingRankResult res;
    res.srk = dimension(entry);
    return res;
  }
  const RestrictedRootSystem& sys = shared_root_system(entry.family);

  SplittingRankResult res;
  res.srk = -1;
  std::vector<int> removed(k);
  // enumerate k-subsets of removed nodes (= (r-k)-subsets of kept ones)
  auto recurse = [&](auto&& self, int next, int depth) -> void {
    if (depth == k) {
      TruncationResult t = truncate(entry, sys, removed);
      if (t.dim_total > res.srk) {
        res.srk = t.dim_total;
        res.maximizers.clear();
      }
      if (t.dim_total == res.srk) res.maximizers.push_back(std::move(t));
      return;
    }
    for (int i = next; i < r; ++i) {
      removed[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  recurse(recurse, 0, 0);
  return res;
}

long oracle_splitting_rank_k(const SymmetricSpaceEntry& entry, int k, int rank_bound) {
  const int r = entry.rank();
  if (r > rank_bound)
    throw std::invalid_argument("oracle_splitting_rank_k: rank " + std::to_string(r) +
                                " exceeds enumeration bound " + std::to_string(rank_bound));
  if (k < 1 || k > r)
    throw std::invalid_argument("oracle_splitting_rank_k: k out of range 1.." + std::to_string(r));

  const RestrictedRootSystem& sys = shared_root_system(entry.family);
  const auto& pos = sys.positive_roots();
  const int max_rank = r - k;

  long best = r;  // the empty vanishing set
  auto value_of = [&](const IntRowSpan& span) {
    long v = r;
    for (const Root& beta : pos)
      if (span.contains(beta.coeffs)) v += entry.mults.of(beta.cls);
    return v;
  };
  // Every span-closed subset is the closure of an independent set of roots,
  // and the value only grows when the span grows, so independent sets of
  // size exactly r-k suffice.
  auto dfs = [&](auto&& self, int next, const IntRowSpan& span, int count) -> void {
    if (count == max_rank) {
      best = std::max(best, value_of(span));
      return;
    }
    for (std::size_t i = next; i < pos.size(); ++i) {
      if (span.contains(pos[i].coeffs)) continue;
      IntRowSpan grown = span;
      grown.insert(pos[i].coeffs);
      self(self, static_cast<int>(i) + 1, grown, count + 1);
    }
  };
  dfs(dfs, 0, IntRowSpan(r), 0);
  return best;
}

SplitRankProfile profile(const SymmetricSpaceEntry& entry) {
  SplitRankProfile p;
  const long n = dimension(entry);
  for (int k = 0; k <= entry.rank(); ++k) {
    long v = k == 0 ? n : splitting_rank_k(entry, k).srk;
    p.values.push_back(v);
    p.si.push_back(n - v);
  }
  return p;
}

GapResult gap_table(const SymmetricSpaceEntry& entry) {
  if (entry.rank() < 2) throw std::invalid_argument("gap_table: rank >= 2 required");
  auto truncs = truncations(entry);
  long srk = 0;
  for (const auto& t : truncs) srk = std::max(srk, t.dim_total);
  GapResult res;
  long second = -1;
  for (const auto& t : truncs)
    if (t.dim_total < srk) second = std::max(second, t.dim_total);
  if (second < 0) return res;  // all single-node truncations tie
  res.has_gap = true;
  res.gap = srk - second;
  for (auto& t : truncs)
    if (t.dim_total == second) res.second_maximizers.push_back(std::move(t));
  return res;
}

const std::vector<std::string>& ksrk_exception_names() {
  static const std::vector<std::string> names = {
      "SL(3,R)/SO(3)",
      "SO_0(2,3)/SO(2)xSO(3)",  // Sp(2,R)/U(2) in canonical B_2 form
      "G2^2/SO(4)",
      "SL(4,R)/SO(4)",
  };
  return names;
}

bool KsrkReport::ok() const {
  for (const KsrkCheck& c : checks) {
    if (c.known_exception ? c.pass : !c.pass) return false;
  }
  return true;
}

KsrkReport verify_k_srk_inequality(const SymmetricSpaceEntry& entry) {
  KsrkReport report;
  report.space = entry.name;
  SplitRankProfile p = profile(entry);
  report.srk = p.values.size() > 1 ? p.values[1] : p.n();
  const auto& exceptions = ksrk_exception_names();
  bool excepted =
      std::find(exceptions.begin(), exceptions.end(), entry.name) != exceptions.end();
  for (int k = 1; k <= entry.rank(); ++k) {
    KsrkCheck c;
    c.k = k;
    c.srk_k = p.values[k];
    c.bound = report.srk - 2 * (k - 1);
    c.pass = c.srk_k <= c.bound;
    c.known_exception = excepted && k == entry.rank();
    report.checks.push_back(c);
  }
  return report;
}

}  // namespace splitrank
