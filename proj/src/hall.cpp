#include "splitrank/hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitrank {

long q_sum_dim(const SymmetricSpaceEntry& entry, const std::vector<Covector>& covectors,
               const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("q_sum_dim: empty subset");
  const RestrictedRootSystem& sys = shared_root_system(entry.family);
  long acc = 0;
  for (const Root& beta : sys.positive_roots()) {
    bool vanishes_on_all = true;
    for (int i : subset)
      if (!evaluate(beta, covectors.at(static_cast<std::size_t>(i))).is_zero()) {
        vanishes_on_all = false;
        break;
      }
    if (!vanishes_on_all) acc += entry.mults.of(beta.cls);
  }
  return acc;
}

CardinalityReport verify_cardinality(const SymmetricSpaceEntry& entry,
                                     const std::vector<Covector>& frame) {
  const int r = entry.rank();
  if (static_cast<int>(frame.size()) != r)
    throw std::invalid_argument("verify_cardinality: frame size must equal the rank");
  RatMat m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = frame[i].values[j];
  if (rational_rank(m) != r)
    throw std::invalid_argument("verify_cardinality: frame does not span");

  CardinalityReport report;
  report.space = entry.name;
  report.n = dimension(entry);
  report.r = r;
  report.srk = splitting_rank(entry).srk;
  report.ok = true;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    long k = static_cast<long>(subset.size());
    long q = q_sum_dim(entry, frame, subset);
    long bound = 2 * k + report.n - report.srk - 2;
    if (q < bound) {
      report.ok = false;
      report.violations.push_back({subset, q, bound});
    }
  }
  return report;
}

long MatchingInstance::total_demand() const {
  long total = 0;
  for (long d : demands) total += d;
  return total;
}

MatchingInstance build_instance(const SymmetricSpaceEntry& entry,
                                const std::vector<Covector>& frame, long srk,
                                bool legacy_first_demand_rank) {
  if (frame.empty()) throw std::invalid_argument("build_instance: empty frame");
  const RestrictedRootSystem& sys = shared_root_system(entry.family);
  MatchingInstance inst;
  inst.left_count = static_cast<int>(frame.size());
  long n = dimension(entry);
  inst.demands.assign(frame.size(), 2);
  inst.demands[0] = legacy_first_demand_rank ? entry.rank() : n - srk;

  const auto& pos = sys.positive_roots();
  for (std::size_t ri = 0; ri < pos.size(); ++ri)
    for (int copy = 1; copy <= entry.mults.of(pos[ri].cls); ++copy)
      inst.slots.push_back({static_cast<int>(ri), copy});

  inst.edge.assign(frame.size(), std::vector<bool>(pos.size(), false));
  for (std::size_t v = 0; v < frame.size(); ++v)
    for (std::size_t ri = 0; ri < pos.size(); ++ri)
      inst.edge[v][ri] = !evaluate(pos[ri], frame[v]).is_zero();
  return inst;
}

namespace {

// One Kuhn augmentation step: find an augmenting path from a demand unit of
// left node `v` through slots.
bool augment(const MatchingInstance& inst, int v, std::vector<int>& slot_owner,
             std::vector<bool>& visited) {
  for (int s = 0; s < static_cast<int>(inst.slots.size()); ++s) {
    if (visited[s] || !inst.slot_adjacent(v, s)) continue;
    visited[s] = true;
    if (slot_owner[s] < 0 || augment(inst, slot_owner[s], slot_owner, visited)) {
      slot_owner[s] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

MatchingOutcome find_matching(const MatchingInstance& inst) {
  std::vector<int> slot_owner(inst.slots.size(), -1);
  std::vector<long> matched(inst.left_count, 0);

  for (int v = 0; v < inst.left_count; ++v) {
    for (long unit = 0; unit < inst.demands[v]; ++unit) {
      std::vector<bool> visited(inst.slots.size(), false);
      if (augment(inst, v, slot_owner, visited)) ++matched[v];
    }
  }

  MatchingOutcome out;
  out.assignment.assign(inst.left_count, {});
  for (int s = 0; s < static_cast<int>(inst.slots.size()); ++s)
    if (slot_owner[s] >= 0) out.assignment[slot_owner[s]].push_back(s);

  out.feasible = true;
  for (int v = 0; v < inst.left_count; ++v)
    if (matched[v] < inst.demands[v]) out.feasible = false;
  if (out.feasible) {
    if (!assignment_valid(inst, out))
      throw std::logic_error("find_matching produced an invalid assignment");
    return out;
  }

  // Alternating reachability from the unsaturated left nodes: the reachable
  // left set is Hall-deficient.
  std::vector<bool> left_reached(inst.left_count, false);
  std::vector<int> queue;
  for (int v = 0; v < inst.left_count; ++v)
    if (matched[v] < inst.demands[v]) {
      left_reached[v] = true;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int s = 0; s < static_cast<int>(inst.slots.size()); ++s) {
      if (!inst.slot_adjacent(v, s) || slot_owner[s] < 0) continue;
      int w = slot_owner[s];
      if (!left_reached[w]) {
        left_reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < inst.left_count; ++v)
    if (left_reached[v]) out.deficient.push_back(v);
  out.assignment.clear();
  return out;
}

bool assignment_valid(const MatchingInstance& inst, const MatchingOutcome& outcome) {
  if (!outcome.feasible) return false;
  if (static_cast<int>(outcome.assignment.size()) != inst.left_count) return false;
  std::vector<bool> used(inst.slots.size(), false);
  for (int v = 0; v < inst.left_count; ++v) {
    if (static_cast<long>(outcome.assignment[static_cast<std::size_t>(v)].size()) !=
        inst.demands[static_cast<std::size_t>(v)])
      return false;
    for (int s : outcome.assignment[static_cast<std::size_t>(v)]) {
      if (s < 0 || s >= static_cast<int>(inst.slots.size())) return false;
      if (!inst.slot_adjacent(v, s)) return false;
      if (used[static_cast<std::size_t>(s)]) return false;
      used[static_cast<std::size_t>(s)] = true;
    }
  }
  return true;
}

bool hall_condition_exhaustive(const MatchingInstance& inst) {
  const int L = inst.left_count;
  for (unsigned mask = 1; mask < (1u << L); ++mask) {
    long demand = 0;
    long neighborhood = 0;
    for (int s = 0; s < static_cast<int>(inst.slots.size()); ++s) {
      for (int v = 0; v < L; ++v)
        if ((mask & (1u << v)) && inst.slot_adjacent(v, s)) {
          ++neighborhood;
          break;
        }
    }
    for (int v = 0; v < L; ++v)
      if (mask & (1u << v)) demand += inst.demands[v];
    if (demand > neighborhood) return false;
  }
  return true;
}

std::vector<Covector> random_spanning_frame(int rank, Rng& rng) {
  for (;;) {
    IntMat m(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) m(i, j) = rng.uniform(-3, 3);
    if (row_space_rank(m) != rank) continue;
    std::vector<Covector> frame;
    for (int i = 0; i < rank; ++i) {
      Covector v;
      v.values.resize(rank);
      for (int j = 0; j < rank; ++j) v.values[j] = Rational(m(i, j));
      frame.push_back(std::move(v));
    }
    return frame;
  }
}

}  // namespace splitrank
