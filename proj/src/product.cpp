#include "splitrank/product.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace splitrank {

std::vector<long> min_plus_convolve(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("min_plus_convolve: empty profile");
  std::vector<long> out(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    long best = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k < i || k - i >= b.size()) continue;
      long v = a[i] + b[k - i];
      if (best < 0 || v < best) best = v;
    }
    out[k] = best;
  }
  return out;
}

ProductSpace::ProductSpace(std::vector<SymmetricSpaceEntry> fs) : factors(std::move(fs)) {
  if (factors.empty()) throw std::invalid_argument("ProductSpace: needs at least one factor");
  for (const auto& f : factors)
    if (f.is_point) throw std::invalid_argument("ProductSpace: point is not a factor");
  std::sort(factors.begin(), factors.end(),
            [](const SymmetricSpaceEntry& a, const SymmetricSpaceEntry& b) {
              return a.name < b.name;
            });
}

int ProductSpace::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank();
  return r;
}

long ProductSpace::dim() const {
  long n = 0;
  for (const auto& f : factors) n += dimension(f);
  return n;
}

std::string ProductSpace::name() const {
  std::string out = factors.front().name;
  for (std::size_t i = 1; i < factors.size(); ++i) out += " x " + factors[i].name;
  return out;
}

const SplitRankProfile& irreducible_profile(const SymmetricSpaceEntry& entry) {
  static std::mutex mu;
  static std::map<std::string, SplitRankProfile> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(entry.name);
  if (it == cache.end()) it = cache.emplace(entry.name, profile(entry)).first;
  return it->second;
}

ProductProfile si_profile(const ProductSpace& p) {
  ProductProfile acc;
  const SplitRankProfile& first = irreducible_profile(p.factors.front());
  acc.profile = first;
  acc.witness.resize(first.si.size());
  for (std::size_t k = 0; k < first.si.size(); ++k)
    acc.witness[k] = {static_cast<int>(k)};

  for (std::size_t f = 1; f < p.factors.size(); ++f) {
    const SplitRankProfile& fac = irreducible_profile(p.factors[f]);
    std::vector<long> si(acc.profile.si.size() + fac.si.size() - 1);
    std::vector<std::vector<int>> wit(si.size());
    for (std::size_t k = 0; k < si.size(); ++k) {
      long best = -1;
      std::vector<int> best_wit;
      for (std::size_t j = 0; j < fac.si.size(); ++j) {
        if (k < j || k - j >= acc.profile.si.size()) continue;
        long v = acc.profile.si[k - j] + fac.si[j];
        std::vector<int> w = acc.witness[k - j];
        w.push_back(static_cast<int>(j));
        if (best < 0 || v < best || (v == best && w < best_wit)) {
          best = v;
          best_wit = std::move(w);
        }
      }
      si[k] = best;
      wit[k] = std::move(best_wit);
    }
    long n = acc.profile.n() + fac.n();
    acc.profile.si = std::move(si);
    acc.profile.values.assign(acc.profile.si.size(), 0);
    for (std::size_t k = 0; k < acc.profile.si.size(); ++k)
      acc.profile.values[k] = n - acc.profile.si[k];
    acc.witness = std::move(wit);
  }
  return acc;
}

const std::vector<std::string>& forbidden_factor_names() {
  static const std::vector<std::string> names = {
      "H^2",
      "SL(3,R)/SO(3)",
      "SO_0(2,3)/SO(2)xSO(3)",  // Sp(2,R)/U(2)
      "G2^2/SO(4)",
      "SL(4,R)/SO(4)",
  };
  return names;
}

std::optional<std::string> forbidden_factor(const ProductSpace& p) {
  const auto& bad = forbidden_factor_names();
  for (const auto& f : p.factors)
    if (std::find(bad.begin(), bad.end(), f.name) != bad.end()) return f.name;
  return std::nullopt;
}

ProductBoundReport verify_product_bound(const ProductSpace& p) {
  if (auto bad = forbidden_factor(p))
    throw std::invalid_argument("product has a forbidden direct factor: " + *bad);
  ProductBoundReport report;
  report.space = p.name();
  ProductProfile pp = si_profile(p);
  report.ok = true;
  for (int k = 1; k <= p.rank(); ++k) {
    ProductBoundCheck c;
    c.k = k;
    c.si_k = pp.profile.si[k];
    c.bound = pp.profile.si[1] + 2 * (k - 1);
    c.pass = c.si_k >= c.bound;
    c.witness = pp.witness[k];
    if (!c.pass) report.ok = false;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace splitrank
