#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "owf/errors.hpp"
#include "owf/ow_tower.hpp"

namespace owf {

// Partial cocycle alpha: G x X -> H, stored entry by entry. G and X need a
// strict weak order; the group structure comes in through Operations.
template <class G, class X, class H>
class CocycleTable {
 public:
  struct Operations {
    std::function<G(const G&, const G&)> group_mul;  // (g2, g1) -> g2 g1
    std::function<X(const G&, const X&)> act;        // g . x
    std::function<H(const H&, const H&)> fiber_mul;  // (h2, h1) -> h2 h1
    std::function<bool(const H&, const H&)> fiber_equal;
  };

  explicit CocycleTable(Operations ops) : ops_(std::move(ops)) {}

  const Operations& ops() const noexcept { return ops_; }

  void set(const G& g, const X& x, H value) { entries_.insert_or_assign({g, x}, std::move(value)); }
  bool defined(const G& g, const X& x) const { return entries_.contains({g, x}); }
  std::optional<H> find(const G& g, const X& x) const {
    auto it = entries_.find({g, x});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  const H& at(const G& g, const X& x) const {
    auto it = entries_.find({g, x});
    if (it == entries_.end()) throw UndefinedEntry("cocycle table has no entry at this (g, x)");
    return it->second;
  }
  const std::map<std::pair<G, X>, H>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  Operations ops_;
  std::map<std::pair<G, X>, H> entries_;
};

// g . (y, x) = (alpha(g, x) . y, g . x)
template <class G, class X, class H, class Y>
std::pair<Y, X> skew_apply(const CocycleTable<G, X, H>& table, const G& g, const std::pair<Y, X>& point,
                           const std::function<Y(const H&, const Y&)>& fiber_act) {
  const H& h = table.at(g, point.second);
  return {fiber_act(h, point.first), table.ops().act(g, point.second)};
}

// (g2, g1, x)
template <class G, class X>
using CocycleTriple = std::tuple<G, G, X>;

template <class G, class X>
struct CocycleReport {
  std::size_t checked = 0;
  std::size_t undefined = 0;
  std::vector<CocycleTriple<G, X>> failures;

  bool passed() const noexcept { return failures.empty(); }
};

// Tests alpha(g2 g1, x) = alpha(g2, g1 x) alpha(g1, x) on every sample whose
// three entries are all defined.
template <class G, class X, class H>
CocycleReport<G, X> cocycle_check(const CocycleTable<G, X, H>& table,
                                  const std::vector<CocycleTriple<G, X>>& samples) {
  CocycleReport<G, X> report;
  const auto& ops = table.ops();
  for (const auto& sample : samples) {
    const auto& [g2, g1, x] = sample;
    const auto left = table.find(ops.group_mul(g2, g1), x);
    const auto outer = table.find(g2, ops.act(g1, x));
    const auto inner = table.find(g1, x);
    if (!left || !outer || !inner) {
      ++report.undefined;
      continue;
    }
    ++report.checked;
    if (!ops.fiber_equal(*left, ops.fiber_mul(*outer, *inner))) report.failures.push_back(sample);
  }
  return report;
}

// Every triple (g2, g1, x) with all three entries present in the table.
template <class G, class X, class H>
std::vector<CocycleTriple<G, X>> defined_triples(const CocycleTable<G, X, H>& table) {
  std::vector<CocycleTriple<G, X>> out;
  const auto& ops = table.ops();
  for (const auto& [key1, v1] : table.entries()) {
    const auto& [g1, x] = key1;
    const X moved = ops.act(g1, x);
    for (const auto& [key2, v2] : table.entries()) {
      if (!(key2.second == moved)) continue;
      if (table.defined(ops.group_mul(key2.first, g1), x)) out.emplace_back(key2.first, g1, x);
    }
  }
  return out;
}

// Seeded uniform sampler on the kernel group of ball(r): each draw picks
// independent fair coefficients for the kernel basis.
class KernelSampler {
 public:
  KernelSampler(int r, int level_count, std::uint64_t seed);

  const KernelGroup& group() const noexcept { return group_; }
  KernelWindow next();
  // Basis coefficients of the next draw, packed (dimension <= 64).
  std::uint64_t next_coefficients();

 private:
  KernelGroup group_;
  std::mt19937_64 rng_;
};

KernelWindow uniform_kernel_sample(int r, int level_count, std::uint64_t seed);

// Image of the whole kernel group under an affine window map.
struct PushforwardReport {
  std::size_t domain_size = 0;
  std::size_t target_size = 0;
  std::size_t distinct_images = 0;
  std::size_t images_outside_kernel = 0;

  // The map is a bijection onto the target kernel group, so it carries the
  // uniform measure to the uniform measure.
  bool uniform() const noexcept {
    return images_outside_kernel == 0 && distinct_images == domain_size &&
           distinct_images == target_size;
  }
};
PushforwardReport affine_pushforward(const KernelGroup& domain, const AffineWindowMap& map);

// -sum w log w in nats; weights must be non-negative and sum to 1 within 1e-9.
double shannon_entropy(std::span<const double> weights);

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  double p_value = 1;
};
ChiSquareResult chi_square_goodness_of_fit(std::span<const std::uint64_t> observed,
                                           std::span<const double> probabilities);
// Pearson test of independence on a contingency table (rows x columns).
ChiSquareResult chi_square_independence(const std::vector<std::vector<std::uint64_t>>& table);

}  // namespace owf
