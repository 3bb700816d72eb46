#include "owf/skew.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <set>
#include <stdexcept>

namespace owf {

KernelSampler::KernelSampler(int r, int level_count, std::uint64_t seed)
    : group_(kernel_group(r, level_count)), rng_(seed) {}

std::uint64_t KernelSampler::next_coefficients() {
  if (group_.dimension() > 64) throw ResourceGuard("packed coefficients need dimension <= 64");
  const std::uint64_t raw = rng_();
  if (group_.dimension() == 64) return raw;
  return raw & ((std::uint64_t{1} << group_.dimension()) - 1);
}

KernelWindow KernelSampler::next() {
  BitVector coefficients(group_.dimension());
  std::uint64_t block = 0;
  for (std::size_t i = 0; i < group_.dimension(); ++i) {
    if (i % 64 == 0) block = rng_();
    coefficients.set(i, (block >> (i % 64)) & 1U);
  }
  return KernelWindow(group_.element(coefficients), group_.level_count());
}

KernelWindow uniform_kernel_sample(int r, int level_count, std::uint64_t seed) {
  return KernelSampler(r, level_count, seed).next();
}

PushforwardReport affine_pushforward(const KernelGroup& domain, const AffineWindowMap& map) {
  const KernelGroup target(map.codomain(), domain.level_count());
  PushforwardReport report;
  report.target_size = std::size_t{1} << target.dimension();
  std::set<std::vector<Symbol>> seen;
  for (const KernelWindow& k : domain.elements()) {
    ++report.domain_size;
    const Pattern image = map.apply(k.pattern());
    if (!target.contains(image)) ++report.images_outside_kernel;
    seen.insert(image.values());
  }
  report.distinct_images = seen.size();
  return report;
}

double shannon_entropy(std::span<const double> weights) {
  double sum = 0;
  double h = 0;
  for (double w : weights) {
    if (!(w >= 0)) throw std::invalid_argument("entropy weights must be non-negative");
    sum += w;
    if (w > 0) h -= w * std::log(w);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("entropy weights must sum to 1");
  return h;
}

namespace {

double upper_tail(double statistic, int dof) {
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

ChiSquareResult chi_square_goodness_of_fit(std::span<const std::uint64_t> observed,
                                           std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.size() < 2) {
    throw std::invalid_argument("goodness of fit needs matching categories (at least two)");
  }
  double total = 0;
  for (std::uint64_t o : observed) total += static_cast<double>(o);
  ChiSquareResult out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probabilities[i];
    if (expected <= 0) throw std::invalid_argument("expected counts must be positive");
    const double d = static_cast<double>(observed[i]) - expected;
    out.statistic += d * d / expected;
  }
  out.dof = static_cast<int>(observed.size()) - 1;
  out.p_value = upper_tail(out.statistic, out.dof);
  return out;
}

ChiSquareResult chi_square_independence(const std::vector<std::vector<std::uint64_t>>& table) {
  if (table.size() < 2 || table.front().size() < 2) {
    throw std::invalid_argument("contingency table must be at least 2 x 2");
  }
  const std::size_t rows = table.size();
  const std::size_t cols = table.front().size();
  std::vector<double> row_sum(rows, 0);
  std::vector<double> col_sum(cols, 0);
  double total = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (table[i].size() != cols) throw std::invalid_argument("ragged contingency table");
    for (std::size_t j = 0; j < cols; ++j) {
      const auto v = static_cast<double>(table[i][j]);
      row_sum[i] += v;
      col_sum[j] += v;
      total += v;
    }
  }
  ChiSquareResult out;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double expected = row_sum[i] * col_sum[j] / total;
      if (expected <= 0) throw std::invalid_argument("empty row or column in contingency table");
      const double d = static_cast<double>(table[i][j]) - expected;
      out.statistic += d * d / expected;
    }
  }
  out.dof = static_cast<int>((rows - 1) * (cols - 1));
  out.p_value = upper_tail(out.statistic, out.dof);
  return out;
}

}  // namespace owf
