#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <random>
#include <thread>

#include "owf/ow_tower.hpp"
#include "owf/skew.hpp"
#include "owf_cli/commands.hpp"

namespace owf::cli {

namespace {

constexpr std::uint64_t kBlock = 8192;

struct Tally {
  std::array<std::uint64_t, 4> marginal{};
  std::array<std::array<std::uint64_t, 4>, 4> joint{};  // [symbol at 1][symbol at a]
  std::uint64_t ones = 0;
  std::uint64_t bits = 0;

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < 4; ++i) {
      marginal[i] += other.marginal[i];
      for (std::size_t j = 0; j < 4; ++j) joint[i][j] += other.joint[i][j];
    }
    ones += other.ones;
    bits += other.bits;
  }
};

// Each block draws from its own stream derived from (seed, block), so the
// result does not depend on how blocks are spread over threads.
Tally run_block(std::uint64_t seed, std::uint64_t block, std::uint64_t count, double bias) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution coin(bias);
  const SupportPtr window = Support::ball(2);
  const std::size_t at_one = Support::ball(1)->find(Word{});
  const std::size_t at_a = Support::ball(1)->find(letter(Generator::a));
  Tally tally;
  std::vector<Symbol> values(window->size());
  for (std::uint64_t s = 0; s < count; ++s) {
    for (auto& v : values) {
      v = coin(rng) ? 1 : 0;
      tally.ones += v;
    }
    tally.bits += values.size();
    const Pattern y = ow_map(Pattern(Alphabet::bits(), window, values)).pairs();
    const Symbol u = y.value(at_one);
    const Symbol v = y.value(at_a);
    ++tally.marginal[u];
    ++tally.joint[u][v];
  }
  return tally;
}

}  // namespace

Report factor_demo(const LoadedConfig& config, const Options& options) {
  const std::uint64_t samples = options.samples.value_or(100000);
  if (samples < 10000) throw UsageError("factor-demo needs --samples >= 10000");
  if (!(options.bias >= 0.0 && options.bias <= 1.0)) throw UsageError("--bias must lie in [0, 1]");
  // The pair pattern on ball(1) must list 1 and a in this order.
  const SupportPtr target = Support::ball(1);

  Report report;
  report.command = "factor-demo";
  report.config_digest = config_digest(config.canonical);
  report.seed = options.seed;

  Tally tally;
  report.run("sampling", [&](json& d) {
    const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
    const std::uint64_t workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<Tally> results(blocks);
    for (std::uint64_t start = 0; start < blocks; start += workers) {
      std::vector<std::future<Tally>> wave;
      for (std::uint64_t b = start; b < std::min(blocks, start + workers); ++b) {
        const std::uint64_t count = std::min(kBlock, samples - b * kBlock);
        wave.push_back(std::async(std::launch::async, run_block, options.seed, b, count, options.bias));
      }
      for (std::size_t i = 0; i < wave.size(); ++i) results[start + i] = wave[i].get();
    }
    for (const Tally& t : results) tally.merge(t);
    d["samples"] = samples;
    d["input_window_cells"] = Support::ball(2)->size();
    d["bias"] = options.bias;
    d["input_ones_fraction"] = static_cast<double>(tally.ones) / static_cast<double>(tally.bits);
    d["marginal_counts"] = tally.marginal;
    return target->find(Word{}) < target->find(letter(Generator::a));
  });

  report.run("marginal at 1 is uniform on 4 symbols", [&](json& d) {
    const std::array<double, 4> uniform{0.25, 0.25, 0.25, 0.25};
    const ChiSquareResult r = chi_square_goodness_of_fit(tally.marginal, uniform);
    d["statistic"] = r.statistic;
    d["dof"] = r.dof;
    d["p_value"] = r.p_value;
    d["threshold"] = 0.001;
    return r.p_value > 0.001;
  });
  report.run("outputs at 1 and a are independent", [&](json& d) {
    std::vector<std::vector<std::uint64_t>> table;
    for (const auto& row : tally.joint) table.emplace_back(row.begin(), row.end());
    const ChiSquareResult r = chi_square_independence(table);
    d["statistic"] = r.statistic;
    d["dof"] = r.dof;
    d["p_value"] = r.p_value;
    d["threshold"] = 0.001;
    return r.p_value > 0.001;
  });
  report.run("entropy of the marginal is log 4", [&](json& d) {
    std::array<double, 4> weights{};
    for (std::size_t i = 0; i < 4; ++i) weights[i] = static_cast<double>(tally.marginal[i]) / static_cast<double>(samples);
    const double sum = weights[0] + weights[1] + weights[2] + weights[3];
    for (double& w : weights) w /= sum;
    const double h = shannon_entropy(weights);
    d["entropy_nats"] = h;
    d["log4"] = std::log(4.0);
    d["tolerance"] = 0.01;
    return std::abs(h - std::log(4.0)) < 0.01;
  });
  return report;
}

}  // namespace owf::cli
