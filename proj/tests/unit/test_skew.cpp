#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "gen.hpp"
#include "owf/coinduction.hpp"
#include "owf/skew.hpp"

using owf::Word;

namespace {

Word w(const char* s) { return Word::parse(s); }

// F2 acting on Z/5 through a -> +1, b -> +2.
int shift_mod5(const Word& g, int x) {
  int out = x;
  for (std::size_t i = g.size(); i-- > 0;) {
    switch (g[i]) {
      case owf::Generator::a: out += 1; break;
      case owf::Generator::a_inv: out += 4; break;
      case owf::Generator::b: out += 2; break;
      case owf::Generator::b_inv: out += 3; break;
    }
  }
  return out % 5;
}

using Table = owf::CocycleTable<Word, int, Word>;

Table::Operations word_ops() {
  return {[](const Word& g2, const Word& g1) { return g2 * g1; }, shift_mod5,
          [](const Word& h2, const Word& h1) { return h2 * h1; },
          [](const Word& h2, const Word& h1) { return h2 == h1; }};
}

// alpha(g, x) = x-dependent coboundary b(gx) theta(g) b(x)^-1.
Table coboundary_table(int radius) {
  const owf::Homomorphism theta{w("ab"), w("B")};
  const std::array<Word, 5> b{Word{}, w("a"), w("bb"), w("Ab"), w("ba")};
  Table table(word_ops());
  for (const Word& g : owf::ball(radius)) {
    for (int x = 0; x < 5; ++x) table.set(g, x, b[shift_mod5(g, x)] * theta.apply(g) * b[x].inverse());
  }
  return table;
}

std::function<Word(const Word&, const Word&)> left_multiply() {
  return [](const Word& h, const Word& y) { return h * y; };
}

bool action_law_holds(const Table& table) {
  const auto fiber = left_multiply();
  for (const auto& [g2, g1, x] : owf::defined_triples(table)) {
    for (const Word& y : {Word{}, w("b"), w("aB")}) {
      const auto once = owf::skew_apply(table, g1, std::pair{y, x}, fiber);
      const auto twice = owf::skew_apply(table, g2, once, fiber);
      if (twice != owf::skew_apply(table, g2 * g1, std::pair{y, x}, fiber)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("skew_apply examples") {
  const Table table = coboundary_table(2);
  const auto fiber = left_multiply();
  const auto point = std::pair{w("b"), 3};
  CHECK(owf::skew_apply(table, Word{}, point, fiber) == point);
  Table constant(word_ops());
  const owf::Homomorphism theta{w("b"), w("a")};
  for (const Word& g : owf::ball(2)) {
    for (int x = 0; x < 5; ++x) constant.set(g, x, theta.apply(g));
  }
  const auto moved = owf::skew_apply(constant, w("ab"), point, fiber);
  CHECK(moved.first == w("bab"));
  CHECK(moved.second == shift_mod5(w("ab"), 3));
  CHECK_THROWS_AS(owf::skew_apply(table, w("aaa"), point, fiber), owf::UndefinedEntry);
}

TEST_CASE("cocycle_check passes on coboundaries and the action law holds") {
  const Table table = coboundary_table(2);
  const auto triples = owf::defined_triples(table);
  CHECK(!triples.empty());
  const auto report = owf::cocycle_check(table, triples);
  CHECK(report.passed());
  CHECK(report.checked == triples.size());
  CHECK(report.undefined == 0);
  CHECK(action_law_holds(table));
}

TEST_CASE("a perturbed entry fails exactly on triples through it") {
  const Table clean = coboundary_table(2);
  const auto triples = owf::defined_triples(clean);
  gen::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Word g = gen::word_of_length(rng, 1 + static_cast<int>(gen::below(rng, 2)));
    const int x = static_cast<int>(gen::below(rng, 5));
    Table table = clean;
    table.set(g, x, table.at(g, x) * w("a"));
    const auto report = owf::cocycle_check(table, triples);
    std::set<std::tuple<Word, Word, int>> failed(report.failures.begin(), report.failures.end());
    for (const auto& [g2, g1, y] : triples) {
      const bool left = g2 * g1 == g && y == x;
      const bool outer = g2 == g && shift_mod5(g1, y) == x;
      const bool inner = g1 == g && y == x;
      const bool touched = left || outer || inner;
      if (!touched) REQUIRE_FALSE(failed.contains({g2, g1, y}));
      if (touched && !g1.empty() && !g2.empty()) REQUIRE(failed.contains({g2, g1, y}));
    }
    CHECK_FALSE(report.passed());
    CHECK_FALSE(action_law_holds(table));
  }
}

TEST_CASE("unchecked triples are counted as undefined") {
  const Table table = coboundary_table(1);
  const std::vector<owf::CocycleTriple<Word, int>> samples{{w("a"), w("a"), 0}, {w("a"), w("b"), 0}};
  const auto report = owf::cocycle_check(table, samples);
  CHECK(report.undefined == 2);
  CHECK(report.checked == 0);
}

TEST_CASE("delta and gamma form a cocycle into the wreath product") {
  // h = (n -> (k, u)); (h2 h1)(n) = (h2(k1).k, h2(k1).u u1)
  using Fiber = std::map<std::size_t, std::pair<std::size_t, Word>>;
  const owf::Coinduction co{owf::CoinductionConfig{}};
  const owf::ZPoint z = co.base_point();
  owf::CocycleTable<Word, owf::ZPoint, Fiber> table(
      {[](const Word& g2, const Word& g1) { return g2 * g1; },
       [&co](const Word& g, const owf::ZPoint& p) { return co.act(g, p); },
       [](const Fiber& h2, const Fiber& h1) {
         Fiber out;
         for (const auto& [n, e1] : h1) {
           auto it = h2.find(e1.first);
           if (it != h2.end()) out.emplace(n, std::pair{it->second.first, it->second.second * e1.second});
         }
         return out;
       },
       [](const Fiber& lhs, const Fiber& rhs) {
         for (std::size_t n = 0; n < 8; ++n) {
           if (!lhs.contains(n) || !rhs.contains(n) || lhs.at(n) != rhs.at(n)) return false;
         }
         return true;
       }});
  // Every index an inner factor can send n < 8 to.
  std::set<std::size_t> domain;
  for (const Word& g : owf::ball(2)) {
    for (std::size_t n = 0; n < 8; ++n) {
      domain.insert(n);
      domain.insert(co.delta(g, n, z));
    }
  }
  for (const Word& g : owf::ball(4)) {
    Fiber h;
    for (std::size_t n : domain) {
      const auto step = co.step(g, n, z);
      h.emplace(n, std::pair{step.k, step.u});
    }
    table.set(g, z, std::move(h));
  }
  std::vector<owf::CocycleTriple<Word, owf::ZPoint>> samples;
  for (const Word& g2 : owf::ball(2)) {
    for (const Word& g1 : owf::ball(2)) samples.emplace_back(g2, g1, z);
  }
  const auto report = owf::cocycle_check(table, samples);
  CHECK(report.checked == samples.size());
  CHECK(report.passed());
}

TEST_CASE("kernel sampler is uniform and reproducible") {
  owf::KernelSampler sampler(1, 2, 99);
  REQUIRE(sampler.group().dimension() == 3);
  std::map<std::vector<owf::Symbol>, std::uint64_t> counts;
  constexpr std::uint64_t draws = 100000;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[sampler.next().pattern().values()];
  CHECK(counts.size() == 8);
  const double mean = draws / 8.0;
  const double sigma = std::sqrt(draws * (1.0 / 8) * (7.0 / 8));
  for (const auto& [values, count] : counts) CHECK(std::abs(static_cast<double>(count) - mean) < 3 * sigma);

  owf::KernelSampler a(2, 2, 7);
  owf::KernelSampler b(2, 2, 7);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_coefficients() == b.next_coefficients());
  CHECK(owf::uniform_kernel_sample(2, 2, 5).pattern() == owf::uniform_kernel_sample(2, 2, 5).pattern());
  CHECK_THROWS_AS(owf::KernelSampler(owf::max_exhaustive_radius() + 1, 1, 0), owf::ResourceGuard);
}

TEST_CASE("affine window maps push the uniform measure forward to the uniform measure") {
  const auto window = owf::Support::ball(1);
  for (int levels = 1; levels <= 2; ++levels) {
    const owf::KernelGroup domain(window, levels);
    std::size_t maps = 0;
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
      const auto y = owf::tower_map(gen::bits_from_mask(window, bits), levels);
      for (const Word& f : owf::ball(1)) {
        const auto report = owf::affine_pushforward(domain, owf::beta0(f, y));
        REQUIRE(report.uniform());
        ++maps;
      }
    }
    for (const auto& t : domain.elements()) {
      REQUIRE(owf::affine_pushforward(domain, owf::AffineWindowMap{Word{}, t.pattern()}).uniform());
    }
    CHECK(maps == 160);
  }
  // A translation outside the kernel is caught.
  const owf::KernelGroup domain(window, 1);
  owf::Pattern bad = owf::Pattern::zeros(owf::Alphabet::bits(), window);
  bad.set(w("a"), 1);
  CHECK_FALSE(owf::affine_pushforward(domain, owf::AffineWindowMap{Word{}, bad}).uniform());
}

TEST_CASE("pushforward of samples passes a chi-square test") {
  owf::KernelSampler sampler(2, 2, 1234);
  const auto& group = sampler.group();
  const auto window = owf::Support::ball(2);
  gen::Rng rng(3);
  const auto map = owf::beta0(w("a"), owf::tower_map(gen::bits_on(rng, window), 2));
  const owf::KernelGroup target(map.codomain(), 2);
  std::map<std::vector<owf::Symbol>, std::size_t> index;
  for (const auto& k : target.elements()) index.emplace(k.pattern().values(), index.size());
  std::vector<std::uint64_t> observed(index.size(), 0);
  for (int i = 0; i < 64000; ++i) ++observed.at(index.at(map.apply(sampler.next()).pattern().values()));
  const std::vector<double> uniform(index.size(), 1.0 / static_cast<double>(index.size()));
  const auto result = owf::chi_square_goodness_of_fit(observed, uniform);
  CHECK(result.dof == static_cast<int>(index.size()) - 1);
  CHECK(result.p_value > 0.001);
  CHECK(group.dimension() == 7);
}

TEST_CASE("shannon entropy") {
  const std::vector<double> point{1.0, 0.0};
  CHECK(owf::shannon_entropy(point) == 0.0);
  const std::vector<double> four(4, 0.25);
  CHECK(owf::shannon_entropy(four) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  const std::vector<double> dyadic{0.5, 0.25, 0.25};
  CHECK(owf::shannon_entropy(dyadic) == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-12));
  const std::vector<double> negative{1.5, -0.5};
  CHECK_THROWS_AS(owf::shannon_entropy(negative), std::invalid_argument);
  const std::vector<double> short_sum{0.5, 0.4};
  CHECK_THROWS_AS(owf::shannon_entropy(short_sum), std::invalid_argument);
}

TEST_CASE("chi-square reference values") {
  const std::vector<std::uint64_t> flat{50, 50};
  const std::vector<double> half{0.5, 0.5};
  const auto zero = owf::chi_square_goodness_of_fit(flat, half);
  CHECK(zero.statistic == 0.0);
  CHECK(zero.p_value == doctest::Approx(1.0));
  const std::vector<std::uint64_t> skewed{60, 40};
  const auto four = owf::chi_square_goodness_of_fit(skewed, half);
  CHECK(four.statistic == doctest::Approx(4.0));
  CHECK(four.dof == 1);
  CHECK(four.p_value == doctest::Approx(0.0455003).epsilon(1e-5));
  const auto independent = owf::chi_square_independence({{10, 20}, {20, 10}});
  CHECK(independent.statistic == doctest::Approx(20.0 / 3.0));
  CHECK(independent.dof == 1);
  CHECK(independent.p_value == doctest::Approx(0.0098232).epsilon(1e-4));
}
