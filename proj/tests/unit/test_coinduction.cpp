#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "gen.hpp"
#include "owf/coinduction.hpp"
#include "owf/errors.hpp"

using owf::Coinduction;
using owf::CoinductionConfig;
using owf::Word;
using owf::ZKind;
using owf::ZPoint;

namespace {

Word w(const char* s) { return Word::parse(s); }

CoinductionConfig orbit_config() {
  CoinductionConfig config;
  config.z_kind = ZKind::orbit;
  return config;
}

// F2 again, but without admitting it: forces the bounded-search route.
class OpaqueFree final : public owf::GroupOracle {
 public:
  std::string name() const override { return "opaque-F2"; }
  Word normalize(const Word& x) const override { return x; }
  Word multiply(const Word& x, const Word& y) const override { return x * y; }
  Word invert(const Word& x) const override { return x.inverse(); }
  bool equal(const Word& x, const Word& y) const override { return x == y; }
  Word enumerate(std::uint64_t n) const override { return owf::word_at_index(n); }
  std::uint64_t index_of(const Word& g) const override { return owf::length_lex_index(g); }
};

void check_cocycles(const Coinduction& co, const ZPoint& z, int radius, std::size_t count) {
  const auto words = owf::ball(radius);
  for (const Word& g : words) {
    const ZPoint gz = co.act(g, z);
    for (const Word& h : words) {
      for (std::size_t n = 0; n < count; ++n) {
        const auto first = co.step(g, n, z);
        const auto second = co.step(h, first.k, gz);
        const auto both = co.step(h * g, n, z);
        REQUIRE(both.k == second.k);
        REQUIRE(both.u == second.u * first.u);
      }
    }
  }
}

}  // namespace

TEST_CASE("f_action examples, action law and freeness") {
  const Coinduction co{CoinductionConfig{}};
  const ZPoint z = co.base_point();
  CHECK(co.f_action(Word{}, w("ab"), z) == w("ab"));
  CHECK(co.f_action(w("a"), Word{}, z) == w("AA"));
  const auto small = owf::ball(2);
  for (const Word& g : owf::ball(2)) {
    for (const Word& f1 : small) {
      for (const Word& f2 : small) {
        REQUIRE(co.f_action(f1, co.f_action(f2, g, z), z) == co.f_action(f1 * f2, g, z));
      }
    }
  }
  // Commutes with left translation.
  for (const Word& g : small) {
    for (const Word& h : small) {
      REQUIRE(co.f_action(w("aB"), h * g, z) == h * co.f_action(w("aB"), g, z));
    }
  }
  const auto fs = owf::ball(4);
  for (const Word& g : owf::ball(3)) {
    for (const Word& f : fs) {
      if (!f.empty()) REQUIRE(co.f_action(f, g, z) != g);
    }
  }
}

TEST_CASE("transversal of the default configuration is frozen") {
  const Coinduction co{CoinductionConfig{}};
  const ZPoint z = co.base_point();
  const auto c = co.transversal(oracle::frozen::kEvenTransversal.size(), z);
  for (std::size_t n = 0; n < c.size(); ++n) CHECK(c[n].to_string() == oracle::frozen::kEvenTransversal[n]);
  CHECK(c[0].empty());
  CHECK(c[1] == w("a"));
  CHECK(c[2] == w("b"));
}

TEST_CASE("transversal agrees with the parity oracle") {
  const Coinduction co{CoinductionConfig{}};
  const ZPoint z = co.base_point();
  CHECK(oracle::even_transversal(12, 4) == oracle::frozen::kEvenTransversal);
  const auto expected = oracle::even_transversal(40, 5);
  REQUIRE(expected.size() == 40);
  const auto c = co.transversal(40, z);
  for (std::size_t n = 0; n < 40; ++n) REQUIRE(c[n].to_string() == expected[n]);
  // Distinct orbits, and greedy: every earlier element shares an orbit with an earlier entry.
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) REQUIRE_FALSE(co.solve(c[j], c[i], z).has_value());
  }
}

TEST_CASE("delta and gamma examples") {
  const Coinduction co{CoinductionConfig{}};
  const ZPoint z = co.base_point();
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(co.delta(Word{}, n, z) == n);
    CHECK(co.gamma(Word{}, n, z).empty());
  }
  CHECK(co.delta(w("a"), 0, z) == 1);
  CHECK(co.delta(w("a"), 1, z) == 0);
  CHECK(co.gamma(w("a"), 1, z) == w("a"));
  CHECK(co.gamma(w("a"), 0, z).empty());
  for (const auto& [key, step] : oracle::frozen::kSteps) {
    const auto got = co.step(w(key.first.c_str()), key.second, z);
    CHECK(got.k == step.k);
    CHECK(got.u.to_string() == step.u);
  }
}

TEST_CASE("step satisfies its defining equation") {
  const Coinduction co{CoinductionConfig{}};
  const ZPoint z = co.base_point();
  for (const Word& g : owf::ball(2)) {
    for (std::size_t n = 0; n < 8; ++n) {
      const auto [k, u] = co.step(g, n, z);
      // g c(n) = u^-1 . c(k)
      REQUIRE(g * co.c(n, z) == co.f_action(u.inverse(), co.c(k, z), z));
    }
  }
}

TEST_CASE("delta and gamma cocycle identities on ball(2), n < 8") {
  const Coinduction co{CoinductionConfig{}};
  check_cocycles(co, co.base_point(), 2, 8);
}

TEST_CASE("psi examples and round trip") {
  const Coinduction co{CoinductionConfig{}};
  const ZPoint z = co.base_point();
  for (std::size_t n = 0; n < 8; ++n) CHECK(co.psi(Word{}, n, z) == co.c(n, z));
  CHECK(co.psi(w("a"), 0, z) == w("aa"));
  for (const Word& f : owf::ball(3)) {
    for (std::size_t n = 0; n < 8; ++n) {
      const auto [f2, n2] = co.psi_inverse(co.psi(f, n, z), z);
      REQUIRE(f2 == f);
      REQUIRE(n2 == n);
    }
  }
}

TEST_CASE("psi is injective and its image covers balls") {
  const Coinduction co{CoinductionConfig{}};
  const ZPoint z = co.base_point();
  std::set<Word> seen;
  const auto fs = owf::ball(3);
  for (const Word& f : fs) {
    for (std::size_t n = 0; n < 40; ++n) REQUIRE(seen.insert(co.psi(f, n, z)).second);
  }
  for (const Word& g : owf::ball(2)) CHECK(seen.contains(g));
  for (const Word& g : owf::ball(4)) {
    const auto [f, n] = co.psi_inverse(g, z);
    REQUIRE(co.psi(f, n, z) == g);
  }
}

TEST_CASE("psi on the base index is the alpha formula") {
  for (const CoinductionConfig& config : {CoinductionConfig{}, orbit_config()}) {
    const Coinduction co{config};
    const ZPoint z = co.base_point();
    for (const Word& f : owf::ball(3)) {
      const Word expected = co.alpha(config.iota.apply(f).inverse(), z).inverse();
      REQUIRE(co.psi(f, 0, z) == expected);
    }
  }
}

TEST_CASE("conjugation identity for psi") {
  for (const CoinductionConfig& config : {CoinductionConfig{}, orbit_config()}) {
    const Coinduction co{config};
    const ZPoint z = co.base_point();
    for (const Word& g : owf::ball(1)) {
      const ZPoint gz = co.act(g, z);
      for (const Word& f : owf::ball(2)) {
        for (std::size_t n = 0; n < 6; ++n) {
          const auto [k, u] = co.step(g.inverse(), n, gz);
          REQUIRE(g.inverse() * co.psi(f, n, gz) == co.psi(u * f, k, z));
        }
      }
    }
  }
}

TEST_CASE("orbit configuration: transitive action and alpha cocycle") {
  const Coinduction co{orbit_config()};
  const ZPoint z = co.base_point();
  const auto words = owf::ball(2);
  for (const Word& f1 : words) {
    REQUIRE(co.act(co.alpha(f1, z), z) == co.act_free(f1, z));
    for (const Word& f2 : words) {
      REQUIRE(co.act_free(f1, co.act_free(f2, z)) == co.act_free(f1 * f2, z));
      const Word lhs = co.alpha(f2 * f1, z);
      const Word rhs = co.alpha(f2, co.act_free(f1, z)) * co.alpha(f1, z);
      REQUIRE(lhs == rhs);
    }
  }
  std::set<Word> images;
  for (const Word& f : owf::ball(4)) REQUIRE(images.insert(co.alpha(f, z)).second);
  std::set<ZPoint> reached;
  for (const Word& f : owf::ball(3)) reached.insert(co.act_free(f, z));
  for (const Word& g : owf::ball(2)) CHECK(reached.contains(co.act(g, z)));
}

TEST_CASE("orbit configuration: freeness, transversal and cocycles") {
  const Coinduction co{orbit_config()};
  const ZPoint z = co.base_point();
  for (const Word& g : owf::ball(2)) {
    for (const Word& f : owf::ball(3)) {
      if (!f.empty()) REQUIRE(co.f_action(f, g, z) != g);
    }
  }
  const auto c = co.transversal(12, z);
  CHECK(c[0].empty());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) REQUIRE_FALSE(co.solve(c[j], c[i], z).has_value());
  }
  check_cocycles(co, z, 1, 6);
  const ZPoint other = co.act(w("ab"), z);
  check_cocycles(co, other, 1, 4);
}

TEST_CASE("bounded search reproduces the folded transversal") {
  CoinductionConfig config;
  config.group = std::make_shared<OpaqueFree>();
  config.search_radius = 4;
  config.search_certified = true;
  const Coinduction co{config};
  const ZPoint z = co.base_point();
  const auto c = co.transversal(8, z);
  for (std::size_t n = 0; n < 8; ++n) CHECK(c[n].to_string() == oracle::frozen::kEvenTransversal[n]);
  CHECK(co.delta(w("a"), 1, z) == 0);
  CHECK(co.gamma(w("a"), 1, z) == w("a"));
}

TEST_CASE("bounded search never guesses") {
  CoinductionConfig config;
  config.group = std::make_shared<OpaqueFree>();
  CHECK_THROWS_AS(Coinduction{config}, owf::ConfigError);
  config.search_radius = 2;
  const Coinduction co{config};
  CHECK_THROWS_AS(co.c(1, co.base_point()), owf::UndecidableMembership);
}

TEST_CASE("configuration is validated") {
  CoinductionConfig config;
  config.iota = {w("a"), w("a")};
  CHECK_THROWS_AS(Coinduction{config}, owf::ConfigError);
  config.iota = {w("a"), w("b")};
  CHECK_THROWS_AS(Coinduction{config}, owf::ConfigError);
  config = {};
  config.theta = {w("a"), w("A")};
  CHECK_THROWS_AS(Coinduction{config}, owf::ConfigError);
  CHECK(owf::z_kind_from_string("orbit") == ZKind::orbit);
  CHECK_THROWS_AS(owf::z_kind_from_string("torus"), owf::ConfigError);
}

TEST_CASE("transversal depth cap is reported") {
  CoinductionConfig config;
  config.max_depth = 4;
  const Coinduction co{config};
  CHECK_NOTHROW(co.c(3, co.base_point()));
  try {
    (void)co.c(4, co.base_point());
    FAIL("expected InsufficientDepth");
  } catch (const owf::InsufficientDepth& e) {
    CHECK(e.needed_depth() == 4);
  }
}

TEST_CASE("non-identity theta") {
  CoinductionConfig config;
  config.theta = {w("ab"), w("b")};
  const Coinduction co{config};
  const ZPoint z = co.base_point();
  CHECK(co.alpha(w("a"), z) == w("ab"));
  check_cocycles(co, z, 1, 6);
  for (const Word& f : owf::ball(2)) {
    for (std::size_t n = 0; n < 6; ++n) {
      const auto [f2, n2] = co.psi_inverse(co.psi(f, n, z), z);
      REQUIRE(f2 == f);
      REQUIRE(n2 == n);
    }
  }
}
