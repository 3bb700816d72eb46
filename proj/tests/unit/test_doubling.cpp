#include <doctest.h>

#include "gen.hpp"
#include "owf/doubling.hpp"
#include "owf/errors.hpp"

using owf::DoublingConfig;
using owf::Move;
using owf::Pattern;
using owf::Support;
using owf::Word;

namespace {

Word w(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("t_map reads the designated component at the identity") {
  const DoublingConfig config;
  gen::Rng rng(51);
  const Pattern x = gen::symbols_on(rng, config.alphabet(), Support::ball(3));
  const auto v = x.at(Word{});
  CHECK(owf::t_map(config, Move::a, x) == owf::shift(config.first(v), x));
  CHECK(owf::t_map(config, Move::b, x) == owf::shift(config.second(v), x));
  for (const Word& s : config.S) {
    const Pattern constant = Pattern::constant(config.alphabet(), Support::ball(3), config.encode(s, s));
    const Pattern moved = owf::t_map(config, Move::a, constant);
    CHECK(moved == owf::shift(s, constant));
    CHECK(owf::restrict(moved, owf::intersect(moved.support_ptr(), constant.support_ptr())) ==
          owf::restrict(constant, owf::intersect(moved.support_ptr(), constant.support_ptr())));
  }
  CHECK_THROWS_AS(owf::t_map(config, Move::a, owf::restrict(x, std::vector<Word>{w("a")})), owf::SupportError);
}

TEST_CASE("encoding examples for z0") {
  const DoublingConfig config;
  const Pattern x = owf::encoding_pattern(config, Support::ball(3));
  const auto checks = owf::z_checks(config, x, 3);
  CHECK(checks.z0);
  CHECK(checks.preimages_a == 1);
  CHECK(checks.preimages_b == 1);
  Pattern two = x;
  two.set(w("b"), config.encode(w("b"), w("b")));
  CHECK(owf::preimage_count(config, Move::a, two) == 2);
  CHECK_FALSE(owf::z_checks(config, two, 1).z0);
}

TEST_CASE("left-translation encoding is fixed by T_a") {
  const DoublingConfig config;
  const Pattern x = owf::encoding_pattern(config, Support::ball(3));
  const auto checks = owf::z_checks(config, x, 3);
  CHECK_FALSE(checks.z2);
  REQUIRE(checks.fixing_word.has_value());
  CHECK(*checks.fixing_word == w("a"));
}

TEST_CASE("twisted witness passes z0, z1 and z2") {
  const DoublingConfig config;
  for (std::uint64_t seed : {0ULL, 1ULL, 0x5eedULL}) {
    const Pattern x = owf::twisted_pattern(Support::ball(4), seed);
    const auto checks = owf::z_checks(config, x, 3);
    CHECK(checks.z0);
    CHECK(checks.z2);
    CHECK(checks.words_checked == 52);
    CHECK(owf::z1_certificate(config, x).passed());
    CHECK(owf::z_checks(config, owf::twisted_pattern(Support::ball(6), seed), 5).z2);
  }
}

TEST_CASE("twisted witness is the encoding of its table action") {
  const auto cells = owf::ball(3);
  const DoublingConfig table = owf::twisted_config(cells, 17);
  CHECK(owf::encoding_pattern(table, Support::make(cells)) == owf::twisted_pattern(Support::make(cells), 17));
  for (const Word& h : cells) {
    const auto [sa, sb] = table.multipliers(h);
    CHECK(sa != sb);
  }
  CHECK_THROWS_AS(table.multipliers(w("aaaa")), owf::UndefinedEntry);
}

TEST_CASE("T-orbits stay in G-orbits with multipliers in S") {
  const DoublingConfig config;
  gen::Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const Pattern x = gen::symbols_on(rng, config.alphabet(), Support::ball(3));
    for (Move m : {Move::a, Move::b}) {
      const Pattern y = owf::t_map(config, m, x);
      bool related = false;
      for (const Word& s : config.S) related = related || y == owf::shift(s, x);
      REQUIRE(related);
    }
  }
}

TEST_CASE("local z0 criterion equals preimage search") {
  const DoublingConfig config;
  gen::Rng rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const Pattern x = gen::symbols_on(rng, config.alphabet(), Support::ball(2));
    for (Move m : {Move::a, Move::b}) {
      REQUIRE(owf::preimage_count(config, m, x) == owf::preimage_count_by_search(config, m, x));
    }
  }
}

TEST_CASE("z checks report missing cells") {
  const DoublingConfig config;
  const Pattern x = owf::twisted_pattern(Support::ball(1), 0);
  CHECK_THROWS_AS(owf::z_checks(config, x, 3), owf::SupportError);
  CHECK_THROWS_AS(config.index_of(w("ab")), owf::ConfigError);
}

TEST_CASE("required cells for the free instantiation are balls") {
  const DoublingConfig config;
  CHECK(owf::required_cells(config, 3) == owf::ball(3));
}
