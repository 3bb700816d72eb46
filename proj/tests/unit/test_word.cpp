#include <doctest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "gen.hpp"
#include "owf/errors.hpp"
#include "owf/group_oracle.hpp"
#include "owf/word.hpp"

using owf::Generator;
using owf::Word;

namespace {

Word w(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("reduce cancels adjacent inverse letters") {
  const Generator aA[] = {Generator::a, Generator::a_inv};
  CHECK(owf::reduce(aA).empty());
  const Generator abBa[] = {Generator::a, Generator::b, Generator::b_inv, Generator::a};
  CHECK(owf::reduce(abBa) == w("aa"));
  const Word x = w("abAB");
  const auto letters = x.letters();
  CHECK(owf::reduce(letters) == x);
  CHECK(owf::reduce(owf::reduce(abBa).letters()) == w("aa"));
}

TEST_CASE("parse and print round trip") {
  CHECK(w("").to_string().empty());
  CHECK(w("aAbB").empty());
  CHECK(w("abBa").to_string() == "aa");
  CHECK_THROWS_AS(w("abc"), owf::ParseError);
}

TEST_CASE("multiplication and inverses") {
  CHECK(owf::mul(w("ab"), w("Ba")) == w("aa"));
  CHECK(owf::inv(w("ab")) == w("BA"));
  CHECK(owf::mul(Word{}, w("abA")) == w("abA"));
  CHECK((w("abA") * w("abA").inverse()).empty());
}

TEST_CASE("group laws hold on all triples from ball(2)") {
  const auto cells = owf::ball(2);
  for (const Word& x : cells) {
    CHECK((x * x.inverse()).empty());
    CHECK((x.inverse() * x).empty());
    CHECK(Word{} * x == x);
    for (const Word& y : cells) {
      for (const Word& z : cells) {
        REQUIRE((x * y) * z == x * (y * z));
      }
    }
  }
}

TEST_CASE("multiplication agrees with string reduction") {
  gen::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Word x = gen::word_up_to(rng, 8);
    const Word y = gen::word_up_to(rng, 8);
    REQUIRE((x * y).to_string() == oracle::mul(x.to_string(), y.to_string()));
    REQUIRE(x.inverse().to_string() == oracle::inv(x.to_string()));
  }
}

TEST_CASE("ball sizes and canonical order") {
  CHECK(owf::ball(0).size() == 1);
  CHECK(owf::ball(1).size() == 5);
  CHECK(owf::ball(2).size() == 17);
  for (int r = 0; r <= 8; ++r) {
    std::uint64_t expected = 2;
    for (int i = 0; i < r; ++i) expected *= 3;
    CHECK(owf::ball(r).size() == expected - 1);
    CHECK(owf::ball_size(r) == expected - 1);
  }
  const auto b1 = owf::ball(1);
  CHECK(b1[1] == w("a"));
  CHECK(b1[2] == w("A"));
  CHECK(b1[3] == w("b"));
  CHECK(b1[4] == w("B"));
  const auto mine = owf::ball(5);
  const auto theirs = oracle::ball(5);
  REQUIRE(mine.size() == theirs.size());
  for (std::size_t i = 0; i < mine.size(); ++i) REQUIRE(mine[i].to_string() == theirs[i]);
}

TEST_CASE("length-lex index is a bijection") {
  const auto cells = owf::ball(6);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    REQUIRE(owf::length_lex_index(cells[i]) == i);
    REQUIRE(owf::word_at_index(i) == cells[i]);
  }
  gen::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word x = gen::word_up_to(rng, 30);
    REQUIRE(owf::word_at_index(owf::length_lex_index(x)) == x);
  }
}

TEST_CASE("free group oracle and homomorphisms") {
  const auto group = owf::free_group_oracle();
  CHECK(group->enumerate(0).empty());
  CHECK(group->is_free_rank_two());
  const owf::Homomorphism iota{w("aa"), w("bb")};
  CHECK(iota.apply(w("aB")) == w("aaBB"));
  gen::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Word x = gen::word_up_to(rng, 5);
    const Word y = gen::word_up_to(rng, 5);
    REQUIRE(iota.apply(x * y) == iota.apply(x) * iota.apply(y));
    REQUIRE(iota.apply(*group, x) == iota.apply(x));
  }
  CHECK(owf::Homomorphism::identity().apply(w("abAB")) == w("abAB"));
}
