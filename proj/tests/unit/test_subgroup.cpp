#include <doctest.h>

#include <cstdlib>
#include <set>

#include "brute.hpp"
#include "owf/group_oracle.hpp"
#include "owf/subgroup_automaton.hpp"

using owf::Word;

namespace {

Word w(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("membership examples for <a^2, b^2>") {
  const std::vector<Word> gens{w("aa"), w("bb")};
  CHECK(owf::subgroup_member(w("aabb"), gens));
  CHECK_FALSE(owf::subgroup_member(w("a"), gens));
  CHECK(owf::subgroup_member(Word{}, gens));
  CHECK(owf::subgroup_member(Word{}, {}));
  CHECK(owf::subgroup_member(Word{}, {w("abAB")}));
}

TEST_CASE("membership matches brute-force products on words up to length 6") {
  const std::vector<std::vector<std::string>> cases{
      {"aa", "bb"}, {"ab", "Ba"}, {"aba", "b"}, {"aaa", "bab", "BB"}, {"abAB"}};
  for (const auto& gens : cases) {
    std::vector<Word> words;
    for (const auto& g : gens) words.push_back(Word::parse(g));
    const owf::SubgroupAutomaton automaton(words);
    const auto reachable = oracle::products(gens, 6);
    for (const Word& x : owf::ball(6)) {
      const bool folded = automaton.contains(x);
      const bool brute = reachable.contains(x.to_string());
      if (brute) REQUIRE(folded);
      if (folded) {
        const auto expressed = automaton.express(x);
        REQUIRE(expressed.has_value());
        Word product;
        for (int l : *expressed) {
          const Word& g = words[static_cast<std::size_t>(std::abs(l) - 1)];
          product = product * (l > 0 ? g : g.inverse());
        }
        REQUIRE(product == x);
        // Short expressions must have been found by the brute force too.
        if (expressed->size() <= 6) REQUIRE(brute);
      }
    }
  }
}

TEST_CASE("membership in <a^2, b^2> agrees with syllable parity") {
  const owf::SubgroupAutomaton automaton({w("aa"), w("bb")});
  for (const Word& x : owf::ball(7)) {
    REQUIRE(automaton.contains(x) == oracle::in_even_subgroup(x.to_string()));
  }
}

TEST_CASE("rank, injectivity and index") {
  const owf::SubgroupAutomaton even({w("aa"), w("bb")});
  CHECK(even.rank() == 2);
  CHECK(even.is_free_basis());
  CHECK(even.has_infinite_index());

  const owf::SubgroupAutomaton whole({w("a"), w("b")});
  CHECK(whole.vertex_count() == 1);
  CHECK_FALSE(whole.has_infinite_index());

  const owf::SubgroupAutomaton dependent({w("a"), w("aa")});
  CHECK_FALSE(dependent.is_free_basis());

  const owf::SubgroupAutomaton index_two({w("aa"), w("b"), w("aba"), w("ab")});
  CHECK_FALSE(index_two.has_infinite_index());
  CHECK_FALSE(index_two.is_free_basis());
}

TEST_CASE("express in rank two recovers iota preimages") {
  const owf::SubgroupAutomaton even({w("aa"), w("bb")});
  for (const Word& f : owf::ball(4)) {
    const owf::Homomorphism iota{w("aa"), w("bb")};
    const auto back = even.express_in_rank_two(iota.apply(f));
    REQUIRE(back.has_value());
    REQUIRE(*back == f);
  }
  CHECK_FALSE(even.express_in_rank_two(w("ab")).has_value());
}

TEST_CASE("right coset keys identify cosets") {
  const owf::SubgroupAutomaton even({w("aa"), w("bb")});
  const auto cells = owf::ball(4);
  for (const Word& x : cells) {
    for (const Word& y : cells) {
      const bool same = oracle::in_even_subgroup((x * y.inverse()).to_string());
      REQUIRE((even.right_coset_key(x) == even.right_coset_key(y)) == same);
    }
  }
}

TEST_CASE("cosets keep appearing as the radius grows") {
  const owf::SubgroupAutomaton even({w("aa"), w("bb")});
  std::size_t previous = 0;
  for (int r = 0; r <= 6; ++r) {
    std::set<std::string> keys;
    for (const Word& x : owf::ball(r)) keys.insert(even.right_coset_key(x.inverse()));
    CHECK(keys.size() > previous);
    previous = keys.size();
  }
}
