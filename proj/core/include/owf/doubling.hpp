#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "owf/pattern.hpp"

namespace owf {

// Doubling data over G = F2: a finite S and a free F2-action * with
// a*h = s_a(h) h, b*h = s_b(h) h for s_a(h), s_b(h) in S. Patterns live in
// (S x S)^G with symbol = |S| * first + second, indices into S.
struct DoublingConfig {
  enum class Action { left_translation, table };

  std::vector<Word> S{letter(Generator::a), letter(Generator::b)};
  Action action = Action::left_translation;
  // For Action::table: h -> (a*h, b*h).
  std::map<Word, std::pair<Word, Word>> table;

  Alphabet alphabet() const { return Alphabet::product(static_cast<std::uint32_t>(S.size())); }
  std::size_t index_of(const Word& s) const;
  Symbol encode(const Word& first, const Word& second) const;
  const Word& first(Symbol v) const { return S.at(v / S.size()); }
  const Word& second(Symbol v) const { return S.at(v % S.size()); }

  // s_a(h), s_b(h) for the configured action.
  std::pair<Word, Word> multipliers(const Word& h) const;
};

enum class Move { a, b };

// T_a(x) = s . x where s = x(1)(1); T_b reads the second component.
Pattern t_map(const DoublingConfig& config, Move which, const Pattern& x);

// #{s in S : x(s)(i) = s}, the preimage count of T_a (i = 1) or T_b (i = 2).
std::size_t preimage_count(const DoublingConfig& config, Move which, const Pattern& x);
// Counts candidates s^-1 . x that t_map sends back onto x (on the overlap).
std::size_t preimage_count_by_search(const DoublingConfig& config, Move which, const Pattern& x);

struct ZChecks {
  bool z0 = false;
  bool z2 = false;
  std::size_t preimages_a = 0;
  std::size_t preimages_b = 0;
  std::size_t words_checked = 0;
  // First word in T_a, T_b (letters a, A, b, B) whose image agrees with x.
  std::optional<Word> fixing_word;
  std::string note;
};

// Products of at most `depth` elements of S and their inverses: every cell
// z_checks may read.
std::vector<Word> required_cells(const DoublingConfig& config, int depth);

// z0: exactly one preimage under each of T_a and T_b. z2: no reduced word of
// length 1..depth in T_a, T_b moves x to a pattern agreeing with it on the
// overlap of supports. Missing cells raise SupportError naming the cell.
ZChecks z_checks(const DoublingConfig& config, const Pattern& x, int depth);

// z0 at every translate h^-1 . x whose support still covers S and 1.
struct Z1Certificate {
  std::size_t translates_checked = 0;
  std::vector<Word> failures;

  bool passed() const noexcept { return failures.empty(); }
};
Z1Certificate z1_certificate(const DoublingConfig& config, const Pattern& x);

// x(h) = (s_a(h), s_b(h)).
Pattern encoding_pattern(const DoublingConfig& config, const SupportPtr& support);

// For S = {a, b}: x(h) is (a, b) or (b, a), chosen by a seeded coin that is
// constant on each left coset h<a^-1 b>. The four moves T_a, T_b and their
// inverses then step to the four distinct neighbours of the read position,
// so the induced F2-action is free.
Pattern twisted_pattern(const SupportPtr& support, std::uint64_t seed);
DoublingConfig twisted_config(const std::vector<Word>& cells, std::uint64_t seed);

}  // namespace owf
