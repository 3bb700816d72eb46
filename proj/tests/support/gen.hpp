#pragma once

// Small hand-rolled generators for property tests. Every generator draws from
// an explicitly seeded engine so failures replay.

#include <cstdint>
#include <random>
#include <vector>

#include "owf/pattern.hpp"
#include "owf/word.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

// Reduced word of length exactly len.
inline owf::Word word_of_length(Rng& rng, int len) {
  std::vector<owf::Generator> letters;
  while (static_cast<int>(letters.size()) < len) {
    const auto g = owf::kGenerators[below(rng, 4)];
    if (!letters.empty() && letters.back() == owf::inverse(g)) continue;
    letters.push_back(g);
  }
  return owf::Word::from_letters(letters);
}

inline owf::Word word_up_to(Rng& rng, int max_len) {
  return word_of_length(rng, static_cast<int>(below(rng, static_cast<std::uint64_t>(max_len) + 1)));
}

inline owf::Pattern bits_on(Rng& rng, const owf::SupportPtr& support, double p_one = 0.5) {
  std::bernoulli_distribution coin(p_one);
  std::vector<owf::Symbol> values(support->size());
  for (auto& v : values) v = coin(rng) ? 1 : 0;
  return owf::Pattern(owf::Alphabet::bits(), support, std::move(values));
}

inline owf::Pattern symbols_on(Rng& rng, owf::Alphabet alphabet, const owf::SupportPtr& support) {
  std::vector<owf::Symbol> values(support->size());
  for (auto& v : values) v = static_cast<owf::Symbol>(below(rng, alphabet.size()));
  return owf::Pattern(alphabet, support, std::move(values));
}

// Bit pattern whose bits are those of `bits`, cell i taking bit i.
inline owf::Pattern bits_from_mask(const owf::SupportPtr& support, std::uint64_t bits) {
  std::vector<owf::Symbol> values(support->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = (bits >> i) & 1U;
  return owf::Pattern(owf::Alphabet::bits(), support, std::move(values));
}

}  // namespace gen
