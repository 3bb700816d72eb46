#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "owf/word.hpp"

namespace owf {

// Black-box access to a countable group G whose elements are carried as
// normalised words over {a, A, b, B}. The enumeration must be injective and
// start at the identity.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual std::string name() const = 0;
  virtual Word normalize(const Word& w) const = 0;
  virtual Word multiply(const Word& x, const Word& y) const = 0;
  virtual Word invert(const Word& x) const = 0;
  virtual bool equal(const Word& x, const Word& y) const = 0;
  virtual Word identity() const { return Word{}; }
  virtual Word enumerate(std::uint64_t n) const = 0;
  virtual std::uint64_t index_of(const Word& g) const = 0;

  // True when elements are reduced words of F2 with the length-lex
  // enumeration, so subgroup questions can be answered by folding.
  virtual bool is_free_rank_two() const { return false; }
};

class FreeGroupOracle final : public GroupOracle {
 public:
  std::string name() const override { return "F2"; }
  Word normalize(const Word& w) const override { return w; }
  Word multiply(const Word& x, const Word& y) const override { return x * y; }
  Word invert(const Word& x) const override { return x.inverse(); }
  bool equal(const Word& x, const Word& y) const override { return x == y; }
  Word enumerate(std::uint64_t n) const override { return word_at_index(n); }
  std::uint64_t index_of(const Word& g) const override { return length_lex_index(g); }
  bool is_free_rank_two() const override { return true; }
};

std::shared_ptr<const GroupOracle> free_group_oracle();

// F2 -> target, determined by the images of a and b.
struct Homomorphism {
  Word image_a;
  Word image_b;

  static Homomorphism identity() { return {letter(Generator::a), letter(Generator::b)}; }

  Word image(Generator g) const;
  // Image in F2 (target words reduced freely).
  Word apply(const Word& w) const;
  // Image in G, multiplied with the oracle.
  Word apply(const GroupOracle& group, const Word& w) const;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

}  // namespace owf
