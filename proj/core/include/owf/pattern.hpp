#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "owf/word.hpp"

namespace owf {

using Symbol = std::uint32_t;

// Finite alphabet. Symbols are 0..size()-1.
//   bits       {0, 1}
//   pairs      2x2, s = 2*first + second
//   levels(L)  L-bit truncations of 2^N; bit m of the symbol is level m
//   product(n) n x n, s = n*first + second
//   generic(k) k opaque symbols
class Alphabet {
 public:
  enum class Kind : std::uint8_t { bits, pairs, levels, product, generic };

  static Alphabet bits() { return {Kind::bits, 2, 1}; }
  static Alphabet pairs() { return {Kind::pairs, 4, 2}; }
  static Alphabet levels(int count);
  static Alphabet product(std::uint32_t n);
  static Alphabet generic(std::uint32_t size);
  // Inverse of name(): "bits", "pairs", "levels-L", "product-n", "symbols-k".
  static Alphabet from_name(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t parameter() const noexcept { return parameter_; }
  std::string name() const;
  // Symbols form GF(2)^m under bitwise xor.
  bool is_binary_vector() const noexcept {
    return kind_ == Kind::bits || kind_ == Kind::pairs || kind_ == Kind::levels;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Alphabet(Kind kind, std::uint32_t size, std::uint32_t parameter)
      : kind_(kind), size_(size), parameter_(parameter) {}

  Kind kind_;
  std::uint32_t size_;
  std::uint32_t parameter_;
};

class Support;
using SupportPtr = std::shared_ptr<const Support>;

// Immutable finite set of words kept in canonical order, with memoised index
// plans for shifting and for pairing each cell with a right neighbour.
class Support {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct ShiftPlan {
    SupportPtr target;
    // target->cells()[i] == f * source.cells()[source_index[i]]
    std::vector<std::uint32_t> source_index;
  };
  struct NeighborPlan {
    // cells w with w * g also in the support
    SupportPtr domain;
    std::vector<std::uint32_t> self_index;
    std::vector<std::uint32_t> neighbor_index;
  };

  static SupportPtr make(std::vector<Word> cells);
  // Shared instance per radius.
  static SupportPtr ball(int r);
  static SupportPtr empty();

  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<Word>& cells() const noexcept { return cells_; }
  const Word& operator[](std::size_t i) const noexcept { return cells_[i]; }
  std::size_t find(const Word& w) const noexcept;
  bool contains(const Word& w) const noexcept { return find(w) != npos; }
  bool is_subset_of(const Support& other) const noexcept;
  // Largest r with ball(r) contained in the support, or -1.
  int inner_radius() const noexcept;

  std::shared_ptr<const ShiftPlan> shifted(const Word& f) const;
  std::shared_ptr<const NeighborPlan> neighbors(const Word& g) const;

  friend bool operator==(const Support& x, const Support& y) noexcept { return x.cells_ == y.cells_; }

  // Use make().
  explicit Support(std::vector<Word> sorted_cells);

 private:
  std::vector<Word> cells_;
  std::unordered_map<Word, std::uint32_t, WordHash> index_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, std::shared_ptr<const ShiftPlan>, WordHash> shift_memo_;
  mutable std::unordered_map<Word, std::shared_ptr<const NeighborPlan>, WordHash> neighbor_memo_;
};

SupportPtr intersect(const SupportPtr& x, const SupportPtr& y);
bool same_cells(const SupportPtr& x, const SupportPtr& y) noexcept;

// Finite-support configuration Word -> Symbol.
class Pattern {
 public:
  Pattern() : Pattern(Alphabet::bits(), Support::empty(), {}) {}
  Pattern(Alphabet alphabet, SupportPtr support, std::vector<Symbol> values);

  static Pattern constant(Alphabet alphabet, SupportPtr support, Symbol s);
  static Pattern zeros(Alphabet alphabet, SupportPtr support) {
    return constant(alphabet, std::move(support), 0);
  }
  static Pattern from_cells(Alphabet alphabet, const std::vector<std::pair<Word, Symbol>>& cells);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Support& support() const noexcept { return *support_; }
  const SupportPtr& support_ptr() const noexcept { return support_; }
  const std::vector<Symbol>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  const Word& cell(std::size_t i) const noexcept { return (*support_)[i]; }
  Symbol value(std::size_t i) const noexcept { return values_[i]; }
  bool contains(const Word& w) const noexcept { return support_->contains(w); }
  Symbol at(const Word& w) const;
  std::optional<Symbol> find(const Word& w) const noexcept;

  void set(const Word& w, Symbol s);
  void set_value(std::size_t i, Symbol s);

  bool all_equal(Symbol s) const noexcept;

  friend bool operator==(const Pattern& x, const Pattern& y) noexcept;

 private:
  Alphabet alphabet_;
  SupportPtr support_;
  std::vector<Symbol> values_;
};

// (f . x)(h) = x(f^-1 h), supported on f . support(x).
Pattern shift(const Word& f, const Pattern& x);
// Cell-wise xor on the intersection of the supports.
Pattern xor_patterns(const Pattern& x, const Pattern& y);
inline Pattern operator^(const Pattern& x, const Pattern& y) { return xor_patterns(x, y); }
Pattern restrict(const Pattern& x, const SupportPtr& s);
Pattern restrict(const Pattern& x, std::vector<Word> cells);

// Largest radius whose ball is exhaustively enumerable: OWF_MAX_RADIUS or 4.
int max_exhaustive_radius();

}  // namespace owf
