#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace owf {

// Letters of the rank-2 free group, in canonical order a < a^-1 < b < b^-1.
enum class Generator : std::uint8_t { a = 0, a_inv = 1, b = 2, b_inv = 3 };

inline constexpr Generator kGenerators[4] = {Generator::a, Generator::a_inv, Generator::b,
                                             Generator::b_inv};

constexpr Generator inverse(Generator g) noexcept {
  return static_cast<Generator>(static_cast<std::uint8_t>(g) ^ 1U);
}

char to_char(Generator g) noexcept;
Generator generator_from_char(char c);

// Reduced word in F2. The empty word is the identity.
//
// Letters are stored as bytes 0..3 so that plain byte comparison gives the
// canonical letter order; short words stay inside the string's inline buffer.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> letters);

  static Word from_letters(std::span<const Generator> letters);
  // Parses {a, A, b, B}; A = a^-1, B = b^-1. The result is reduced.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  Generator operator[](std::size_t i) const noexcept {
    return static_cast<Generator>(letters_[i]);
  }
  Generator back() const noexcept { return static_cast<Generator>(letters_.back()); }
  std::vector<Generator> letters() const;

  Word inverse() const;
  // this * g, reduced.
  Word times(Generator g) const;
  // Word with the last letter removed (parent in the Cayley tree).
  Word parent() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Length first, then lexicographic in letter order.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept;

  friend Word operator*(const Word& x, const Word& y);

  std::size_t hash() const noexcept { return std::hash<std::string>{}(letters_); }

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

Word reduce(std::span<const Generator> letters);
inline Word mul(const Word& x, const Word& y) { return x * y; }
inline Word inv(const Word& x) { return x.inverse(); }

inline Word letter(Generator g) { return Word{g}; }

// All reduced words of length <= r in canonical order; size 2*3^r - 1.
std::vector<Word> ball(int r);
std::uint64_t ball_size(int r);

// Position of w in the length-lex enumeration 1 = w_0, a, A, b, B, aa, ...
std::uint64_t length_lex_index(const Word& w);
Word word_at_index(std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace owf

template <>
struct std::hash<owf::Word> {
  std::size_t operator()(const owf::Word& w) const noexcept { return w.hash(); }
};
