#include "owf/word.hpp"

#include <ostream>

#include "owf/errors.hpp"

namespace owf {

namespace {

constexpr int kMaxIndexedLength = 39;  // 2*3^40 overflows 64 bits

std::uint64_t pow3(int e) {
  std::uint64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 3;
  return p;
}

}  // namespace

char to_char(Generator g) noexcept {
  static constexpr char kChars[4] = {'a', 'A', 'b', 'B'};
  return kChars[static_cast<std::uint8_t>(g)];
}

Generator generator_from_char(char c) {
  switch (c) {
    case 'a': return Generator::a;
    case 'A': return Generator::a_inv;
    case 'b': return Generator::b;
    case 'B': return Generator::b_inv;
    default: throw ParseError(std::string("invalid letter '") + c + "' in word");
  }
}

Word::Word(std::initializer_list<Generator> letters)
    : Word(reduce(std::span<const Generator>(letters.begin(), letters.size()))) {}

Word Word::from_letters(std::span<const Generator> letters) { return reduce(letters); }

Word Word::parse(std::string_view text) {
  std::vector<Generator> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(generator_from_char(c));
  return reduce(letters);
}

std::vector<Generator> Word::letters() const {
  std::vector<Generator> out;
  out.reserve(letters_.size());
  for (char c : letters_) out.push_back(static_cast<Generator>(c));
  return out;
}

Word Word::inverse() const {
  Word out;
  out.letters_.resize(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    out.letters_[letters_.size() - 1 - i] = static_cast<char>(letters_[i] ^ 1);
  }
  return out;
}

Word Word::times(Generator g) const {
  Word out = *this;
  const char c = static_cast<char>(g);
  if (!out.letters_.empty() && out.letters_.back() == (c ^ 1)) {
    out.letters_.pop_back();
  } else {
    out.letters_.push_back(c);
  }
  return out;
}

Word Word::parent() const {
  Word out = *this;
  if (!out.letters_.empty()) out.letters_.pop_back();
  return out;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (char c : letters_) s.push_back(to_char(static_cast<Generator>(c)));
  return s;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept {
  if (auto c = x.letters_.size() <=> y.letters_.size(); c != 0) return c;
  const int c = x.letters_.compare(y.letters_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Word operator*(const Word& x, const Word& y) {
  // Cancel the longest suffix of x against the prefix of y.
  std::size_t k = 0;
  const std::size_t n = x.letters_.size();
  while (k < n && k < y.letters_.size() &&
         x.letters_[n - 1 - k] == (y.letters_[k] ^ 1)) {
    ++k;
  }
  Word out;
  out.letters_.reserve(n - k + y.letters_.size() - k);
  out.letters_.append(x.letters_, 0, n - k);
  out.letters_.append(y.letters_, k, std::string::npos);
  return out;
}

Word reduce(std::span<const Generator> letters) {
  Word out;
  for (Generator g : letters) out = out.times(g);
  return out;
}

std::uint64_t ball_size(int r) {
  if (r < 0) return 0;
  return 2 * pow3(r) - 1;
}

std::vector<Word> ball(int r) {
  std::vector<Word> out;
  if (r < 0) return out;
  out.reserve(ball_size(r));
  out.emplace_back();
  std::size_t layer_begin = 0;
  for (int len = 1; len <= r; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const Word w = out[i];
      for (Generator g : kGenerators) {
        if (!w.empty() && w.back() == inverse(g)) continue;
        out.push_back(w.times(g));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::uint64_t length_lex_index(const Word& w) {
  const int len = static_cast<int>(w.size());
  if (len > kMaxIndexedLength) throw Error("word too long for 64-bit enumeration index");
  if (len == 0) return 0;
  std::uint64_t rank = static_cast<std::uint64_t>(w[0]) * pow3(len - 1);
  for (int i = 1; i < len; ++i) {
    const auto code = static_cast<std::uint8_t>(w[i]);
    const auto banned = static_cast<std::uint8_t>(inverse(w[i - 1]));
    const std::uint64_t digit = code - (code > banned ? 1 : 0);
    rank += digit * pow3(len - 1 - i);
  }
  return ball_size(len - 1) + rank;
}

Word word_at_index(std::uint64_t n) {
  int len = 0;
  while (ball_size(len) <= n) {
    ++len;
    if (len > kMaxIndexedLength) throw Error("enumeration index out of range");
  }
  if (len == 0) return Word{};
  std::uint64_t rank = n - ball_size(len - 1);
  std::vector<Generator> letters;
  letters.reserve(static_cast<std::size_t>(len));
  std::uint64_t place = pow3(len - 1);
  letters.push_back(static_cast<Generator>(rank / place));
  rank %= place;
  for (int i = 1; i < len; ++i) {
    place /= 3;
    auto digit = static_cast<std::uint8_t>(rank / place);
    rank %= place;
    const auto banned = static_cast<std::uint8_t>(inverse(letters.back()));
    if (digit >= banned) ++digit;
    letters.push_back(static_cast<Generator>(digit));
  }
  return Word::from_letters(letters);
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << (w.empty() ? std::string("1") : w.to_string());
}

}  // namespace owf
