#include "owf/doubling.hpp"

#include <algorithm>
#include <set>

#include "owf/errors.hpp"

namespace owf {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Shortlex-least element of h<a^-1 b>.
Word coset_representative(const Word& h) {
  const Word c = Word::parse("Ab");
  const Word c_inv = c.inverse();
  Word best = h;
  Word up = h;
  Word down = h;
  const std::size_t reach = h.size() + 2;
  for (std::size_t i = 0; i < reach; ++i) {
    up = up * c;
    down = down * c_inv;
    best = std::min({best, up, down});
  }
  return best;
}

bool twisted_coin(const Word& h, std::uint64_t seed) {
  return (splitmix64(length_lex_index(coset_representative(h)) ^ seed) & 1U) != 0;
}

const Word& component(const DoublingConfig& config, Move which, Symbol v) {
  return which == Move::a ? config.first(v) : config.second(v);
}

Symbol read(const Pattern& x, const Word& cell) {
  const auto v = x.find(cell);
  if (!v) throw SupportError("doubling check needs the cell '" + cell.to_string() + "'");
  return *v;
}

bool agrees_on_overlap(const Pattern& x, const Pattern& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto v = y.find(x.cell(i));
    if (v && *v != x.value(i)) return false;
  }
  return true;
}

}  // namespace

std::size_t DoublingConfig::index_of(const Word& s) const {
  auto it = std::find(S.begin(), S.end(), s);
  if (it == S.end()) throw ConfigError("'" + s.to_string() + "' is not in S");
  return static_cast<std::size_t>(it - S.begin());
}

Symbol DoublingConfig::encode(const Word& first, const Word& second) const {
  return static_cast<Symbol>(index_of(first) * S.size() + index_of(second));
}

std::pair<Word, Word> DoublingConfig::multipliers(const Word& h) const {
  if (action == Action::left_translation) return {letter(Generator::a), letter(Generator::b)};
  auto it = table.find(h);
  if (it == table.end()) throw UndefinedEntry("action table has no entry for '" + h.to_string() + "'");
  const Word h_inv = h.inverse();
  return {it->second.first * h_inv, it->second.second * h_inv};
}

Pattern t_map(const DoublingConfig& config, Move which, const Pattern& x) {
  const auto v = x.find(Word{});
  if (!v) throw SupportError("t_map needs the identity cell in the support");
  return shift(component(config, which, *v), x);
}

std::size_t preimage_count(const DoublingConfig& config, Move which, const Pattern& x) {
  std::size_t count = 0;
  for (const Word& s : config.S) {
    if (component(config, which, read(x, s)) == s) ++count;
  }
  return count;
}

std::size_t preimage_count_by_search(const DoublingConfig& config, Move which, const Pattern& x) {
  std::size_t count = 0;
  for (const Word& s : config.S) {
    const Pattern candidate = shift(s.inverse(), x);
    if (t_map(config, which, candidate) == x) ++count;
  }
  return count;
}

std::vector<Word> required_cells(const DoublingConfig& config, int depth) {
  std::vector<Word> steps;
  for (const Word& s : config.S) {
    steps.push_back(s);
    steps.push_back(s.inverse());
  }
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  for (int d = 0; d < std::max(depth, 1); ++d) {
    std::vector<Word> next;
    for (const Word& p : frontier) {
      for (const Word& s : steps) {
        Word q = p * s;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

ZChecks z_checks(const DoublingConfig& config, const Pattern& x, int depth) {
  // Agreement on a thin overlap is vacuous, so the whole reachable set is
  // required before anything is decided.
  for (const Word& cell : required_cells(config, depth)) {
    if (!x.contains(cell)) {
      throw SupportError("doubling check at depth " + std::to_string(depth) + " needs the cell '" +
                         cell.to_string() + "'");
    }
  }
  ZChecks out;
  out.preimages_a = preimage_count(config, Move::a, x);
  out.preimages_b = preimage_count(config, Move::b, x);
  out.z0 = out.preimages_a == 1 && out.preimages_b == 1;
  out.z2 = true;

  // f . x = g . x; only g is tracked. Forward moves read x at g^-1, inverse
  // moves look for the unique s whose cell g^-1 s points back.
  struct Frame {
    Word word;
    Word g;
  };
  std::vector<Frame> stack{{Word{}, Word{}}};
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(frame.word.size()) >= depth) continue;
    const Word position = frame.g.inverse();
    for (Generator l : kGenerators) {
      if (!frame.word.empty() && frame.word.back() == inverse(l)) continue;
      const Move which = (l == Generator::a || l == Generator::a_inv) ? Move::a : Move::b;
      Word g;
      if (l == Generator::a || l == Generator::b) {
        g = component(config, which, read(x, position)) * frame.g;
      } else {
        std::vector<Word> back;
        for (const Word& s : config.S) {
          if (component(config, which, read(x, position * s)) == s) back.push_back(s);
        }
        if (back.size() != 1) {
          out.z2 = false;
          out.note = std::string(which == Move::a ? "T_a" : "T_b") + " has " +
                     std::to_string(back.size()) + " preimages after '" + frame.word.to_string() + "'";
          return out;
        }
        g = back.front().inverse() * frame.g;
      }
      Frame next{frame.word.times(l), g};
      ++out.words_checked;
      if (next.g.empty() || agrees_on_overlap(x, shift(next.g, x))) {
        out.z2 = false;
        out.fixing_word = next.word;
        out.note = "'" + next.word.to_string() + "' moves x by '" + next.g.to_string() +
                   "' and the result agrees with x";
        return out;
      }
      stack.push_back(std::move(next));
    }
  }
  return out;
}

Z1Certificate z1_certificate(const DoublingConfig& config, const Pattern& x) {
  Z1Certificate cert;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Word& h = x.cell(i);
    const bool covered = std::all_of(config.S.begin(), config.S.end(),
                                     [&](const Word& s) { return x.contains(h * s); });
    if (!covered) continue;
    const Pattern y = shift(h.inverse(), x);
    ++cert.translates_checked;
    if (preimage_count(config, Move::a, y) != 1 || preimage_count(config, Move::b, y) != 1) {
      cert.failures.push_back(h);
    }
  }
  return cert;
}

Pattern encoding_pattern(const DoublingConfig& config, const SupportPtr& support) {
  std::vector<Symbol> values(support->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto [sa, sb] = config.multipliers((*support)[i]);
    values[i] = config.encode(sa, sb);
  }
  return Pattern(config.alphabet(), support, std::move(values));
}

Pattern twisted_pattern(const SupportPtr& support, std::uint64_t seed) {
  const DoublingConfig config;
  const Word a = letter(Generator::a);
  const Word b = letter(Generator::b);
  std::vector<Symbol> values(support->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = twisted_coin((*support)[i], seed) ? config.encode(b, a) : config.encode(a, b);
  }
  return Pattern(config.alphabet(), support, std::move(values));
}

DoublingConfig twisted_config(const std::vector<Word>& cells, std::uint64_t seed) {
  DoublingConfig config;
  config.action = DoublingConfig::Action::table;
  const Word a = letter(Generator::a);
  const Word b = letter(Generator::b);
  for (const Word& h : cells) {
    const bool flip = twisted_coin(h, seed);
    config.table.emplace(h, std::make_pair((flip ? b : a) * h, (flip ? a : b) * h));
  }
  return config;
}

}  // namespace owf
