#include "owf/subgroup_automaton.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace owf {

namespace {

GeneratorWord inverse_of(const GeneratorWord& w) {
  GeneratorWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

GeneratorWord product(const GeneratorWord& x, const GeneratorWord& y) {
  GeneratorWord out = x;
  for (int l : y) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

struct RawEdge {
  std::size_t from;
  std::size_t to;
  Generator letter;  // a or b
  GeneratorWord label;
  bool alive = true;
};

struct HalfEdge {
  std::size_t edge;
  std::size_t target;
  GeneratorWord label;
};

bool is_positive(Generator g) { return g == Generator::a || g == Generator::b; }

}  // namespace

GeneratorWord reduce_generator_word(GeneratorWord w) { return product({}, w); }

SubgroupAutomaton::SubgroupAutomaton(std::vector<Word> generators)
    : generators_(std::move(generators)) {
  std::vector<RawEdge> edges;
  std::size_t vertex_total = 1;  // vertex 0 is the base
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Word& w = generators_[i];
    if (w.empty()) {
      free_basis_ = false;
      continue;
    }
    std::size_t prev = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const std::size_t cur = (j + 1 == w.size()) ? 0 : vertex_total++;
      GeneratorWord lab;
      if (j == 0) lab.push_back(static_cast<int>(i) + 1);
      const Generator g = w[j];
      if (is_positive(g)) {
        edges.push_back({prev, cur, g, lab});
      } else {
        edges.push_back({cur, prev, inverse(g), inverse_of(lab)});
      }
      prev = cur;
    }
  }

  // Fold until the graph is deterministic.
  for (;;) {
    std::map<std::pair<std::size_t, int>, HalfEdge> seen;
    bool folded = false;
    for (std::size_t e = 0; e < edges.size() && !folded; ++e) {
      if (!edges[e].alive) continue;
      const RawEdge& edge = edges[e];
      const std::pair<std::size_t, Generator> ends[2] = {{edge.from, edge.letter},
                                                         {edge.to, inverse(edge.letter)}};
      for (int side = 0; side < 2 && !folded; ++side) {
        const std::size_t at = ends[side].first;
        const int code = static_cast<int>(ends[side].second);
        HalfEdge half{e, side == 0 ? edge.to : edge.from,
                      side == 0 ? edge.label : inverse_of(edge.label)};
        auto [it, inserted] = seen.emplace(std::make_pair(at, code), half);
        if (inserted) continue;
        const HalfEdge first = it->second;
        if (first.edge == e) continue;
        folded = true;
        std::size_t keep = first.target;
        std::size_t drop = half.target;
        GeneratorWord keep_label = first.label;
        GeneratorWord drop_label = half.label;
        edges[e].alive = false;
        if (keep == drop) {
          if (keep_label != drop_label) free_basis_ = false;
          break;
        }
        if (drop == 0) {
          std::swap(keep, drop);
          std::swap(keep_label, drop_label);
        }
        // Paths through the dropped vertex pick up the detour keep -> u -> drop.
        const GeneratorWord c = product(inverse_of(keep_label), drop_label);
        const GeneratorWord c_inv = inverse_of(c);
        for (RawEdge& other : edges) {
          if (!other.alive) continue;
          if (other.from == drop) {
            other.label = product(c, other.label);
            other.from = keep;
          }
          if (other.to == drop) {
            other.label = product(other.label, c_inv);
            other.to = keep;
          }
        }
      }
    }
    if (!folded) break;
  }

  std::map<std::size_t, std::size_t> compact;
  compact[0] = 0;
  for (const RawEdge& e : edges) {
    if (!e.alive) continue;
    compact.emplace(e.from, compact.size());
    compact.emplace(e.to, compact.size());
  }
  next_.assign(compact.size(), {kNone, kNone, kNone, kNone});
  label_.assign(compact.size(), {});
  for (const RawEdge& e : edges) {
    if (!e.alive) continue;
    const std::size_t u = compact.at(e.from);
    const std::size_t v = compact.at(e.to);
    const auto fwd = static_cast<std::size_t>(e.letter);
    const auto bwd = static_cast<std::size_t>(inverse(e.letter));
    next_[u][fwd] = v;
    label_[u][fwd] = e.label;
    next_[v][bwd] = u;
    label_[v][bwd] = inverse_of(e.label);
    ++edge_count_;
  }
  if (rank() != generators_.size()) free_basis_ = false;
}

bool SubgroupAutomaton::has_infinite_index() const {
  for (const auto& slots : next_) {
    for (std::size_t s : slots) {
      if (s == kNone) return true;
    }
  }
  return false;
}

std::optional<std::size_t> SubgroupAutomaton::read(const Word& w) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    v = next_[v][static_cast<std::size_t>(w[i])];
    if (v == kNone) return std::nullopt;
  }
  return v;
}

bool SubgroupAutomaton::contains(const Word& w) const {
  const auto end = read(w);
  return end && *end == 0;
}

std::optional<GeneratorWord> SubgroupAutomaton::express(const Word& w) const {
  std::size_t v = 0;
  GeneratorWord acc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto g = static_cast<std::size_t>(w[i]);
    const std::size_t nxt = next_[v][g];
    if (nxt == kNone) return std::nullopt;
    acc = product(acc, label_[v][g]);
    v = nxt;
  }
  if (v != 0) return std::nullopt;
  return acc;
}

std::optional<Word> SubgroupAutomaton::express_in_rank_two(const Word& w) const {
  if (generators_.size() != 2) throw std::logic_error("express_in_rank_two needs two generators");
  const auto gw = express(w);
  if (!gw) return std::nullopt;
  std::vector<Generator> letters;
  for (int l : *gw) {
    const Generator g = (std::abs(l) == 1) ? Generator::a : Generator::b;
    letters.push_back(l > 0 ? g : inverse(g));
  }
  return Word::from_letters(letters);
}

std::string SubgroupAutomaton::right_coset_key(const Word& w) const {
  std::size_t v = 0;
  std::size_t i = 0;
  for (; i < w.size(); ++i) {
    const std::size_t nxt = next_[v][static_cast<std::size_t>(w[i])];
    if (nxt == kNone) break;
    v = nxt;
  }
  std::string key = std::to_string(v);
  key.push_back('|');
  for (; i < w.size(); ++i) key.push_back(to_char(w[i]));
  return key;
}

bool subgroup_member(const Word& w, const std::vector<Word>& generators) {
  return SubgroupAutomaton(generators).contains(w);
}

}  // namespace owf
