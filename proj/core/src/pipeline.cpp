#include "owf/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "owf/errors.hpp"

namespace owf {

Pattern group_shift(const GroupOracle& group, const Word& g, const Pattern& x) {
  if (group.is_free_rank_two()) return shift(g, x);
  std::vector<std::pair<Word, Symbol>> cells;
  cells.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cells.emplace_back(group.multiply(g, x.cell(i)), x.value(i));
  return Pattern::from_cells(x.alphabet(), cells);
}

LevelPatterns group_shift(const GroupOracle& group, const Word& g, const LevelPatterns& x) {
  LevelPatterns out;
  out.reserve(x.size());
  for (const Pattern& level : x) out.push_back(group_shift(group, g, level));
  return out;
}

SupportPtr coordinate_window(const Coinduction& co, int radius, std::size_t count, const ZPoint& z) {
  std::vector<Word> cells;
  const std::vector<Word> f_ball = ball(radius);
  cells.reserve(f_ball.size() * count);
  for (std::size_t n = 0; n < count; ++n) {
    for (const Word& f : f_ball) cells.push_back(co.psi(f, n, z));
  }
  return Support::make(std::move(cells));
}

Family psi_star(const Coinduction& co, const Pattern& x, const ZPoint& z) {
  std::map<std::size_t, std::vector<std::pair<Word, Symbol>>> cells;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [f, n] = co.psi_inverse(x.cell(i), z);
    cells[n].emplace_back(std::move(f), x.value(i));
  }
  Family out;
  for (auto& [n, list] : cells) out.emplace(n, Pattern::from_cells(x.alphabet(), list));
  return out;
}

Pattern psi_star_inverse(const Coinduction& co, const Family& family, const ZPoint& z) {
  std::vector<std::pair<Word, Symbol>> cells;
  std::optional<Alphabet> alphabet;
  for (const auto& [n, y] : family) {
    if (alphabet && !(*alphabet == y.alphabet())) {
      throw AlphabetMismatch("family mixes alphabets");
    }
    alphabet = y.alphabet();
    for (std::size_t i = 0; i < y.size(); ++i) cells.emplace_back(co.psi(y.cell(i), n, z), y.value(i));
  }
  return Pattern::from_cells(alphabet.value_or(Alphabet::bits()), cells);
}

std::map<std::size_t, IndexMove> induced_moves(const Coinduction& co, const Word& g,
                                               const std::vector<std::size_t>& inputs,
                                               const ZPoint& z) {
  const ZPoint gz = co.act(g, z);
  const Word g_inv = co.group().invert(g);
  std::map<std::size_t, IndexMove> moves;
  for (std::size_t m : inputs) {
    const std::size_t n = co.delta(g, m, z);
    Coinduction::Step back = co.step(g_inv, n, gz);
    if (back.k != m) {
      throw std::logic_error("delta(g^-1, g.z) does not invert delta(g, z) at n = " +
                             std::to_string(m));
    }
    moves.emplace(n, IndexMove{m, std::move(back.u)});
  }
  return moves;
}

namespace {

template <class T>
std::vector<std::size_t> keys_of(const std::map<std::size_t, T>& m) {
  std::vector<std::size_t> out;
  out.reserve(m.size());
  for (const auto& entry : m) out.push_back(entry.first);
  return out;
}

}  // namespace

std::pair<Family, ZPoint> induced_action(const Coinduction& co, const Word& g, const Family& x,
                                         const ZPoint& z) {
  Family out;
  for (const auto& [n, move] : induced_moves(co, g, keys_of(x), z)) {
    out.emplace(n, shift(move.u.inverse(), x.at(move.from)));
  }
  return {std::move(out), co.act(g, z)};
}

std::pair<std::map<std::size_t, TowerOutput>, ZPoint> induced_action(
    const Coinduction& co, const Word& g, const std::map<std::size_t, TowerOutput>& x,
    const ZPoint& z) {
  std::map<std::size_t, TowerOutput> out;
  for (const auto& [n, move] : induced_moves(co, g, keys_of(x), z)) {
    out.emplace(n, shift(move.u.inverse(), x.at(move.from)));
  }
  return {std::move(out), co.act(g, z)};
}

Family AffineFamilyMap::apply(const Family& w) const {
  Family out;
  for (const auto& [n, entry] : maps) {
    auto it = w.find(entry.first);
    if (it == w.end()) {
      throw SupportError("family has no coordinate " + std::to_string(entry.first));
    }
    out.emplace(n, entry.second.apply(it->second));
  }
  return out;
}

AffineFamilyMap compose(const AffineFamilyMap& second, const AffineFamilyMap& first) {
  AffineFamilyMap out;
  for (const auto& [n, outer] : second.maps) {
    auto it = first.maps.find(outer.first);
    if (it == first.maps.end()) {
      throw SupportError("composition: coordinate " + std::to_string(outer.first) +
                         " is not produced by the first map");
    }
    out.maps.emplace(n, std::make_pair(it->second.first, compose(outer.second, it->second.second)));
  }
  return out;
}

TowerOutput tower_at(const Coinduction& co, const LevelPatterns& levels, std::size_t n,
                     const SupportPtr& window, const ZPoint& z) {
  if (levels.empty()) throw ConfigError("tower needs at least one level");
  const TowerShape shape = tower_shape(window, static_cast<int>(levels.size()));
  TowerOutput out{window, {}};
  for (std::size_t m = 0; m < levels.size(); ++m) {
    const SupportPtr& cells = shape.levels[m];
    std::vector<Symbol> values(cells->size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const Word g = co.psi((*cells)[i], n, z);
      const auto v = levels[m].find(g);
      if (!v) {
        throw SupportError("level " + std::to_string(m) + " is not given at '" + g.to_string() +
                           "' (coordinate " + std::to_string(n) + ", cell '" +
                           (*cells)[i].to_string() + "')");
      }
      values[i] = *v;
    }
    out.levels.emplace_back(Alphabet::bits(), cells, std::move(values));
  }
  return out;
}

AffineFamilyMap key_beta(const Coinduction& co, const Word& g, const LevelPatterns& levels,
                         const ZPoint& z, const std::map<std::size_t, SupportPtr>& windows) {
  AffineFamilyMap out;
  for (const auto& [n, move] : induced_moves(co, g, keys_of(windows), z)) {
    const TowerOutput y = tower_at(co, levels, move.from, windows.at(move.from), z);
    out.maps.emplace(n, std::make_pair(move.from, beta0(move.u.inverse(), y)));
  }
  return out;
}

PipelineState key_pipeline(const Coinduction& co, const Pattern& x, const ZPoint& z, int level_count) {
  if (!(x.alphabet() == Alphabet::bits())) {
    throw AlphabetMismatch("pipeline input must be a bit pattern over G");
  }
  if (level_count < 1) throw ConfigError("tower needs at least one level");
  PipelineState state;
  state.z = z;
  state.level_count = level_count;
  std::vector<std::vector<std::pair<Word, Symbol>>> level_cells(static_cast<std::size_t>(level_count));
  for (const auto& [n, y] : psi_star(co, x, z)) {
    auto [k, t] = phi0_inverse(y, level_count);
    state.kernel.emplace(n, k.pattern());
    for (std::size_t m = 0; m < t.levels.size(); ++m) {
      const Pattern& level = t.levels[m];
      for (std::size_t i = 0; i < level.size(); ++i) {
        level_cells[m].emplace_back(co.psi(level.cell(i), n, z), level.value(i));
      }
    }
  }
  for (const auto& cells : level_cells) state.levels.push_back(Pattern::from_cells(Alphabet::bits(), cells));
  return state;
}

Pattern key_pipeline_inverse(const Coinduction& co, const PipelineState& state) {
  Family y;
  for (const auto& [n, w] : state.kernel) {
    const TowerOutput t = tower_at(co, state.levels, n, w.support_ptr(), state.z);
    y.emplace(n, w ^ tower_section(t));
  }
  return psi_star_inverse(co, y, state.z);
}

PipelineState act_on_state(const Coinduction& co, const Word& g, const PipelineState& state) {
  std::map<std::size_t, SupportPtr> windows;
  for (const auto& [n, w] : state.kernel) windows.emplace(n, w.support_ptr());
  PipelineState out;
  out.kernel = key_beta(co, g, state.levels, state.z, windows).apply(state.kernel);
  out.levels = group_shift(co.group(), g, state.levels);
  out.z = co.act(g, state.z);
  out.level_count = state.level_count;
  return out;
}

LevelPatterns key_pi(const Coinduction& co, const Pattern& x, const ZPoint& z, int level_count) {
  return key_pipeline(co, x, z, level_count).levels;
}

PiCertificate key_pi_certificate(const Coinduction& co, const Word& g, int level, const ZPoint& z) {
  auto [f, n] = co.psi_inverse(g, z);
  PiCertificate cert{g, level, f, n, {}};
  for (const Word& d : tower_dependency(level)) cert.cells.push_back(co.psi(f * d, n, z));
  std::sort(cert.cells.begin(), cert.cells.end());
  cert.cells.erase(std::unique(cert.cells.begin(), cert.cells.end()), cert.cells.end());
  return cert;
}

}  // namespace owf
