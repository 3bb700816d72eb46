#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "owf/coinduction.hpp"
#include "owf/ow_tower.hpp"
#include "owf/pattern.hpp"

namespace owf {

// Patterns over F2 indexed by the transversal index n.
using Family = std::map<std::size_t, Pattern>;
// A (2^N)-valued pattern truncated to L levels, one bit pattern per level.
using LevelPatterns = std::vector<Pattern>;

// (g . x)(h) = x(g^-1 h) for patterns over G.
Pattern group_shift(const GroupOracle& group, const Word& g, const Pattern& x);
LevelPatterns group_shift(const GroupOracle& group, const Word& g, const LevelPatterns& x);

// Cells psi_z(f, n) with |f| <= radius and n < count: a window over G whose
// psi* coordinates are all full F2-balls.
SupportPtr coordinate_window(const Coinduction& co, int radius, std::size_t count, const ZPoint& z);

// psi*_z(x)(n)(f) = x(psi_z(f, n)) on the cells of G covered by x.
Family psi_star(const Coinduction& co, const Pattern& x, const ZPoint& z);
Pattern psi_star_inverse(const Coinduction& co, const Family& family, const ZPoint& z);

// How the G-action on families moves coordinates: output n reads input m
// through the F2-shift by u^-1, with m = delta(g^-1, g.z)(n) and
// u = gamma(g^-1, n, g.z).
struct IndexMove {
  std::size_t from;
  Word u;
};
std::map<std::size_t, IndexMove> induced_moves(const Coinduction& co, const Word& g,
                                               const std::vector<std::size_t>& inputs,
                                               const ZPoint& z);

std::pair<Family, ZPoint> induced_action(const Coinduction& co, const Word& g, const Family& x,
                                         const ZPoint& z);
std::pair<std::map<std::size_t, TowerOutput>, ZPoint> induced_action(
    const Coinduction& co, const Word& g, const std::map<std::size_t, TowerOutput>& x,
    const ZPoint& z);

// Coordinate permutation followed by coordinate-wise affine maps on families
// of kernel windows: out(n) = maps[n].second(w(maps[n].first)).
struct AffineFamilyMap {
  std::map<std::size_t, std::pair<std::size_t, AffineWindowMap>> maps;

  Family apply(const Family& w) const;
  friend bool operator==(const AffineFamilyMap&, const AffineFamilyMap&) = default;
};

// second o first
AffineFamilyMap compose(const AffineFamilyMap& second, const AffineFamilyMap& first);

struct PipelineState {
  Family kernel;          // w, one kernel window per n
  LevelPatterns levels;   // x' over G
  ZPoint z;
  int level_count = 0;
};

// The tower levels psi*_z(x')(n), on the window `window`.
TowerOutput tower_at(const Coinduction& co, const LevelPatterns& levels, std::size_t n,
                     const SupportPtr& window, const ZPoint& z);

// beta(g, x', z); `windows` are the input windows of the kernel family.
AffineFamilyMap key_beta(const Coinduction& co, const Word& g, const LevelPatterns& levels,
                         const ZPoint& z, const std::map<std::size_t, SupportPtr>& windows);

// 2^G x Z -> K0^N x (2^N)^G x Z and back.
PipelineState key_pipeline(const Coinduction& co, const Pattern& x, const ZPoint& z, int level_count);
Pattern key_pipeline_inverse(const Coinduction& co, const PipelineState& state);
// g . (w, x', z) = (beta(g, x', z)(w), g . x', g . z)
PipelineState act_on_state(const Coinduction& co, const Word& g, const PipelineState& state);

// pi(x, z): the (2^N)^G part of the pipeline.
LevelPatterns key_pi(const Coinduction& co, const Pattern& x, const ZPoint& z, int level_count);

// Input cells of G read by pi(., z)(g)(m): psi_z(f d, n) for d in the level-m
// dependency set, where psi_z(f, n) = g.
struct PiCertificate {
  Word g;
  int level;
  Word f;
  std::size_t n;
  std::vector<Word> cells;
};
PiCertificate key_pi_certificate(const Coinduction& co, const Word& g, int level, const ZPoint& z);

}  // namespace owf
