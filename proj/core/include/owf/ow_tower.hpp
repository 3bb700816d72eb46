#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "owf/gf2.hpp"
#include "owf/pattern.hpp"

namespace owf {

// Edge labels of a bit configuration x on a window W:
//   p(f) = x(f) + x(fa)  wherever f, fa are both in W
//   q(f) = x(f) + x(fb)  wherever f, fb are both in W
struct OwImage {
  Pattern p;
  Pattern q;

  // Pair-alphabet view on the cells where both components are known.
  Pattern pairs() const;
};

OwImage ow_components(const Pattern& x);
// As ow_components, but refuses inputs where nothing at all is determined.
OwImage ow_map(const Pattern& x);

// Exhaustive fiber structure of ow_map over every bit pattern on ball(r):
// once for the pair pattern on the cells where both components are
// determined, once for the full edge labelling (p and q separately).
struct FiberCensus {
  int radius = 0;
  std::uint64_t inputs = 0;
  std::size_t pair_cells = 0;
  std::uint64_t pair_targets = 0;
  std::uint64_t pair_attained = 0;
  std::map<std::uint64_t, std::uint64_t> pair_fiber_sizes;  // size -> how many targets
  std::size_t edge_cells = 0;
  std::uint64_t edge_attained = 0;
  std::map<std::uint64_t, std::uint64_t> edge_fiber_sizes;

  bool pairs_surjective() const noexcept { return pair_attained == pair_targets; }
  bool pairs_uniform() const noexcept { return pair_fiber_sizes.size() == 1; }
};
// ResourceGuard when ball(r) has more than 24 cells.
FiberCensus ow_fiber_census(int r);

// Rebuilds x on `window` from its edge labels. Cells are visited in shortlex
// order; a cell whose parent is outside the window starts a new component and
// takes the anchor value.
Pattern ow_section(const Pattern& p, const Pattern& q, const SupportPtr& window, Symbol anchor = 0);
Pattern ow_section(const Pattern& pairs, Symbol anchor = 0);

// Cells on which each stage of the tower is determined for input window W:
// Q_{-1} = W, P_k = {f in Q_{k-1} : fa in Q_{k-1}}, Q_k = {f in Q_{k-1} : fb in Q_{k-1}}.
struct TowerShape {
  std::vector<SupportPtr> levels;  // P_0 .. P_{L-1}
  SupportPtr tail;                 // Q_{L-1}
};
TowerShape tower_shape(const SupportPtr& window, int level_count);

struct TowerOutput {
  SupportPtr window;
  std::vector<Pattern> levels;

  int level_count() const noexcept { return static_cast<int>(levels.size()); }
  // Level k restricted to the cells f with f * ball(k+1) inside the window;
  // for a centred ball of radius r this is ball(r - k - 1).
  Pattern core_level(int k) const;

  friend bool operator==(const TowerOutput& x, const TowerOutput& y) noexcept;
};

TowerOutput tower_map(const Pattern& x, int level_count);
TowerOutput shift(const Word& f, const TowerOutput& y);
TowerOutput xor_towers(const TowerOutput& x, const TowerOutput& y);
TowerOutput zero_tower(const SupportPtr& window, int level_count);

// Right inverse of tower_map: the tail below the last level is zero and every
// component anchor is zero. Levels may be given on subsets of their shapes;
// missing cells count as zero.
Pattern tower_section(const TowerOutput& y);

// Cells of x read when computing level m of the tower at the identity.
std::vector<Word> tower_dependency(int level);

class KernelWindow {
 public:
  // Throws if some determined tower bit of x is 1.
  KernelWindow(Pattern x, int level_count);
  static bool is_kernel(const Pattern& x, int level_count);
  static KernelWindow zero(const SupportPtr& window, int level_count);

  const Pattern& pattern() const noexcept { return x_; }
  int level_count() const noexcept { return levels_; }

  friend bool operator==(const KernelWindow&, const KernelWindow&) = default;

 private:
  Pattern x_;
  int levels_;
};

// k -> f.k + t, taking kernel windows on f^-1 . support(t) to kernel windows on
// support(t).
struct AffineWindowMap {
  Word shift;
  Pattern translation;

  static AffineWindowMap identity(const SupportPtr& window);

  SupportPtr domain() const;
  const SupportPtr& codomain() const noexcept { return translation.support_ptr(); }
  Pattern apply(const Pattern& k) const;
  KernelWindow apply(const KernelWindow& k) const;
  // Same map with the output cut down to `target`.
  AffineWindowMap restricted_to(const SupportPtr& target) const;
  AffineWindowMap restricted_to_ball(int radius) const { return restricted_to(Support::ball(radius)); }

  friend bool operator==(const AffineWindowMap&, const AffineWindowMap&) = default;
};

// second o first
AffineWindowMap compose(const AffineWindowMap& second, const AffineWindowMap& first);

// beta0(f, y)(k) = f.k + f.sigma(y) + sigma(f.y)
AffineWindowMap beta0(const Word& f, const TowerOutput& y);
// phi0(k, y) = k + sigma(y)
Pattern phi0(const KernelWindow& k, const TowerOutput& y);
std::pair<KernelWindow, TowerOutput> phi0_inverse(const Pattern& x, int level_count);

// The finite group of kernel windows on a fixed window.
class KernelGroup {
 public:
  KernelGroup(SupportPtr window, int level_count);

  const SupportPtr& window() const noexcept { return window_; }
  int level_count() const noexcept { return levels_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }
  Pattern basis_pattern(std::size_t i) const;

  bool contains(const Pattern& x) const;
  // Sum of the basis vectors selected by the bits of `coefficients`.
  Pattern element(const BitVector& coefficients) const;
  Pattern element(std::uint64_t coefficients) const;
  // All 2^dimension elements in coefficient order; refuses dimension > 24.
  std::vector<KernelWindow> elements() const;

 private:
  SupportPtr window_;
  int levels_;
  std::vector<BitVector> basis_;
};

// Every kernel window on ball(r); guarded by max_exhaustive_radius().
std::vector<KernelWindow> kernel_enumerate(int r, int level_count);
KernelGroup kernel_group(int r, int level_count);

// Linear forms (over the window cells) of every determined tower bit.
std::vector<BitVector> tower_forms(const SupportPtr& window, int level_count);

}  // namespace owf
