#include "owf/ow_tower.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "owf/errors.hpp"

namespace owf {

namespace {

const Word& letter_a() {
  static const Word w = letter(Generator::a);
  return w;
}

const Word& letter_b() {
  static const Word w = letter(Generator::b);
  return w;
}

void require_bits(const Pattern& x, const char* what) {
  if (!(x.alphabet() == Alphabet::bits())) {
    throw AlphabetMismatch(std::string(what) + " needs a bit pattern, got " + x.alphabet().name());
  }
}

// x(f) + x(fg) on {f : f, fg in support}
Pattern edge_sums(const Pattern& x, const Word& g) {
  const auto plan = x.support().neighbors(g);
  std::vector<Symbol> values(plan->self_index.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = x.value(plan->self_index[i]) ^ x.value(plan->neighbor_index[i]);
  }
  return Pattern(Alphabet::bits(), plan->domain, std::move(values));
}

Symbol lookup(const Pattern& y, const Word& f, const char* component) {
  const std::size_t i = y.support().find(f);
  if (i == Support::npos) {
    throw SupportError(std::string("section needs ") + component + " at '" + f.to_string() + "'");
  }
  return y.value(i);
}

// Level given on a subset of its shape, padded with zeros.
Pattern pad_to(const Pattern& level, const SupportPtr& shape, int k) {
  if (same_cells(level.support_ptr(), shape)) return level;
  Pattern out = Pattern::zeros(Alphabet::bits(), shape);
  for (std::size_t i = 0; i < level.size(); ++i) {
    const std::size_t j = shape->find(level.cell(i));
    if (j == Support::npos) {
      throw SupportError("tower level " + std::to_string(k) + " has cell '" +
                         level.cell(i).to_string() + "' outside its determined shape");
    }
    out.set_value(j, level.value(i));
  }
  return out;
}

}  // namespace

Pattern OwImage::pairs() const {
  SupportPtr common = intersect(p.support_ptr(), q.support_ptr());
  std::vector<Symbol> values(common->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Word& f = (*common)[i];
    values[i] = 2 * p.value(p.support().find(f)) + q.value(q.support().find(f));
  }
  return Pattern(Alphabet::pairs(), std::move(common), std::move(values));
}

OwImage ow_components(const Pattern& x) {
  require_bits(x, "ow_map");
  return {edge_sums(x, letter_a()), edge_sums(x, letter_b())};
}

OwImage ow_map(const Pattern& x) {
  OwImage out = ow_components(x);
  if (out.p.empty() && out.q.empty()) {
    throw WindowTooSmall("ow_map determines nothing on this window", 1);
  }
  return out;
}

FiberCensus ow_fiber_census(int r) {
  const SupportPtr window = Support::ball(r);
  if (window->size() > 24) {
    throw ResourceGuard("fiber census over ball(" + std::to_string(r) + ") needs 2^" +
                        std::to_string(window->size()) + " inputs");
  }
  FiberCensus census;
  census.radius = r;
  census.inputs = std::uint64_t{1} << window->size();
  std::unordered_map<std::uint64_t, std::uint64_t> pair_counts;
  std::unordered_map<std::uint64_t, std::uint64_t> edge_counts;
  std::vector<Symbol> values(window->size());
  for (std::uint64_t bits = 0; bits < census.inputs; ++bits) {
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = (bits >> i) & 1U;
    const OwImage image = ow_components(Pattern(Alphabet::bits(), window, values));
    const Pattern pairs = image.pairs();
    std::uint64_t pair_code = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) pair_code = pair_code * 4 + pairs.value(i);
    std::uint64_t edge_code = 0;
    for (const Pattern* part : {&image.p, &image.q}) {
      for (std::size_t i = 0; i < part->size(); ++i) edge_code = edge_code * 2 + part->value(i);
    }
    ++pair_counts[pair_code];
    ++edge_counts[edge_code];
    if (bits == 0) {
      census.pair_cells = pairs.size();
      census.edge_cells = image.p.size() + image.q.size();
    }
  }
  census.pair_targets = std::uint64_t{1} << (2 * census.pair_cells);
  census.pair_attained = pair_counts.size();
  for (const auto& entry : pair_counts) ++census.pair_fiber_sizes[entry.second];
  census.edge_attained = edge_counts.size();
  for (const auto& entry : edge_counts) ++census.edge_fiber_sizes[entry.second];
  return census;
}

Pattern ow_section(const Pattern& p, const Pattern& q, const SupportPtr& window, Symbol anchor) {
  require_bits(p, "ow_section");
  require_bits(q, "ow_section");
  if (anchor > 1) throw AlphabetMismatch("anchor must be a bit");
  std::vector<Symbol> x(window->size());
  for (std::size_t i = 0; i < window->size(); ++i) {
    const Word& f = (*window)[i];
    const std::size_t parent = f.empty() ? Support::npos : window->find(f.parent());
    if (parent == Support::npos) {
      x[i] = anchor;
      continue;
    }
    const Word& pw = (*window)[parent];
    Symbol edge = 0;
    switch (f.back()) {
      case Generator::a:
        edge = lookup(p, pw, "p");
        break;
      case Generator::a_inv:
        edge = lookup(p, f, "p");
        break;
      case Generator::b:
        edge = lookup(q, pw, "q");
        break;
      case Generator::b_inv:
        edge = lookup(q, f, "q");
        break;
    }
    x[i] = x[parent] ^ edge;
  }
  return Pattern(Alphabet::bits(), window, std::move(x));
}

Pattern ow_section(const Pattern& pairs, Symbol anchor) {
  if (!(pairs.alphabet() == Alphabet::pairs())) {
    throw AlphabetMismatch("ow_section needs a pair pattern, got " + pairs.alphabet().name());
  }
  std::vector<Symbol> first(pairs.size());
  std::vector<Symbol> second(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    first[i] = pairs.value(i) >> 1;
    second[i] = pairs.value(i) & 1;
  }
  return ow_section(Pattern(Alphabet::bits(), pairs.support_ptr(), std::move(first)),
                    Pattern(Alphabet::bits(), pairs.support_ptr(), std::move(second)),
                    pairs.support_ptr(), anchor);
}

TowerShape tower_shape(const SupportPtr& window, int level_count) {
  if (level_count < 1) throw ConfigError("tower needs at least one level");
  TowerShape shape;
  SupportPtr q = window;
  for (int k = 0; k < level_count; ++k) {
    shape.levels.push_back(q->neighbors(letter_a())->domain);
    q = q->neighbors(letter_b())->domain;
  }
  shape.tail = q;
  return shape;
}

Pattern TowerOutput::core_level(int k) const {
  const Pattern& level = levels.at(static_cast<std::size_t>(k));
  const std::vector<Word> around = owf::ball(k + 1);
  std::vector<Word> cells;
  for (const Word& f : level.support().cells()) {
    const bool inside = std::all_of(around.begin(), around.end(),
                                    [&](const Word& w) { return window->contains(f * w); });
    if (inside) cells.push_back(f);
  }
  return restrict(level, Support::make(std::move(cells)));
}

bool operator==(const TowerOutput& x, const TowerOutput& y) noexcept {
  return same_cells(x.window, y.window) && x.levels == y.levels;
}

TowerOutput tower_map(const Pattern& x, int level_count) {
  require_bits(x, "tower_map");
  if (level_count < 1) throw ConfigError("tower needs at least one level");
  TowerOutput out{x.support_ptr(), {}};
  out.levels.reserve(static_cast<std::size_t>(level_count));
  Pattern q = x;
  for (int k = 0; k < level_count; ++k) {
    out.levels.push_back(edge_sums(q, letter_a()));
    q = edge_sums(q, letter_b());
  }
  return out;
}

TowerOutput shift(const Word& f, const TowerOutput& y) {
  TowerOutput out{y.window->shifted(f)->target, {}};
  if (f.empty()) out.window = y.window;
  for (const Pattern& level : y.levels) out.levels.push_back(shift(f, level));
  return out;
}

TowerOutput xor_towers(const TowerOutput& x, const TowerOutput& y) {
  if (x.levels.size() != y.levels.size()) throw SupportError("towers have different level counts");
  TowerOutput out{intersect(x.window, y.window), {}};
  for (std::size_t k = 0; k < x.levels.size(); ++k) out.levels.push_back(x.levels[k] ^ y.levels[k]);
  return out;
}

TowerOutput zero_tower(const SupportPtr& window, int level_count) {
  const TowerShape shape = tower_shape(window, level_count);
  TowerOutput out{window, {}};
  for (const SupportPtr& s : shape.levels) out.levels.push_back(Pattern::zeros(Alphabet::bits(), s));
  return out;
}

Pattern tower_section(const TowerOutput& y) {
  if (y.levels.empty()) throw ConfigError("tower needs at least one level");
  const TowerShape shape = tower_shape(y.window, y.level_count());
  std::vector<SupportPtr> q_windows{y.window};
  for (int k = 0; k + 1 < y.level_count(); ++k) {
    q_windows.push_back(q_windows.back()->neighbors(letter_b())->domain);
  }
  Pattern q = Pattern::zeros(Alphabet::bits(), shape.tail);
  for (int k = y.level_count() - 1; k >= 0; --k) {
    const auto idx = static_cast<std::size_t>(k);
    require_bits(y.levels[idx], "tower_section");
    const Pattern p = pad_to(y.levels[idx], shape.levels[idx], k);
    q = ow_section(p, q, q_windows[idx], 0);
  }
  return q;
}

std::vector<Word> tower_dependency(int level) {
  if (level < 0) throw ConfigError("tower level must be non-negative");
  std::set<Word> q{Word{}};
  auto extend = [](const std::set<Word>& d, const Word& g) {
    std::set<Word> out = d;
    for (const Word& w : d) out.insert(g * w);
    return out;
  };
  for (int m = 0; m < level; ++m) q = extend(q, letter_b());
  const std::set<Word> p = extend(q, letter_a());
  return {p.begin(), p.end()};
}

KernelWindow::KernelWindow(Pattern x, int level_count) : x_(std::move(x)), levels_(level_count) {
  if (!is_kernel(x_, levels_)) throw Error("pattern is not a kernel window");
}

bool KernelWindow::is_kernel(const Pattern& x, int level_count) {
  const TowerOutput y = tower_map(x, level_count);
  return std::all_of(y.levels.begin(), y.levels.end(),
                     [](const Pattern& level) { return level.all_equal(0); });
}

KernelWindow KernelWindow::zero(const SupportPtr& window, int level_count) {
  return KernelWindow(Pattern::zeros(Alphabet::bits(), window), level_count);
}

AffineWindowMap AffineWindowMap::identity(const SupportPtr& window) {
  return {Word{}, Pattern::zeros(Alphabet::bits(), window)};
}

SupportPtr AffineWindowMap::domain() const {
  if (shift.empty()) return translation.support_ptr();
  return translation.support().shifted(shift.inverse())->target;
}

Pattern AffineWindowMap::apply(const Pattern& k) const {
  const SupportPtr dom = domain();
  Pattern input = k;
  if (!same_cells(k.support_ptr(), dom)) {
    if (!dom->is_subset_of(k.support())) {
      int needed = 0;
      for (const Word& w : dom->cells()) needed = std::max(needed, static_cast<int>(w.size()));
      throw WindowTooSmall("affine map input misses part of its domain", needed);
    }
    input = restrict(k, dom);
  }
  return owf::shift(shift, input) ^ translation;
}

KernelWindow AffineWindowMap::apply(const KernelWindow& k) const {
  return KernelWindow(apply(k.pattern()), k.level_count());
}

AffineWindowMap AffineWindowMap::restricted_to(const SupportPtr& target) const {
  if (!target->is_subset_of(translation.support())) {
    int needed = 0;
    const Word back = shift.inverse();
    for (const Word& w : target->cells()) needed = std::max(needed, static_cast<int>((back * w).size()));
    throw WindowTooSmall("affine map is not defined on the requested output window", needed);
  }
  return {shift, restrict(translation, target)};
}

AffineWindowMap compose(const AffineWindowMap& second, const AffineWindowMap& first) {
  return {second.shift * first.shift, owf::shift(second.shift, first.translation) ^ second.translation};
}

AffineWindowMap beta0(const Word& f, const TowerOutput& y) {
  const TowerOutput moved = shift(f, y);
  const Pattern t = shift(f, tower_section(y)) ^ tower_section(moved);
  return {f, t};
}

Pattern phi0(const KernelWindow& k, const TowerOutput& y) {
  if (!same_cells(k.pattern().support_ptr(), y.window)) {
    throw SupportError("phi0: kernel window and tower output live on different windows");
  }
  return k.pattern() ^ tower_section(y);
}

std::pair<KernelWindow, TowerOutput> phi0_inverse(const Pattern& x, int level_count) {
  TowerOutput y = tower_map(x, level_count);
  Pattern k = x ^ tower_section(y);
  return {KernelWindow(std::move(k), level_count), std::move(y)};
}

std::vector<BitVector> tower_forms(const SupportPtr& window, int level_count) {
  if (level_count < 1) throw ConfigError("tower needs at least one level");
  const std::size_t n = window->size();
  std::vector<BitVector> q(n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i) q[i].set(i, true);
  SupportPtr q_support = window;
  std::vector<BitVector> rows;
  for (int k = 0; k < level_count; ++k) {
    const auto pa = q_support->neighbors(letter_a());
    for (std::size_t i = 0; i < pa->self_index.size(); ++i) {
      BitVector row = q[pa->self_index[i]];
      row ^= q[pa->neighbor_index[i]];
      rows.push_back(std::move(row));
    }
    const auto pb = q_support->neighbors(letter_b());
    std::vector<BitVector> next;
    next.reserve(pb->self_index.size());
    for (std::size_t i = 0; i < pb->self_index.size(); ++i) {
      BitVector row = q[pb->self_index[i]];
      row ^= q[pb->neighbor_index[i]];
      next.push_back(std::move(row));
    }
    q = std::move(next);
    q_support = pb->domain;
  }
  return rows;
}

KernelGroup::KernelGroup(SupportPtr window, int level_count)
    : window_(std::move(window)), levels_(level_count) {
  basis_ = gf2_nullspace(tower_forms(window_, levels_), window_->size());
}

Pattern KernelGroup::basis_pattern(std::size_t i) const {
  return element([&] {
    BitVector c(basis_.size());
    c.set(i, true);
    return c;
  }());
}

bool KernelGroup::contains(const Pattern& x) const {
  return same_cells(x.support_ptr(), window_) && KernelWindow::is_kernel(x, levels_);
}

Pattern KernelGroup::element(const BitVector& coefficients) const {
  BitVector sum(window_->size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coefficients.get(i)) sum ^= basis_[i];
  }
  std::vector<Symbol> values(window_->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = sum.get(i) ? 1 : 0;
  return Pattern(Alphabet::bits(), window_, std::move(values));
}

Pattern KernelGroup::element(std::uint64_t coefficients) const {
  BitVector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size() && i < 64; ++i) c.set(i, (coefficients >> i) & 1U);
  return element(c);
}

std::vector<KernelWindow> KernelGroup::elements() const {
  if (dimension() > 24) {
    throw ResourceGuard("kernel group has 2^" + std::to_string(dimension()) +
                        " elements; listing is limited to 2^24");
  }
  std::vector<KernelWindow> out;
  const std::uint64_t count = std::uint64_t{1} << dimension();
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) out.emplace_back(element(c), levels_);
  return out;
}

KernelGroup kernel_group(int r, int level_count) {
  if (r < 0) throw ConfigError("radius must be non-negative");
  if (r > max_exhaustive_radius()) {
    throw ResourceGuard("radius " + std::to_string(r) + " exceeds the exhaustive limit " +
                        std::to_string(max_exhaustive_radius()) + " (set OWF_MAX_RADIUS to raise it)");
  }
  return KernelGroup(Support::ball(r), level_count);
}

std::vector<KernelWindow> kernel_enumerate(int r, int level_count) {
  return kernel_group(r, level_count).elements();
}

}  // namespace owf
