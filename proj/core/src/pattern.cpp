#include "owf/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include "owf/errors.hpp"

namespace owf {

namespace {

// Plans are cheap to rebuild; the cap only stops unbounded growth when many
// distinct shifts of one support are requested.
constexpr std::size_t kMemoCap = 4096;

std::uint32_t parse_suffix(const std::string& name, std::size_t prefix) {
  std::uint32_t value = 0;
  const char* first = name.data() + prefix;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("bad alphabet name '" + name + "'");
  }
  return value;
}

}  // namespace

Alphabet Alphabet::levels(int count) {
  if (count < 1 || count > 31) throw ConfigError("level count must be in 1..31");
  return {Kind::levels, std::uint32_t{1} << count, static_cast<std::uint32_t>(count)};
}

Alphabet Alphabet::product(std::uint32_t n) {
  if (n == 0 || n > 65535) throw ConfigError("product alphabet needs 1 <= n <= 65535");
  return {Kind::product, n * n, n};
}

Alphabet Alphabet::generic(std::uint32_t size) {
  if (size == 0) throw ConfigError("alphabet must be non-empty");
  return {Kind::generic, size, size};
}

Alphabet Alphabet::from_name(const std::string& name) {
  if (name == "bits") return bits();
  if (name == "pairs") return pairs();
  if (name.rfind("levels-", 0) == 0) return levels(static_cast<int>(parse_suffix(name, 7)));
  if (name.rfind("product-", 0) == 0) return product(parse_suffix(name, 8));
  if (name.rfind("symbols-", 0) == 0) return generic(parse_suffix(name, 8));
  throw ParseError("unknown alphabet '" + name + "'");
}

std::string Alphabet::name() const {
  switch (kind_) {
    case Kind::bits:
      return "bits";
    case Kind::pairs:
      return "pairs";
    case Kind::levels:
      return "levels-" + std::to_string(parameter_);
    case Kind::product:
      return "product-" + std::to_string(parameter_);
    case Kind::generic:
      return "symbols-" + std::to_string(parameter_);
  }
  return "?";
}

Support::Support(std::vector<Word> sorted_cells) : cells_(std::move(sorted_cells)) {
  index_.reserve(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    index_.emplace(cells_[i], static_cast<std::uint32_t>(i));
  }
}

SupportPtr Support::make(std::vector<Word> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return std::make_shared<const Support>(std::move(cells));
}

SupportPtr Support::ball(int r) {
  static std::mutex mutex;
  static std::map<int, SupportPtr> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  SupportPtr s = std::make_shared<const Support>(owf::ball(r));
  cache.emplace(r, s);
  return s;
}

SupportPtr Support::empty() {
  static const SupportPtr instance = std::make_shared<const Support>(std::vector<Word>{});
  return instance;
}

std::size_t Support::find(const Word& w) const noexcept {
  auto it = index_.find(w);
  return it == index_.end() ? npos : it->second;
}

bool Support::is_subset_of(const Support& other) const noexcept {
  if (this == &other) return true;
  return std::all_of(cells_.begin(), cells_.end(),
                     [&](const Word& w) { return other.contains(w); });
}

int Support::inner_radius() const noexcept {
  // Cells are in shortlex order, so ball(r) is a prefix when contained.
  int r = -1;
  for (;;) {
    const std::uint64_t need = ball_size(r + 1);
    if (need > cells_.size()) return r;
    if (cells_[need - 1].size() != static_cast<std::size_t>(r + 1)) return r;
    if (need < cells_.size() && cells_[need].size() == static_cast<std::size_t>(r + 1)) return r;
    ++r;
  }
}

std::shared_ptr<const Support::ShiftPlan> Support::shifted(const Word& f) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = shift_memo_.find(f);
    if (it != shift_memo_.end()) return it->second;
  }
  std::vector<std::pair<Word, std::uint32_t>> moved;
  moved.reserve(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    moved.emplace_back(f * cells_[i], static_cast<std::uint32_t>(i));
  }
  std::sort(moved.begin(), moved.end());
  auto plan = std::make_shared<ShiftPlan>();
  std::vector<Word> target_cells;
  target_cells.reserve(moved.size());
  plan->source_index.reserve(moved.size());
  for (auto& [w, i] : moved) {
    target_cells.push_back(std::move(w));
    plan->source_index.push_back(i);
  }
  plan->target = std::make_shared<const Support>(std::move(target_cells));
  std::lock_guard lock(memo_mutex_);
  if (shift_memo_.size() >= kMemoCap) shift_memo_.clear();
  return shift_memo_.emplace(f, std::move(plan)).first->second;
}

std::shared_ptr<const Support::NeighborPlan> Support::neighbors(const Word& g) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = neighbor_memo_.find(g);
    if (it != neighbor_memo_.end()) return it->second;
  }
  auto plan = std::make_shared<NeighborPlan>();
  std::vector<Word> domain;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const std::size_t j = find(cells_[i] * g);
    if (j == npos) continue;
    domain.push_back(cells_[i]);
    plan->self_index.push_back(static_cast<std::uint32_t>(i));
    plan->neighbor_index.push_back(static_cast<std::uint32_t>(j));
  }
  plan->domain = std::make_shared<const Support>(std::move(domain));
  std::lock_guard lock(memo_mutex_);
  if (neighbor_memo_.size() >= kMemoCap) neighbor_memo_.clear();
  return neighbor_memo_.emplace(g, std::move(plan)).first->second;
}

SupportPtr intersect(const SupportPtr& x, const SupportPtr& y) {
  if (same_cells(x, y)) return x;
  std::vector<Word> out;
  std::set_intersection(x->cells().begin(), x->cells().end(), y->cells().begin(),
                        y->cells().end(), std::back_inserter(out));
  if (out.size() == x->size()) return x;
  if (out.size() == y->size()) return y;
  return std::make_shared<const Support>(std::move(out));
}

bool same_cells(const SupportPtr& x, const SupportPtr& y) noexcept {
  return x == y || *x == *y;
}

Pattern::Pattern(Alphabet alphabet, SupportPtr support, std::vector<Symbol> values)
    : alphabet_(alphabet), support_(std::move(support)), values_(std::move(values)) {
  if (!support_) throw SupportError("pattern needs a support");
  if (values_.size() != support_->size()) {
    throw SupportError("pattern has " + std::to_string(values_.size()) + " values for " +
                       std::to_string(support_->size()) + " cells");
  }
  for (Symbol s : values_) {
    if (s >= alphabet_.size()) {
      throw AlphabetMismatch("symbol " + std::to_string(s) + " outside alphabet " + alphabet_.name());
    }
  }
}

Pattern Pattern::constant(Alphabet alphabet, SupportPtr support, Symbol s) {
  const std::size_t n = support->size();
  return Pattern(alphabet, std::move(support), std::vector<Symbol>(n, s));
}

Pattern Pattern::from_cells(Alphabet alphabet, const std::vector<std::pair<Word, Symbol>>& cells) {
  std::vector<std::pair<Word, Symbol>> sorted = cells;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Word> words;
  std::vector<Symbol> values;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i].first == sorted[i - 1].first) {
      throw SupportError("cell " + sorted[i].first.to_string() + " given twice");
    }
    words.push_back(sorted[i].first);
    values.push_back(sorted[i].second);
  }
  return Pattern(alphabet, std::make_shared<const Support>(std::move(words)), std::move(values));
}

Symbol Pattern::at(const Word& w) const {
  const std::size_t i = support_->find(w);
  if (i == Support::npos) throw SupportError("cell '" + w.to_string() + "' outside support");
  return values_[i];
}

std::optional<Symbol> Pattern::find(const Word& w) const noexcept {
  const std::size_t i = support_->find(w);
  if (i == Support::npos) return std::nullopt;
  return values_[i];
}

void Pattern::set(const Word& w, Symbol s) {
  const std::size_t i = support_->find(w);
  if (i == Support::npos) throw SupportError("cell '" + w.to_string() + "' outside support");
  set_value(i, s);
}

void Pattern::set_value(std::size_t i, Symbol s) {
  if (s >= alphabet_.size()) {
    throw AlphabetMismatch("symbol " + std::to_string(s) + " outside alphabet " + alphabet_.name());
  }
  values_[i] = s;
}

bool Pattern::all_equal(Symbol s) const noexcept {
  return std::all_of(values_.begin(), values_.end(), [s](Symbol v) { return v == s; });
}

bool operator==(const Pattern& x, const Pattern& y) noexcept {
  return x.alphabet_ == y.alphabet_ && x.values_ == y.values_ &&
         same_cells(x.support_, y.support_);
}

Pattern shift(const Word& f, const Pattern& x) {
  if (f.empty()) return x;
  const auto plan = x.support().shifted(f);
  std::vector<Symbol> values(plan->source_index.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = x.value(plan->source_index[i]);
  return Pattern(x.alphabet(), plan->target, std::move(values));
}

Pattern xor_patterns(const Pattern& x, const Pattern& y) {
  if (!(x.alphabet() == y.alphabet())) {
    throw AlphabetMismatch("xor of " + x.alphabet().name() + " and " + y.alphabet().name());
  }
  if (!x.alphabet().is_binary_vector()) {
    throw AlphabetMismatch("xor needs a GF(2) alphabet, got " + x.alphabet().name());
  }
  if (same_cells(x.support_ptr(), y.support_ptr())) {
    std::vector<Symbol> values(x.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = x.value(i) ^ y.value(i);
    return Pattern(x.alphabet(), x.support_ptr(), std::move(values));
  }
  SupportPtr common = intersect(x.support_ptr(), y.support_ptr());
  std::vector<Symbol> values(common->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Word& w = (*common)[i];
    values[i] = x.value(x.support().find(w)) ^ y.value(y.support().find(w));
  }
  return Pattern(x.alphabet(), std::move(common), std::move(values));
}

Pattern restrict(const Pattern& x, const SupportPtr& s) {
  if (same_cells(x.support_ptr(), s)) return x;
  std::vector<Symbol> values(s->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t j = x.support().find((*s)[i]);
    if (j == Support::npos) {
      throw SupportError("restriction cell '" + (*s)[i].to_string() + "' outside support");
    }
    values[i] = x.value(j);
  }
  return Pattern(x.alphabet(), s, std::move(values));
}

Pattern restrict(const Pattern& x, std::vector<Word> cells) {
  return restrict(x, Support::make(std::move(cells)));
}

int max_exhaustive_radius() {
  if (const char* env = std::getenv("OWF_MAX_RADIUS")) {
    int value = 0;
    const char* end = env;
    while (*end) ++end;
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value >= 0) return value;
    throw ConfigError(std::string("OWF_MAX_RADIUS must be a non-negative integer, got '") + env + "'");
  }
  return 4;
}

}  // namespace owf
