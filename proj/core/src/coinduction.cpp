#include "owf/coinduction.hpp"

#include <stdexcept>

#include "owf/errors.hpp"

namespace owf {

std::string to_string(ZKind kind) { return kind == ZKind::singleton ? "singleton" : "orbit"; }

ZKind z_kind_from_string(const std::string& text) {
  if (text == "singleton") return ZKind::singleton;
  if (text == "orbit") return ZKind::orbit;
  throw ConfigError("Z must be \"singleton\" or \"orbit\", got \"" + text + "\"");
}

namespace {

constexpr std::size_t kInverseMemoCap = std::size_t{1} << 20;

}  // namespace

Coinduction::Coinduction(CoinductionConfig config) : config_(std::move(config)) {
  if (!config_.group) throw ConfigError("coinduction needs a group oracle");
  const Word ia = config_.iota.image_a;
  const Word ib = config_.iota.image_b;
  SubgroupAutomaton iota_image({ia, ib});
  if (!iota_image.is_free_basis()) {
    throw ConfigError("iota is not injective: " + ia.to_string() + ", " + ib.to_string() +
                      " do not freely generate");
  }
  if (!iota_image.has_infinite_index()) {
    throw ConfigError("iota has finite-index image; the transversal would be finite");
  }
  const GroupOracle& g = *config_.group;
  if (config_.z_kind == ZKind::orbit) {
    automaton_ = std::make_unique<SubgroupAutomaton>(std::vector<Word>{ia, ib});
    return;
  }
  if (g.is_free_rank_two()) {
    SubgroupAutomaton theta_image({config_.theta.image_a, config_.theta.image_b});
    if (!theta_image.is_free_basis()) throw ConfigError("theta is not injective");
    auto composite = std::make_unique<SubgroupAutomaton>(
        std::vector<Word>{config_.theta.apply(ia), config_.theta.apply(ib)});
    if (!composite->has_infinite_index()) {
      throw ConfigError("theta(iota(F2)) has finite index in G");
    }
    automaton_ = std::move(composite);
    return;
  }
  if (!config_.search_radius || *config_.search_radius < 0) {
    throw ConfigError("orbit membership in " + g.name() +
                      " is undecidable without a search radius");
  }
}

bool Coinduction::keyed() const noexcept { return automaton_ != nullptr; }

Word Coinduction::from_f2(const Word& u) const {
  return config_.group->enumerate(length_lex_index(u));
}

Word Coinduction::to_f2(const Word& g) const { return word_at_index(config_.group->index_of(g)); }

ZPoint Coinduction::act(const Word& g, const ZPoint& z) const {
  if (config_.z_kind == ZKind::singleton) return z;
  return ZPoint{config_.group->multiply(g, z.location)};
}

ZPoint Coinduction::act_free(const Word& f, const ZPoint& z) const {
  if (config_.z_kind == ZKind::singleton) return z;
  // Right-regular transport through the enumeration bijection F2 -> G.
  return ZPoint{from_f2(to_f2(z.location) * f.inverse())};
}

Word Coinduction::alpha(const Word& f, const ZPoint& z) const {
  const GroupOracle& g = *config_.group;
  if (config_.z_kind == ZKind::singleton) return config_.theta.apply(g, f);
  return g.multiply(act_free(f, z).location, g.invert(z.location));
}

Word Coinduction::iota_alpha(const Word& f, const ZPoint& z) const {
  return alpha(config_.iota.apply(f), z);
}

Word Coinduction::f_action(const Word& f, const Word& g, const ZPoint& z) const {
  const GroupOracle& grp = *config_.group;
  return grp.multiply(g, grp.invert(iota_alpha(f, act(grp.invert(g), z))));
}

std::optional<std::string> Coinduction::orbit_key(const Word& g, const ZPoint& z) const {
  if (!automaton_) return std::nullopt;
  const GroupOracle& grp = *config_.group;
  if (config_.z_kind == ZKind::singleton) return automaton_->right_coset_key(g.inverse());
  const Word beta = to_f2(grp.multiply(grp.invert(g), z.location));
  return automaton_->right_coset_key(beta.inverse());
}

std::optional<Word> Coinduction::solve(const Word& from, const Word& to, const ZPoint& z) const {
  const GroupOracle& grp = *config_.group;
  if (config_.z_kind == ZKind::orbit) {
    const Word beta_to = to_f2(grp.multiply(grp.invert(to), z.location));
    const Word beta_from = to_f2(grp.multiply(grp.invert(from), z.location));
    return automaton_->express_in_rank_two(beta_to.inverse() * beta_from);
  }
  const Word target = grp.multiply(grp.invert(to), from);
  if (automaton_) return automaton_->express_in_rank_two(target);
  for (const Word& f : ball(*config_.search_radius)) {
    if (grp.equal(config_.theta.apply(grp, config_.iota.apply(f)), target)) return f;
  }
  if (config_.search_certified) return std::nullopt;
  throw UndecidableMembership("no orbit witness of length <= " +
                              std::to_string(*config_.search_radius) + " relating " +
                              from.to_string() + " and " + to.to_string());
}

void Coinduction::extend_locked(Fiber& fiber, const ZPoint& z, std::uint64_t through_index,
                                std::size_t min_reps) const {
  const GroupOracle& grp = *config_.group;
  while (fiber.next_candidate <= through_index || fiber.reps.size() < min_reps) {
    const Word x = grp.enumerate(fiber.next_candidate);
    bool fresh = true;
    std::optional<std::string> key = orbit_key(x, z);
    if (key) {
      fresh = !fiber.rep_of_key.contains(*key);
    } else {
      for (const Word& rep : fiber.reps) {
        if (solve(rep, x, z)) {
          fresh = false;
          break;
        }
      }
    }
    if (fresh) {
      if (fiber.reps.size() >= config_.max_depth) {
        throw InsufficientDepth("transversal is capped at " + std::to_string(config_.max_depth) +
                                    " entries",
                                config_.max_depth);
      }
      if (key) fiber.rep_of_key.emplace(*key, fiber.reps.size());
      fiber.reps.push_back(x);
    }
    ++fiber.next_candidate;
  }
}

std::size_t Coinduction::orbit_index_locked(Fiber& fiber, const Word& g, const ZPoint& z) const {
  // The representative of an orbit is its first enumerated element, so it
  // has been seen once the scan passes g itself.
  const std::uint64_t index = config_.group->index_of(g);
  if (auto key = orbit_key(g, z)) {
    auto it = fiber.rep_of_key.find(*key);
    if (it != fiber.rep_of_key.end()) return it->second;
    extend_locked(fiber, z, index, 0);
    it = fiber.rep_of_key.find(*key);
    if (it == fiber.rep_of_key.end()) throw std::logic_error("orbit key missing after scan");
    return it->second;
  }
  extend_locked(fiber, z, index, 0);
  for (std::size_t i = 0; i < fiber.reps.size(); ++i) {
    if (solve(fiber.reps[i], g, z)) return i;
  }
  throw std::logic_error("element outside every scanned orbit");
}

Word Coinduction::c(std::size_t n, const ZPoint& z) const {
  std::lock_guard lock(mutex_);
  Fiber& fiber = fibers_[z.location];
  if (n >= config_.max_depth) {
    throw InsufficientDepth("transversal entry " + std::to_string(n) + " requested",
                            config_.max_depth);
  }
  extend_locked(fiber, z, 0, n + 1);
  return fiber.reps[n];
}

std::vector<Word> Coinduction::transversal(std::size_t count, const ZPoint& z) const {
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(c(n, z));
  return out;
}

Word Coinduction::psi(const Word& f, std::size_t n, const ZPoint& z) const {
  return f_action(f.inverse(), c(n, z), z);
}

std::pair<Word, std::size_t> Coinduction::psi_inverse(const Word& g, const ZPoint& z) const {
  std::string memo_key = z.location.to_string();
  memo_key.push_back('#');
  memo_key += g.to_string();
  std::lock_guard lock(mutex_);
  if (auto it = inverse_memo_.find(memo_key); it != inverse_memo_.end()) return it->second;
  Fiber& fiber = fibers_[z.location];
  const std::size_t k = orbit_index_locked(fiber, g, z);
  const std::optional<Word> f = solve(fiber.reps[k], g, z);
  if (!f) throw std::logic_error("orbit representative does not reach its own orbit");
  std::pair<Word, std::size_t> result{f->inverse(), k};
  if (inverse_memo_.size() >= kInverseMemoCap) inverse_memo_.clear();
  inverse_memo_.emplace(std::move(memo_key), result);
  return result;
}

Coinduction::Step Coinduction::step(const Word& g, std::size_t n, const ZPoint& z) const {
  const Word moved = config_.group->multiply(g, c(n, z));
  auto [u, k] = psi_inverse(moved, act(g, z));
  return {k, std::move(u)};
}

}  // namespace owf
