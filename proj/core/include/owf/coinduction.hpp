#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "owf/group_oracle.hpp"
#include "owf/subgroup_automaton.hpp"
#include "owf/word.hpp"

namespace owf {

enum class ZKind { singleton, orbit };

std::string to_string(ZKind kind);
ZKind z_kind_from_string(const std::string& text);

// A point of Z. For the orbit configuration Z = G.z the point g.z is stored
// by its location g; the singleton has location 1.
struct ZPoint {
  Word location;

  friend bool operator==(const ZPoint&, const ZPoint&) = default;
  friend auto operator<=>(const ZPoint&, const ZPoint&) = default;
};

struct CoinductionConfig {
  std::shared_ptr<const GroupOracle> group = free_group_oracle();
  Homomorphism theta = Homomorphism::identity();
  Homomorphism iota{Word::parse("aa"), Word::parse("bb")};
  ZKind z_kind = ZKind::singleton;
  // Orbit tests in groups that are not F2 fall back to searching words of
  // length <= search_radius. A certified radius turns "not found" into "no".
  std::optional<int> search_radius;
  bool search_certified = false;
  // Cap on transversal entries per point of Z.
  std::size_t max_depth = std::size_t{1} << 16;
};

// The free F2-action f.(g, z) = (g alpha(iota(f), g^-1 z)^-1, z) on G x Z, its
// greedy transversal c and the derived cocycles delta, gamma and bijection psi.
//
// Tables grow lazily and are shared between threads; every public member is
// safe to call concurrently.
class Coinduction {
 public:
  explicit Coinduction(CoinductionConfig config);
  Coinduction(const Coinduction&) = delete;
  Coinduction& operator=(const Coinduction&) = delete;

  const CoinductionConfig& config() const noexcept { return config_; }
  const GroupOracle& group() const noexcept { return *config_.group; }

  ZPoint base_point() const { return ZPoint{config_.group->identity()}; }
  // g . z
  ZPoint act(const Word& g, const ZPoint& z) const;
  // f . z for the F2-action on Z
  ZPoint act_free(const Word& f, const ZPoint& z) const;
  // alpha(f, z) . z = f . z
  Word alpha(const Word& f, const ZPoint& z) const;

  Word f_action(const Word& f, const Word& g, const ZPoint& z) const;
  // Some f with f . (from, z) = (to, z), if the two lie in one orbit.
  std::optional<Word> solve(const Word& from, const Word& to, const ZPoint& z) const;

  Word c(std::size_t n, const ZPoint& z) const;
  std::vector<Word> transversal(std::size_t count, const ZPoint& z) const;

  // delta(g, z)(n) and gamma(g, n, z) computed together.
  struct Step {
    std::size_t k;
    Word u;
  };
  Step step(const Word& g, std::size_t n, const ZPoint& z) const;
  std::size_t delta(const Word& g, std::size_t n, const ZPoint& z) const { return step(g, n, z).k; }
  Word gamma(const Word& g, std::size_t n, const ZPoint& z) const { return step(g, n, z).u; }

  // psi_z(f, n) = f^-1 . c(n, z)
  Word psi(const Word& f, std::size_t n, const ZPoint& z) const;
  std::pair<Word, std::size_t> psi_inverse(const Word& g, const ZPoint& z) const;

 private:
  struct Fiber {
    std::vector<Word> reps;
    std::unordered_map<std::string, std::size_t> rep_of_key;
    std::uint64_t next_candidate = 0;
  };

  Word iota_alpha(const Word& f, const ZPoint& z) const;
  Word from_f2(const Word& u) const;
  Word to_f2(const Word& g) const;
  std::optional<std::string> orbit_key(const Word& g, const ZPoint& z) const;
  bool keyed() const noexcept;
  // Transversal index of the orbit of (g, z); caller holds the lock.
  std::size_t orbit_index_locked(Fiber& fiber, const Word& g, const ZPoint& z) const;
  void extend_locked(Fiber& fiber, const ZPoint& z, std::uint64_t through_index,
                     std::size_t min_reps) const;

  CoinductionConfig config_;
  // Subgroup read off by orbit keys: theta(iota(F2)) for the singleton,
  // iota(F2) for the orbit configuration.
  std::unique_ptr<SubgroupAutomaton> automaton_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Fiber, WordHash> fibers_;
  mutable std::unordered_map<std::string, std::pair<Word, std::size_t>> inverse_memo_;
};

}  // namespace owf
