#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "owf/coinduction.hpp"
#include "owf/pipeline.hpp"
#include "owf/pattern.hpp"

namespace fixtures {

// Number of common cells if x and y agree on all of them, nullopt otherwise.
inline std::optional<std::size_t> overlap_agreement(const owf::Pattern& x, const owf::Pattern& y) {
  std::size_t common = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto v = y.find(x.cell(i));
    if (!v) continue;
    if (*v != x.value(i)) return std::nullopt;
    ++common;
  }
  return common;
}

// Compares two pipeline states on every cell both determine; returns the
// number of cells compared, nullopt on any disagreement.
inline std::optional<std::size_t> states_agree(const owf::PipelineState& lhs,
                                               const owf::PipelineState& rhs) {
  if (!(lhs.z == rhs.z) || lhs.levels.size() != rhs.levels.size()) return std::nullopt;
  std::size_t compared = 0;
  for (std::size_t m = 0; m < lhs.levels.size(); ++m) {
    const auto c = overlap_agreement(lhs.levels[m], rhs.levels[m]);
    if (!c) return std::nullopt;
    compared += *c;
  }
  for (const auto& [n, w] : lhs.kernel) {
    auto it = rhs.kernel.find(n);
    if (it == rhs.kernel.end()) continue;
    const auto c = overlap_agreement(w, it->second);
    if (!c) return std::nullopt;
    compared += *c;
  }
  return compared;
}

}  // namespace fixtures
