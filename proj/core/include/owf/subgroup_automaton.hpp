#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "owf/word.hpp"

namespace owf {

// Word in abstract generators x_1..x_k; letter +i is x_i, -i its inverse.
using GeneratorWord = std::vector<int>;

GeneratorWord reduce_generator_word(GeneratorWord w);

// Folded (Stallings) automaton of the subgroup of F2 generated by a finite
// list of words. Every edge carries a label in the free group on the
// generators, so a word accepted at the base vertex can also be written back
// as a product of generators.
class SubgroupAutomaton {
 public:
  explicit SubgroupAutomaton(std::vector<Word> generators);

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<Word>& generators() const noexcept { return generators_; }
  std::size_t vertex_count() const noexcept { return next_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  // Rank of the subgroup: edges - vertices + 1 of the folded graph.
  std::size_t rank() const noexcept { return edge_count_ + 1 - next_.size(); }
  // The generators are a free basis (the map F_k -> F2 is injective).
  bool is_free_basis() const noexcept { return free_basis_; }
  // Some vertex misses one of the four letters.
  bool has_infinite_index() const;

  // Vertex reached by reading w from the base vertex.
  std::optional<std::size_t> read(const Word& w) const;
  bool contains(const Word& w) const;
  std::optional<GeneratorWord> express(const Word& w) const;
  // Canonical label of the right coset H*w: the vertex where reading w leaves
  // the folded graph and the unread suffix (empty when w is read completely).
  std::string right_coset_key(const Word& w) const;
  // Two generators only: the answer as a word in a (first) and b (second).
  std::optional<Word> express_in_rank_two(const Word& w) const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Word> generators_;
  std::vector<std::array<std::size_t, 4>> next_;
  std::vector<std::array<GeneratorWord, 4>> label_;
  std::size_t edge_count_ = 0;
  bool free_basis_ = true;
};

bool subgroup_member(const Word& w, const std::vector<Word>& generators);

}  // namespace owf
