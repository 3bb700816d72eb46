#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace owf {

// Dense bit vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (blocks_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) {
      blocks_[i / 64] |= mask;
    } else {
      blocks_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { blocks_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& other) noexcept;
  bool any() const noexcept;
  std::size_t popcount() const noexcept;
  // Lowest set index, or size() if none.
  std::size_t first_set() const noexcept;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

std::size_t gf2_rank(std::vector<BitVector> rows);

// Basis of {x : <row, x> = 0 for every row}, in reduced echelon form over the
// free columns (basis vector j has exactly one free column set).
std::vector<BitVector> gf2_nullspace(std::vector<BitVector> rows, std::size_t columns);

}  // namespace owf
