#include "owf/gf2.hpp"

#include <bit>
#include <utility>

namespace owf {

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= other.blocks_[i];
  return *this;
}

bool BitVector::any() const noexcept {
  for (std::uint64_t b : blocks_) {
    if (b != 0) return true;
  }
  return false;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[i]));
  }
  return size_;
}

namespace {

// Gauss-Jordan in place; returns pivot column of each kept row.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].get(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

}  // namespace

std::size_t gf2_rank(std::vector<BitVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  return eliminate(rows, columns).size();
}

std::vector<BitVector> gf2_nullspace(std::vector<BitVector> rows, std::size_t columns) {
  const std::vector<std::size_t> pivots = eliminate(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(columns);
    v.set(free, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free)) v.set(pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace owf
