#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcl {

// Square matrix over GF(2), one 64-bit word per row. Dimension <= 64.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t dim) : dim_(dim), rows_(dim, 0) {
    if (dim > 64) throw std::invalid_argument("BitMatrix dimension exceeds 64");
  }

  std::size_t dim() const { return dim_; }
  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j, bool v) {
    if (v)
      rows_[i] |= std::uint64_t{1} << j;
    else
      rows_[i] &= ~(std::uint64_t{1} << j);
  }
  std::uint64_t row(std::size_t i) const { return rows_[i]; }

  std::size_t rank() const {
    auto rows = rows_;
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim_ && r < rows.size(); ++col) {
      std::size_t pivot = r;
      while (pivot < rows.size() && !((rows[pivot] >> col) & 1u)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[r], rows[pivot]);
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != r && ((rows[i] >> col) & 1u)) rows[i] ^= rows[r];
      ++r;
    }
    return r;
  }

  bool symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (get(i, j) != get(j, i)) return false;
    return true;
  }

  // Alternating: zero diagonal and symmetric (char 2).
  bool alternating() const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (get(i, i)) return false;
    return symmetric();
  }

  friend bool operator==(BitMatrix const &, BitMatrix const &) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> rows_;
};

}  // namespace pcl
