#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace polylink::gf2 {

/// Dense matrix over the two-element field with bit-packed rows.
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void flip(int r, int c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool get(int r, int c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }

  /// Rank by Gaussian elimination on a copy.
  int rank() const {
    std::vector<std::uint64_t> m = bits_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
      const int w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      int pivot = -1;
      for (int r = rank; r < rows_; ++r) {
        if (m[r * words_ + w] & bit) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      if (pivot != rank) {
        for (int k = 0; k < words_; ++k) std::swap(m[pivot * words_ + k], m[rank * words_ + k]);
      }
      for (int r = 0; r < rows_; ++r) {
        if (r != rank && (m[r * words_ + w] & bit)) {
          for (int k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
        }
      }
      ++rank;
    }
    return rank;
  }

 private:
  int rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Rank of a set of vectors packed into machine words.
inline int rank_of(std::vector<std::uint32_t> v) {
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    const std::uint32_t mask = std::uint32_t{1} << bit;
    auto it = v.begin() + rank;
    auto p = std::find_if(it, v.end(), [&](std::uint32_t x) { return x & mask; });
    if (p == v.end()) continue;
    std::swap(*p, v[rank]);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (static_cast<int>(i) != rank && (v[i] & mask)) v[i] ^= v[rank];
    }
    ++rank;
  }
  return rank;
}

/// All elements of the span of the given vectors, sorted.
inline std::vector<std::uint32_t> span(const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> out{0};
  for (std::uint32_t g : gens) {
    if (std::find(out.begin(), out.end(), g) != out.end()) continue;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polylink::gf2
