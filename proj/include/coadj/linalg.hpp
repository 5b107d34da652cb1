// Dense exact-rational matrices: rank and kernel by fraction-based elimination.
#pragma once

#include "coadj/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace coadj {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && (*this)(p, col) == 0) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(p, c), (*this)(row, c));
      const Rational inv = 1 / (*this)(row, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, col) == 0) continue;
        const Rational factor = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= factor * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

inline std::size_t rank(RationalMatrix m) { return m.rref().size(); }

/// Basis of {x : M x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m) {
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace coadj
