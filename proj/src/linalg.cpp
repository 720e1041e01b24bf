#include "edenca/linalg.hpp"

#include <stdexcept>

namespace edenca {

FpDense FpDense::transpose() const {
  FpDense t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FpDense FpDense::select_columns(const std::vector<std::size_t>& columns) const {
  FpDense out(rows_, columns.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = (*this)(i, columns[j]);
  return out;
}

FpVector FpDense::apply(const FpVector& x, const PrimeField& k) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  FpVector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && x[j] != 0) y[i] = k.add(y[i], k.mul((*this)(i, j), x[j]));
  return y;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(FpDense& a, const PrimeField& k) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pick = row;
    while (pick < a.rows() && a(pick, col) == 0) ++pick;
    if (pick == a.rows()) continue;
    if (pick != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pick, j), a(row, j));
    auto inv = k.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = k.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      auto factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = k.sub(a(i, j), k.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(FpDense a, const PrimeField& k) { return rref(a, k).size(); }

std::vector<FpVector> kernel_basis(FpDense a, const PrimeField& k) {
  auto pivots = rref(a, k);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FpVector> left_kernel_basis(const FpDense& a, const PrimeField& k) {
  return kernel_basis(a.transpose(), k);
}

}  // namespace edenca
