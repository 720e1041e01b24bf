#pragma once

#include <cstdint>
#include <vector>

#include "edenca/poly/field.hpp"

namespace edenca {

// Dense matrices over F_p with entries in [0, p).
using FpVector = std::vector<std::uint64_t>;

class FpDense {
 public:
  FpDense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FpDense transpose() const;
  FpDense select_columns(const std::vector<std::size_t>& columns) const;
  FpVector apply(const FpVector& x, const PrimeField& k) const;

  friend bool operator==(const FpDense&, const FpDense&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> data_;
};

std::size_t rank(FpDense a, const PrimeField& k);
// Basis of {x : Ax = 0}, one vector per free column of the echelon form.
std::vector<FpVector> kernel_basis(FpDense a, const PrimeField& k);
// Basis of {y : yA = 0}.
std::vector<FpVector> left_kernel_basis(const FpDense& a, const PrimeField& k);

}  // namespace edenca
