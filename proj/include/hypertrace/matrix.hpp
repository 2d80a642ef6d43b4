#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hypertrace/number.hpp"

namespace hypertrace {

// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}
  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <typename T>
SquareMatrix<T>::SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("SquareMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

using IntMatrix = SquareMatrix<BigInt>;
using RatMatrix = SquareMatrix<BigRat>;

// Bareiss fraction-free elimination. A 0x0 matrix has determinant 1.
BigInt det_exact(const IntMatrix& m);

// Gauss-Jordan over the rationals. Throws SingularMatrixError, DimensionMismatch.
std::vector<BigRat> solve_linear_exact(const RatMatrix& a, std::span<const BigRat> rhs);

std::vector<BigRat> mat_vec(const RatMatrix& a, std::span<const BigRat> x);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

BigInt trace(const IntMatrix& m);

// Coefficients of det(x I - M), highest degree first (monic). Obtained by
// evaluating det_exact at n+1 integer points and interpolating.
std::vector<BigInt> charpoly_by_determinant(const IntMatrix& m);

}  // namespace hypertrace
