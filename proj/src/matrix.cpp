#include "hypertrace/matrix.hpp"

#include <utility>

#include "hypertrace/errors.hpp"

namespace hypertrace {

BigInt det_exact(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Sylvester's identity makes this division exact.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigRat> solve_linear_exact(const RatMatrix& a, std::span<const BigRat> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw DimensionMismatch("solve_linear_exact: rhs length differs from matrix size");
  RatMatrix m = a;
  std::vector<BigRat> b(rhs.begin(), rhs.end());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("solve_linear_exact: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      std::swap(b[pivot], b[col]);
    }
    const BigRat inv = 1 / m(col, col);
    for (std::size_t c = col; c < n; ++c) m(col, c) *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m(r, col)) == 0) continue;
      const BigRat f = m(r, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<BigRat> mat_vec(const RatMatrix& a, std::span<const BigRat> x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw DimensionMismatch("mat_vec: vector length differs from matrix size");
  std::vector<BigRat> out(n, BigRat(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r] += a(r, c) * x[c];
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("mat_mul: size mismatch");
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

BigInt trace(const IntMatrix& m) {
  BigInt t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

std::vector<BigInt> charpoly_by_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  // Values p(x_i) = det(x_i I - M) at x_i = 0..n, then Newton divided
  // differences and expansion into the monomial basis.
  std::vector<BigRat> dd(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    IntMatrix shifted(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) shifted(r, c) = (r == c ? BigInt(i) : BigInt(0)) - m(r, c);
    dd[i] = BigRat(det_exact(shifted));
  }
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / BigRat(static_cast<long>(level));
      if (i == level) break;
    }
  // Horner on the Newton form: p = dd0 + (x-0)(dd1 + (x-1)(dd2 + ...)).
  std::vector<BigRat> low_first{dd[n]};
  for (std::size_t i = n; i-- > 0;) {
    // low_first <- low_first * (x - i) + dd[i]
    std::vector<BigRat> next(low_first.size() + 1, BigRat(0));
    for (std::size_t d = 0; d < low_first.size(); ++d) {
      next[d + 1] += low_first[d];
      next[d] -= low_first[d] * BigRat(static_cast<long>(i));
    }
    next[0] += dd[i];
    low_first = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(n + 1);
  for (std::size_t d = n + 1; d-- > 0;) {
    if (!is_integer(low_first[d])) throw ConsistencyError("charpoly_by_determinant: non-integer coefficient");
    out.push_back(low_first[d].get_num());
  }
  return out;
}

}  // namespace hypertrace
