#pragma once

#include <compare>
#include <string>

#include "hypertrace/number.hpp"

namespace hypertrace {

// Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
class Quad5 {
 public:
  Quad5() : a_(0), b_(0) {}
  Quad5(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  Quad5(const BigInt& a) : a_(a), b_(0) {}  // NOLINT
  Quad5(const BigRat& a) : a_(a), b_(0) {}  // NOLINT
  Quad5(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}

  // (3 + sqrt 5)/2 and (3 - sqrt 5)/2, the squares of the golden ratio and its conjugate.
  static Quad5 phi_sq_plus() { return {BigRat(3, 2), BigRat(1, 2)}; }
  static Quad5 phi_sq_minus() { return {BigRat(3, 2), BigRat(-1, 2)}; }

  const BigRat& a() const noexcept { return a_; }
  const BigRat& b() const noexcept { return b_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  Quad5 conj() const { return {a_, -b_}; }
  // a^2 - 5 b^2, always rational.
  BigRat norm() const { return a_ * a_ - 5 * b_ * b_; }
  // Sign of the real number a + b sqrt5.
  int sign() const;
  Quad5 abs() const { return sign() < 0 ? -*this : *this; }

  Quad5 operator-() const { return {-a_, -b_}; }
  Quad5& operator+=(const Quad5& o);
  Quad5& operator-=(const Quad5& o);
  Quad5& operator*=(const Quad5& o);
  // Throws DomainError on division by zero.
  Quad5& operator/=(const Quad5& o);

  friend Quad5 operator+(Quad5 x, const Quad5& y) { return x += y; }
  friend Quad5 operator-(Quad5 x, const Quad5& y) { return x -= y; }
  friend Quad5 operator*(Quad5 x, const Quad5& y) { return x *= y; }
  friend Quad5 operator/(Quad5 x, const Quad5& y) { return x /= y; }

  friend bool operator==(const Quad5& x, const Quad5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  // Ordering of the real values.
  friend std::strong_ordering operator<=>(const Quad5& x, const Quad5& y);

  std::string to_string() const;

 private:
  BigRat a_;
  BigRat b_;
};

Quad5 quad_mul(const Quad5& x, const Quad5& y);
Quad5 quad_conj(const Quad5& x);
// Repeated squaring.
Quad5 quad_pow(Quad5 x, unsigned long d);

}  // namespace hypertrace
