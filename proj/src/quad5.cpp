#include "hypertrace/quad5.hpp"

#include "hypertrace/errors.hpp"

namespace hypertrace {

int Quad5::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  const int cmp_sq = sgn(norm());
  return cmp_sq == 0 ? 0 : (cmp_sq > 0 ? sa : sb);
}

Quad5& Quad5::operator+=(const Quad5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quad5& Quad5::operator-=(const Quad5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quad5& Quad5::operator*=(const Quad5& o) {
  BigRat a = a_ * o.a_ + 5 * b_ * o.b_;
  BigRat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Quad5& Quad5::operator/=(const Quad5& o) {
  const BigRat n = o.norm();
  if (sgn(n) == 0) throw DomainError("Quad5: division by zero");
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const Quad5& x, const Quad5& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Quad5::to_string() const {
  if (is_rational()) return to_compact_string(a_);
  std::string out;
  if (sgn(a_) != 0) out = to_compact_string(a_) + (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) out = "-";
  const BigRat mag = ::abs(b_);
  if (mag != 1) out += to_compact_string(mag) + "*";
  return out + "sqrt5";
}

Quad5 quad_mul(const Quad5& x, const Quad5& y) { return x * y; }

Quad5 quad_conj(const Quad5& x) { return x.conj(); }

Quad5 quad_pow(Quad5 x, unsigned long d) {
  Quad5 result(1);
  while (d > 0) {
    if (d & 1UL) result *= x;
    d >>= 1;
    if (d > 0) x *= x;
  }
  return result;
}

}  // namespace hypertrace
