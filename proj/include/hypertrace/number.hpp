#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypertrace {

using BigInt = mpz_class;
// mpq_class arithmetic keeps results canonical: lowest terms, positive denominator.
using BigRat = mpq_class;

BigInt factorial(unsigned long n);

// Throws DomainError when r > n.
BigInt binomial(unsigned long n, unsigned long r);

BigInt ipow(const BigInt& base, unsigned long exp);

// Multinomial coefficient (sum parts)! / prod(parts!).
template <typename Range>
BigInt multinomial(const Range& parts) {
  unsigned long total = 0;
  BigInt denom = 1;
  for (auto p : parts) {
    total += static_cast<unsigned long>(p);
    denom *= factorial(static_cast<unsigned long>(p));
  }
  return factorial(total) / denom;
}

BigRat make_rat(const BigInt& num, const BigInt& den);

bool is_integer(const BigRat& q);

std::string to_string(const BigInt& z);
// Always "p/q", also when q == 1.
std::string to_string(const BigRat& q);
// Decimal integer when q == 1, otherwise "p/q".
std::string to_compact_string(const BigRat& q);

// Throws DomainError on malformed input.
BigInt parse_bigint(std::string_view text);
// Accepts "p/q" or a bare integer; result is canonical.
BigRat parse_bigrat(std::string_view text);

}  // namespace hypertrace
