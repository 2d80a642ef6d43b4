#include "hypertrace/number.hpp"

#include "hypertrace/errors.hpp"

namespace hypertrace {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long r) {
  if (r > n) throw DomainError("binomial: r > n");
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRat& q) {
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::string to_compact_string(const BigRat& q) {
  return is_integer(q) ? q.get_num().get_str(10) : to_string(q);
}

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal(text)) throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigRat parse_bigrat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_bigint(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw DomainError("rational denominator carries a sign: '" + std::string(text) + "'");
  return make_rat(parse_bigint(text.substr(0, slash)), parse_bigint(den_text));
}

}  // namespace hypertrace
