#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertrace/errors.hpp"
#include "hypertrace/matrix.hpp"
#include "hypertrace/number.hpp"
#include "hypertrace/quad5.hpp"
#include "oracles.hpp"

using namespace hypertrace;

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(25) == parse_bigint("15511210043330985984000000"));
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(4, 2) == 6);
  for (unsigned long n = 0; n < 12; ++n) CHECK(binomial(n, 0) == 1);
  CHECK_THROWS_AS(binomial(3, 4), DomainError);
  CHECK(multinomial(std::vector<int>{2, 1, 1}) == 12);
  CHECK(ipow(BigInt(3), 12) == 531441);
}

TEST_CASE("rational canonical form and strings") {
  BigRat q = make_rat(6, -4);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(BigRat(5)) == "5/1");
  CHECK(to_compact_string(BigRat(5)) == "5");
  CHECK(to_compact_string(BigRat(1, 3)) == "1/3");
  CHECK(parse_bigrat("-10/4") == BigRat(-5, 2));
  CHECK_THROWS_AS(parse_bigrat("10/-4"), DomainError);
  CHECK(parse_bigrat("7") == BigRat(7));
  CHECK(is_integer(make_rat(8, 4)));
  CHECK_FALSE(is_integer(BigRat(1, 2)));
  CHECK_THROWS_AS(parse_bigint("12x"), DomainError);
  CHECK_THROWS_AS(parse_bigrat("1/0"), DomainError);
  CHECK_THROWS_AS(parse_bigrat(""), DomainError);
}

TEST_CASE("decimal round trip") {
  BigInt big = ipow(BigInt(7), 200) - 1;
  CHECK(parse_bigint(to_string(big)) == big);
  CHECK(parse_bigint(to_string(BigInt(-big))) == -big);
  for (int i = 0; i < 200; ++i) {
    BigRat q = oracle::random_rat(1000);
    BigRat back = parse_bigrat(to_string(q));
    CHECK(back == q);
    CHECK(back.get_den() > 0);
  }
}

TEST_CASE("determinant examples") {
  CHECK(det_exact(IntMatrix::identity(4)) == 1);
  CHECK(det_exact(IntMatrix{{2, -1}, {-1, 2}}) == 3);
  CHECK(det_exact(IntMatrix(0)) == 1);
  // Laplacian minor of the complete digraph on 4 vertices.
  IntMatrix lap{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}};
  CHECK(det_exact(lap) == 16);
  CHECK(oracle::cofactor_det(lap) == 16);
  CHECK(det_exact(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(1, 6));
    IntMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = oracle::uniform(-5, 5);
    // Force some zero pivots so Bareiss has to swap rows.
    if (trial % 5 == 0) m(0, 0) = 0;
    if (trial % 7 == 0 && n > 1) {
      for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c);
    }
    CHECK(det_exact(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("characteristic polynomial by determinant") {
  IntMatrix c4{{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}};
  CHECK(charpoly_by_determinant(c4) == std::vector<BigInt>{1, 0, -4, 0, 0});
  IntMatrix p4{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  CHECK(charpoly_by_determinant(p4) == std::vector<BigInt>{1, 0, -3, 0, 1});
  CHECK(trace(mat_mul(c4, c4)) == 8);
}

TEST_CASE("linear solve examples") {
  std::vector<BigRat> rhs{BigRat(1, 2), 3, -7};
  CHECK(solve_linear_exact(RatMatrix::identity(3), rhs) == rhs);

  RatMatrix a{{1, 2}, {3, 4}};
  std::vector<BigRat> b{5, 11};
  CHECK(solve_linear_exact(a, b) == std::vector<BigRat>{1, 2});

  RatMatrix sys{{1, 2, 4, 3}, {1, 4, 16, 7}, {1, 8, 64, 18}, {1, 16, 256, 47}};
  std::vector<BigRat> tr{384, 960, 2760, 8952};
  CHECK(solve_linear_exact(sys, tr) == std::vector<BigRat>{24, 126, 27, 0});

  CHECK_THROWS_AS(solve_linear_exact(RatMatrix{{1, 2}, {2, 4}}, b), SingularMatrixError);
  std::vector<BigRat> short_rhs{1};
  CHECK_THROWS_AS(solve_linear_exact(a, short_rhs), DimensionMismatch);
}

TEST_CASE("solve then multiply reproduces rhs") {
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(1, 6));
    RatMatrix a(n);
    std::vector<BigRat> rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      rhs[r] = oracle::random_rat();
      for (std::size_t c = 0; c < n; ++c) a(r, c) = oracle::random_rat();
    }
    try {
      auto x = solve_linear_exact(a, rhs);
      CHECK(mat_vec(a, x) == rhs);
      ++solved;
    } catch (const SingularMatrixError&) {
    }
  }
  CHECK(solved > 150);
}

TEST_CASE("Q(sqrt5) examples") {
  const Quad5 p = Quad5::phi_sq_plus(), q = Quad5::phi_sq_minus();
  CHECK(quad_mul(p, q) == Quad5(1));
  CHECK(quad_pow(p, 0) == Quad5(1));
  CHECK(quad_pow(p, 2) + quad_pow(q, 2) == Quad5(7));
  CHECK(quad_conj(p) == q);
  CHECK(q < Quad5(1));
  CHECK(Quad5(2) < p);
  CHECK(p < Quad5(3));
  CHECK(Quad5(BigRat(0), BigRat(1)).sign() == 1);
  CHECK(Quad5(BigRat(-3), BigRat(1)).sign() == -1);
  CHECK(Quad5(BigRat(-2), BigRat(1)).sign() == 1);
  CHECK(Quad5(BigRat(9, 4), BigRat(-1)).sign() == 1);
  CHECK(Quad5(BigRat(-3), BigRat(1)).abs() == Quad5(BigRat(3), BigRat(-1)));
  CHECK(p / q == quad_pow(p, 2));
  CHECK_THROWS_AS(p / Quad5(0), DomainError);
  CHECK(p.to_string() == "3/2+1/2*sqrt5");
}

TEST_CASE("Q(sqrt5) ring laws on random elements") {
  for (int i = 0; i < 300; ++i) {
    const Quad5 x = oracle::random_quad(), y = oracle::random_quad(), z = oracle::random_quad();
    CHECK(quad_mul(x, y) == quad_mul(y, x));
    CHECK(quad_mul(quad_mul(x, y), z) == quad_mul(x, quad_mul(y, z)));
    CHECK(quad_conj(quad_mul(x, y)) == quad_mul(quad_conj(x), quad_conj(y)));
    CHECK(quad_conj(x + y) == quad_conj(x) + quad_conj(y));
    CHECK(quad_mul(x, quad_conj(x)).is_rational());
    CHECK(quad_mul(x, quad_conj(x)).a() == x.norm());
    if (!x.is_zero()) CHECK((y / x) * x == y);
    CHECK(quad_pow(x, 3) == x * x * x);
  }
}

TEST_CASE("conjugate pair power sums are integers") {
  const Quad5 p = Quad5::phi_sq_plus(), q = Quad5::phi_sq_minus();
  for (unsigned long d = 0; d <= 20; ++d) {
    const Quad5 s = quad_pow(p, d) + quad_pow(q, d);
    CHECK(s.b() == 0);
    CHECK(is_integer(s.a()));
  }
}
