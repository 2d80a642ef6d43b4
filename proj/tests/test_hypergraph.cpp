#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iterator>

#include "hypertrace/errors.hpp"
#include "hypertrace/hypergraph.hpp"
#include "oracles.hpp"

using namespace hypertrace;

TEST_CASE("hypercycle construction") {
  auto h = build_hypercycle(4, 3);
  CHECK(h.n() == 8);
  CHECK(h.edges() == std::vector<Edge>{{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {1, 7, 8}});

  auto g = build_hypercycle(4, 2);
  CHECK(g.n() == 4);
  CHECK(isomorphic(g, BaseGraph::cycle(4).as_hypergraph()));

  auto t = build_hypercycle(3, 3);
  CHECK(t.n() == 6);
  CHECK(t.edges() == std::vector<Edge>{{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});

  CHECK_THROWS_AS(build_hypercycle(1, 3), DomainError);
  CHECK_THROWS_AS(build_hypercycle(4, 1), DomainError);
  CHECK_THROWS_AS(build_hypercycle(2, 2), DomainError);
}

TEST_CASE("hypercycle degrees and consecutive overlaps") {
  for (int m = 2; m <= 7; ++m) {
    for (int k = 3; k <= 6; ++k) {
      auto h = build_hypercycle(m, k);
      CHECK(h.n() == m * (k - 1));
      int deg2 = 0, deg1 = 0;
      for (Vertex v = 1; v <= h.n(); ++v) {
        if (h.degree(v) == 2) ++deg2;
        else if (h.degree(v) == 1) ++deg1;
      }
      CHECK(deg2 == m);
      CHECK(deg1 == m * (k - 2));
      for (int i = 0; i < m && m >= 3; ++i) {
        const Edge& a = h.edges()[i];
        const Edge& b = h.edges()[(i + 1) % m];
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        CHECK(common.size() == 1);
      }
      CHECK(hypercycle_length(h) == m);
    }
  }
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{1, 2, 3}, {3, 2, 1}}), DomainError);
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{1, 2, 5}}), DomainError);
  CHECK_THROWS_AS(UniformHypergraph(3, 4, {{1, 1, 2}}), DomainError);
  CHECK_THROWS_AS(UniformHypergraph(3, 2, {}), DomainError);
  CHECK_THROWS_AS(UniformHypergraph(1, 4, {}), DomainError);
  UniformHypergraph ok(3, 4, {{3, 1, 2}});
  CHECK(ok.edges().front() == Edge{1, 2, 3});
  CHECK(ok.degree(4) == 0);
}

TEST_CASE("power hypergraphs") {
  CHECK(isomorphic(build_power(BaseGraph::cycle(4), 3), build_hypercycle(4, 3)));
  auto single = build_power(BaseGraph(2, {{1, 2}}), 5);
  CHECK(single.edge_count() == 1);
  CHECK(isomorphic(single, build_single_edge(5)));

  auto c44 = build_power(BaseGraph::cycle(4), 4);
  CHECK(c44.n() == 12);
  CHECK(c44.edge_count() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Edge& a = c44.edges()[i];
      const Edge& b = c44.edges()[j];
      std::vector<Vertex> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      for (Vertex v : common) CHECK(v <= 4);
    }
  }
  for (int m = 3; m <= 5; ++m)
    for (int k = 3; k <= 4; ++k) CHECK(isomorphic(build_power(BaseGraph::cycle(m), k), build_hypercycle(m, k)));

  auto path = build_power(BaseGraph::path(5), 3);
  CHECK_FALSE(hypercycle_length(path).has_value());
  CHECK_FALSE(isomorphic(path, build_hypercycle(4, 3)));
  CHECK_FALSE(isomorphic(build_hypercycle(3, 3), build_hypercycle(4, 3)));
}

TEST_CASE("tensor application examples") {
  auto h = build_hypercycle(4, 3);
  DenseVector ones(8, Quad5(1));
  DenseVector expect{2, 1, 2, 1, 2, 1, 2, 1};
  CHECK(tensor_apply(h, ones) == expect);
  CHECK(tensor_apply(h, DenseVector(8)) == DenseVector(8));
  CHECK(tensor_apply(build_single_edge(3), DenseVector(3, Quad5(1))) == DenseVector(3, Quad5(1)));
  CHECK_THROWS_AS(tensor_apply(h, DenseVector(3)), DimensionMismatch);
}

TEST_CASE("tensor application matches the materialized tensor") {
  std::vector<UniformHypergraph> shapes{build_hypercycle(3, 3), build_hypercycle(4, 3), build_hypercycle(3, 4),
                                        build_power(BaseGraph::path(4), 3), build_single_edge(4),
                                        BaseGraph::cycle(5).as_hypergraph()};
  for (const auto& h : shapes) {
    for (int trial = 0; trial < 5; ++trial) {
      DenseVector x(h.n());
      for (auto& xi : x) xi = oracle::random_quad();
      CHECK(tensor_apply(h, x) == oracle::dense_tensor_apply(h, x));
    }
  }
}

TEST_CASE("tensor application is homogeneous of degree k-1") {
  for (int k = 2; k <= 5; ++k) {
    auto h = build_hypercycle(3, k);
    for (int trial = 0; trial < 10; ++trial) {
      DenseVector x(h.n());
      for (auto& xi : x) xi = oracle::random_quad();
      const Quad5 t = oracle::random_quad();
      DenseVector tx = x;
      for (auto& v : tx) v *= t;
      DenseVector lhs = tensor_apply(h, tx);
      DenseVector rhs = tensor_apply(h, x);
      const Quad5 scale = quad_pow(t, static_cast<unsigned long>(k - 1));
      for (auto& v : rhs) v *= scale;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("eigen residual") {
  CHECK(eigen_residual(build_single_edge(3), Quad5(1), DenseVector(3, Quad5(1))).is_zero());
  DenseVector e1(8);
  e1[0] = Quad5(1);
  CHECK(eigen_residual(build_hypercycle(4, 3), Quad5(0), e1).is_zero());
  CHECK(eigen_residual(build_hypercycle(4, 2), Quad5(2), DenseVector(4, Quad5(1))).is_zero());

  // The golden-ratio eigenvector of P_4.
  const Quad5 phi(BigRat(1, 2), BigRat(1, 2));
  DenseVector v{1, phi, phi, 1};
  CHECK(eigen_residual(BaseGraph::path(4).as_hypergraph(), phi, v).is_zero());

  for (int trial = 0; trial < 20; ++trial) {
    DenseVector x(3, Quad5(1));
    const auto pos = static_cast<std::size_t>(oracle::uniform(0, 2));
    Quad5 delta = oracle::random_quad();
    if (delta.is_zero()) delta = Quad5(1);
    x[pos] += delta;
    CHECK(eigen_residual(build_single_edge(3), Quad5(1), x).sign() > 0);
  }
  DenseVector y(4, Quad5(1));
  y[2] = Quad5(BigRat(3, 2));
  CHECK(eigen_residual(build_hypercycle(4, 2), Quad5(2), y).sign() > 0);
  CHECK_THROWS_AS(eigen_residual(build_single_edge(3), Quad5(1), DenseVector(2)), DimensionMismatch);
}
