#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertrace/digraph.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/hypergraph.hpp"
#include "oracles.hpp"

using namespace hypertrace;

namespace {

MultiDigraph complete3(std::int64_t mult = 1) {
  MultiDigraph d;
  for (Vertex u = 1; u <= 3; ++u)
    for (Vertex v = 1; v <= 3; ++v)
      if (u != v) d.add_arc(u, v, mult);
  return d;
}

MultiDigraph two_cycle(std::int64_t mult = 1) {
  MultiDigraph d;
  d.add_arc(1, 2, mult);
  d.add_arc(2, 1, mult);
  return d;
}

MultiDigraph random_digraph(int n, int arcs) {
  MultiDigraph d;
  for (Vertex v = 1; v <= n; ++v) d.add_vertex(v);
  for (int i = 0; i < arcs; ++i) {
    const auto u = static_cast<Vertex>(oracle::uniform(1, n));
    auto v = static_cast<Vertex>(oracle::uniform(1, n - 1));
    if (v >= u) ++v;
    d.add_arc(u, v);
  }
  return d;
}

}  // namespace

TEST_CASE("arcs from atoms") {
  std::vector<Atom> one{{1, {2, 3}}};
  auto d = arcs_from_atoms(one);
  CHECK(d.arcs() == std::map<Arc, std::int64_t>{{{1, 2}, 1}, {{1, 3}, 1}});

  std::vector<Atom> rooted{{1, {2, 3}}, {2, {3, 1}}, {3, {1, 2}}};
  CHECK(arcs_from_atoms(rooted) == complete3());

  std::vector<Atom> doubled = rooted;
  doubled.insert(doubled.end(), {{1, {3, 2}}, {2, {1, 3}}, {3, {2, 1}}});
  CHECK(arcs_from_atoms(doubled) == complete3(2));

  CHECK_THROWS_AS(arcs_from_atoms(std::vector<Atom>{}), DomainError);
}

TEST_CASE("degree caches agree with the arc multiset") {
  for (int trial = 0; trial < 50; ++trial) {
    auto d = random_digraph(5, 9);
    std::map<Vertex, std::int64_t> out, in;
    std::int64_t total = 0;
    for (const auto& [arc, m] : d.arcs()) {
      CHECK(m >= 1);
      out[arc.first] += m;
      in[arc.second] += m;
      total += m;
    }
    CHECK(d.arc_count() == total);
    for (Vertex v : d.vertices()) {
      CHECK(d.out_degree(v) == out[v]);
      CHECK(d.in_degree(v) == in[v]);
    }
  }
}

TEST_CASE("b and c factors") {
  CHECK(b_factor(complete3()) == 1);
  CHECK(c_factor(complete3()) == 8);
  CHECK(b_factor(complete3(2)) == 64);
  MultiDigraph arc;
  arc.add_arc(1, 2);
  CHECK(b_factor(arc) == 1);
  CHECK(c_factor(arc) == 1);
}

TEST_CASE("arborescence examples") {
  CHECK(count_arborescences(complete3(), 1) == 3);
  CHECK(count_arborescences(complete3(2), 1) == 12);
  CHECK(count_arborescences(two_cycle(), 1) == 1);
  CHECK_THROWS_AS(count_arborescences(two_cycle(), 5), DomainError);
}

TEST_CASE("arborescences match brute force on small digraphs") {
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(oracle::uniform(2, 6));
    auto d = random_digraph(n, static_cast<int>(oracle::uniform(n, 2 * n + 2)));
    for (Vertex r : d.vertices()) CHECK(count_arborescences(d, r) == oracle::arborescences(d, r));
  }
  for (const auto& d : oracle::atom_digraphs(build_hypercycle(3, 3), 3)) {
    if (d.vertices().size() > 6) continue;
    for (Vertex r : d.vertices()) CHECK(count_arborescences(d, r) == oracle::arborescences(d, r));
  }
}

TEST_CASE("arborescence count is root independent when balanced and connected") {
  int tested = 0;
  for (const auto& d : oracle::atom_digraphs(build_hypercycle(3, 3), 6)) {
    if (!d.is_balanced() || !d.is_weakly_connected_on_support() || d.vertices().size() > 6) continue;
    const BigInt first = count_arborescences(d, d.vertices().front());
    for (Vertex r : d.vertices()) CHECK(count_arborescences(d, r) == first);
    ++tested;
  }
  // Unions of random directed cycles are balanced.
  for (int trial = 0; trial < 100; ++trial) {
    MultiDigraph d;
    const int n = static_cast<int>(oracle::uniform(2, 6));
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), oracle::rng());
    for (int i = 0; i < n; ++i) d.add_arc(order[i], order[(i + 1) % n]);
    for (int extra = static_cast<int>(oracle::uniform(0, 2)); extra > 0; --extra) {
      std::shuffle(order.begin(), order.end(), oracle::rng());
      const int len = static_cast<int>(oracle::uniform(2, n));
      for (int i = 0; i < len; ++i) d.add_arc(order[i], order[(i + 1) % len]);
    }
    REQUIRE(d.is_balanced());
    const BigInt first = count_arborescences(d, d.vertices().front());
    CHECK(first > 0);
    for (Vertex r : d.vertices()) {
      CHECK(count_arborescences(d, r) == first);
      CHECK(oracle::arborescences(d, r) == first);
    }
    ++tested;
  }
  CHECK(tested > 100);
}

TEST_CASE("Eulerian circuit examples") {
  CHECK(count_eulerian_circuits(complete3()) == 3);
  CHECK(count_eulerian_circuits(two_cycle()) == 1);
  MultiDigraph tri;
  tri.add_arc(1, 2);
  tri.add_arc(2, 3);
  tri.add_arc(3, 1);
  CHECK(count_eulerian_circuits(tri) == 1);
  CHECK(count_eulerian_circuits(MultiDigraph{}) == 0);
  MultiDigraph apart = two_cycle();
  apart.add_arc(3, 4);
  apart.add_arc(4, 3);
  CHECK(count_eulerian_circuits(apart) == 0);
}

TEST_CASE("Eulerian circuits match backtracking on random small digraphs") {
  for (int trial = 0; trial < 300; ++trial) {
    auto d = random_digraph(static_cast<int>(oracle::uniform(2, 4)), static_cast<int>(oracle::uniform(1, 8)));
    CHECK(count_eulerian_circuits(d) == oracle::eulerian_circuits(d));
  }
}

TEST_CASE("rooted walk examples") {
  CHECK(count_rooted_walks(complete3()) == 18);
  CHECK(count_rooted_walks(two_cycle(2)) == 2);
  CHECK(oracle::rooted_walks(two_cycle(2)) == 2);
  MultiDigraph arc;
  arc.add_arc(1, 2);
  CHECK(count_rooted_walks(arc) == 0);
}

TEST_CASE("rooted walks match brute force and vanish exactly when not Eulerian") {
  auto all = oracle::atom_digraphs(build_hypercycle(4, 3), 4);
  CHECK(all.size() > 100);
  for (const auto& d : all) {
    const BigInt w = count_rooted_walks(d);
    CHECK(w == oracle::rooted_walks(d));
    const bool eulerian = d.is_balanced() && d.is_weakly_connected_on_support();
    CHECK((w == 0) == !eulerian);
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_digraph(static_cast<int>(oracle::uniform(2, 4)), static_cast<int>(oracle::uniform(1, 8)));
    CHECK(count_rooted_walks(d) == oracle::rooted_walks(d));
  }
}
