#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hypertrace/quad5.hpp"

namespace hypertrace {

using Vertex = int;  // 1-based labels
using Edge = std::vector<Vertex>;  // sorted, distinct

// k-uniform hypergraph on vertices 1..n. Immutable after construction; the
// adjacency tensor is never materialized, only the edge list is stored.
class UniformHypergraph {
 public:
  // Validates: k >= 2, n >= k, every edge has k distinct labels in 1..n, no
  // duplicate edges. Edges are stored sorted; their order is preserved.
  UniformHypergraph(int k, int n, std::vector<Edge> edges);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Indices of edges containing v.
  const std::vector<std::size_t>& incident(Vertex v) const { return incidence_.at(v - 1); }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

// Simple undirected graph on vertices 1..n.
class BaseGraph {
 public:
  BaseGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  static BaseGraph cycle(int m);
  static BaseGraph path(int vertices);

  int vertex_count() const noexcept { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }

  // The graph viewed as a 2-uniform hypergraph.
  UniformHypergraph as_hypergraph() const;

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

using DenseVector = std::vector<Quad5>;

// C_{m,k}: edge i is {(i-1)(k-1)+1, ..., i(k-1)+1} with label m(k-1)+1 wrapped to 1.
UniformHypergraph build_hypercycle(int m, int k);

// G^k: each edge {u,v} gets k-2 fresh vertices numbered after G's vertices,
// edge by edge in input order.
UniformHypergraph build_power(const BaseGraph& g, int k);

// Single k-edge {1..k}.
UniformHypergraph build_single_edge(int k);

// If h is isomorphic to C_{m,k} for m = edge count, returns m.
std::optional<int> hypercycle_length(const UniformHypergraph& h);

// Exact isomorphism test by backtracking over vertex maps.
bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);

// (A x)_v = sum over edges e containing v of prod_{u in e, u != v} x_u.
DenseVector tensor_apply(const UniformHypergraph& h, const DenseVector& x);

// max_v |(A x)_v - lambda x_v^{k-1}|; zero iff (lambda, x) is an eigenpair
// (for nonzero x). The value is a nonnegative element of Q(sqrt 5).
Quad5 eigen_residual(const UniformHypergraph& h, const Quad5& lambda, const DenseVector& x);

}  // namespace hypertrace
