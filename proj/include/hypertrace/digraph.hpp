#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hypertrace/hypergraph.hpp"
#include "hypertrace/number.hpp"

namespace hypertrace {

// One rooted edge ordering i_h alpha_h: the root and the remaining k-1 edge
// vertices in a fixed order.
struct Atom {
  Vertex root;
  std::vector<Vertex> tail;
};

using Arc = std::pair<Vertex, Vertex>;

// Arc multiset with cached degrees. Vertices are those touched by some arc
// plus any added explicitly.
class MultiDigraph {
 public:
  MultiDigraph() = default;

  void add_vertex(Vertex v);
  // Adds `mult` parallel copies of u -> v.
  void add_arc(Vertex u, Vertex v, std::int64_t mult = 1);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::map<Arc, std::int64_t>& arcs() const noexcept { return arcs_; }
  std::int64_t out_degree(Vertex v) const;
  std::int64_t in_degree(Vertex v) const;
  // Total arc count with multiplicity.
  std::int64_t arc_count() const noexcept { return arc_total_; }

  bool is_balanced() const;
  // All vertices of nonzero degree lie in one weak component.
  bool is_weakly_connected_on_support() const;

  friend bool operator==(const MultiDigraph&, const MultiDigraph&) = default;

 private:
  std::vector<Vertex> vertices_;  // sorted
  std::map<Arc, std::int64_t> arcs_;
  std::map<Vertex, std::int64_t> out_;
  std::map<Vertex, std::int64_t> in_;
  std::int64_t arc_total_ = 0;
};

// Union over atoms of root -> tail arcs. Throws DomainError on an empty list.
MultiDigraph arcs_from_atoms(std::span<const Atom> atoms);

// prod over arcs of m(a)!
BigInt b_factor(const MultiDigraph& d);
// prod over vertices of d+(v)!
BigInt c_factor(const MultiDigraph& d);

// Spanning arborescences oriented toward `root` (parallel arcs distinct):
// the Laplacian minor determinant. Throws DomainError if root is not a vertex.
BigInt count_arborescences(const MultiDigraph& d, Vertex root);

// BEST theorem with labeled parallel arcs, circuits counted up to rotation.
// Zero when unbalanced, disconnected, or arc-free.
BigInt count_eulerian_circuits(const MultiDigraph& d);

// Start-pointed Eulerian closed walks with indistinguishable parallel arcs:
// arcs * circuits / b. Throws ConsistencyError if the division is inexact.
BigInt count_rooted_walks(const MultiDigraph& d);

}  // namespace hypertrace
