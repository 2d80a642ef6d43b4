#include "hypertrace/digraph.hpp"

#include <algorithm>
#include <numeric>

#include "hypertrace/errors.hpp"
#include "hypertrace/matrix.hpp"

namespace hypertrace {

void MultiDigraph::add_vertex(Vertex v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void MultiDigraph::add_arc(Vertex u, Vertex v, std::int64_t mult) {
  if (mult < 1) throw DomainError("add_arc: multiplicity must be positive");
  add_vertex(u);
  add_vertex(v);
  arcs_[{u, v}] += mult;
  out_[u] += mult;
  in_[v] += mult;
  arc_total_ += mult;
}

std::int64_t MultiDigraph::out_degree(Vertex v) const {
  auto it = out_.find(v);
  return it == out_.end() ? 0 : it->second;
}

std::int64_t MultiDigraph::in_degree(Vertex v) const {
  auto it = in_.find(v);
  return it == in_.end() ? 0 : it->second;
}

bool MultiDigraph::is_balanced() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [&](Vertex v) { return out_degree(v) == in_degree(v); });
}

bool MultiDigraph::is_weakly_connected_on_support() const {
  std::vector<Vertex> support;
  for (Vertex v : vertices_)
    if (out_degree(v) + in_degree(v) > 0) support.push_back(v);
  if (support.empty()) return true;
  // Union-find over positions in `support`.
  std::vector<std::size_t> parent(support.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), v) - support.begin());
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = support.size();
  for (const auto& [arc, mult] : arcs_) {
    const std::size_t a = find(index(arc.first));
    const std::size_t b = find(index(arc.second));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

MultiDigraph arcs_from_atoms(std::span<const Atom> atoms) {
  if (atoms.empty()) throw DomainError("arcs_from_atoms: empty atom list");
  MultiDigraph d;
  for (const Atom& atom : atoms) {
    d.add_vertex(atom.root);
    for (Vertex v : atom.tail) d.add_arc(atom.root, v);
  }
  return d;
}

BigInt b_factor(const MultiDigraph& d) {
  BigInt b = 1;
  for (const auto& [arc, mult] : d.arcs()) b *= factorial(static_cast<unsigned long>(mult));
  return b;
}

BigInt c_factor(const MultiDigraph& d) {
  BigInt c = 1;
  for (Vertex v : d.vertices()) c *= factorial(static_cast<unsigned long>(d.out_degree(v)));
  return c;
}

BigInt count_arborescences(const MultiDigraph& d, Vertex root) {
  const auto& vs = d.vertices();
  auto root_it = std::lower_bound(vs.begin(), vs.end(), root);
  if (root_it == vs.end() || *root_it != root) throw DomainError("count_arborescences: root is not a vertex");
  const std::size_t root_pos = static_cast<std::size_t>(root_it - vs.begin());
  const std::size_t n = vs.size();
  if (n == 1) return 1;
  // Out-degree Laplacian with the root row and column removed.
  auto minor_index = [&](Vertex v) {
    std::size_t p = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    return p < root_pos ? p : p - 1;
  };
  IntMatrix lap(n - 1);
  for (const auto& [arc, mult] : d.arcs()) {
    const auto [u, v] = arc;
    if (u == root || u == v) continue;
    const std::size_t iu = minor_index(u);
    lap(iu, iu) += mult;
    if (v != root) lap(iu, minor_index(v)) -= mult;
  }
  return det_exact(lap);
}

BigInt count_eulerian_circuits(const MultiDigraph& d) {
  if (d.arc_count() == 0 || !d.is_balanced() || !d.is_weakly_connected_on_support()) return 0;
  MultiDigraph support;
  for (const auto& [arc, mult] : d.arcs()) support.add_arc(arc.first, arc.second, mult);
  BigInt e = count_arborescences(support, support.vertices().front());
  for (Vertex v : support.vertices()) e *= factorial(static_cast<unsigned long>(support.out_degree(v) - 1));
  return e;
}

BigInt count_rooted_walks(const MultiDigraph& d) {
  const BigInt circuits = count_eulerian_circuits(d);
  if (circuits == 0) return 0;
  const BigInt labeled = BigInt(static_cast<long>(d.arc_count())) * circuits;
  const BigInt b = b_factor(d);
  if (!mpz_divisible_p(labeled.get_mpz_t(), b.get_mpz_t()))
    throw ConsistencyError("count_rooted_walks: arc-labeled walk count not divisible by b");
  return labeled / b;
}

}  // namespace hypertrace
