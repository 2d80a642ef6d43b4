#include "hypertrace/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hypertrace/errors.hpp"

namespace hypertrace {

UniformHypergraph::UniformHypergraph(int k, int n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)), incidence_(n > 0 ? n : 0) {
  if (k < 2) throw DomainError("hypergraph: k must be at least 2");
  if (n < k) throw DomainError("hypergraph: n must be at least k");
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (static_cast<int>(e.size()) != k)
      throw DomainError("hypergraph: edge " + std::to_string(i) + " does not have k vertices");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw DomainError("hypergraph: edge " + std::to_string(i) + " repeats a vertex");
    if (e.front() < 1 || e.back() > n)
      throw DomainError("hypergraph: edge " + std::to_string(i) + " has a label outside 1..n");
    if (!seen.insert(e).second) throw DomainError("hypergraph: duplicate edge " + std::to_string(i));
    for (Vertex v : e) incidence_[v - 1].push_back(i);
  }
}

BaseGraph::BaseGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw DomainError("graph: needs at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto& [u, v] : edges_) {
    if (u == v) throw DomainError("graph: loops are not allowed");
    if (u < 1 || v < 1 || u > n || v > n) throw DomainError("graph: label outside 1..n");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw DomainError("graph: parallel edges are not allowed");
  }
}

BaseGraph BaseGraph::cycle(int m) {
  if (m < 3) throw DomainError("cycle graph needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= m; ++i) edges.emplace_back(i, i % m + 1);
  return BaseGraph(m, std::move(edges));
}

BaseGraph BaseGraph::path(int vertices) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < vertices; ++i) edges.emplace_back(i, i + 1);
  return BaseGraph(vertices, std::move(edges));
}

UniformHypergraph BaseGraph::as_hypergraph() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (auto [u, v] : edges_) edges.push_back({u, v});
  return UniformHypergraph(2, n_, std::move(edges));
}

UniformHypergraph build_hypercycle(int m, int k) {
  if (m < 2 || k < 2) throw DomainError("hypercycle: requires m >= 2 and k >= 2");
  if (m == 2 && k == 2) throw DomainError("hypercycle: C_{2,2} would repeat an edge");
  const int n = m * (k - 1);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 1; i <= m; ++i) {
    Edge e;
    for (int t = 0; t < k; ++t) {
      int label = (i - 1) * (k - 1) + 1 + t;
      if (label == n + 1) label = 1;
      e.push_back(label);
    }
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(k, n, std::move(edges));
}

UniformHypergraph build_power(const BaseGraph& g, int k) {
  if (k < 2) throw DomainError("power hypergraph: k must be at least 2");
  int next = g.vertex_count() + 1;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Edge e{u, v};
    for (int t = 0; t < k - 2; ++t) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  const int n = next - 1;
  if (n < k) throw DomainError("power hypergraph: fewer than k vertices");
  return UniformHypergraph(k, n, std::move(edges));
}

UniformHypergraph build_single_edge(int k) {
  Edge e;
  for (int v = 1; v <= k; ++v) e.push_back(v);
  return UniformHypergraph(k, k, {e});
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const UniformHypergraph& a, const UniformHypergraph& b)
      : a_(a), b_(b), map_(a.n() + 1, 0), used_(b.n() + 1, false), b_edges_(b.edges().begin(), b.edges().end()) {
    co_a_ = codegree(a);
    co_b_ = codegree(b);
    // Visit vertices so that each one (after the first of its component) has
    // a mapped neighbour.
    std::vector<bool> seen(a.n() + 1, false);
    for (Vertex s = 1; s <= a.n(); ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        const Vertex v = order_[head++];
        for (std::size_t ei : a.incident(v))
          for (Vertex w : a.edges()[ei])
            if (!seen[w]) {
              seen[w] = true;
              order_.push_back(w);
            }
      }
    }
  }

  bool run() { return extend(0); }

 private:
  static std::vector<std::vector<int>> codegree(const UniformHypergraph& h) {
    std::vector<std::vector<int>> c(h.n() + 1, std::vector<int>(h.n() + 1, 0));
    for (const Edge& e : h.edges())
      for (Vertex u : e)
        for (Vertex w : e) c[u][w] += 1;
    return c;
  }

  bool consistent(Vertex v) const {
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      const Vertex u = order_[pos];
      if (map_[u] == 0) continue;
      if (co_a_[u][v] != co_b_[map_[u]][map_[v]]) return false;
    }
    for (std::size_t ei : a_.incident(v)) {
      Edge image;
      for (Vertex w : a_.edges()[ei]) {
        if (map_[w] == 0) break;
        image.push_back(map_[w]);
      }
      if (image.size() != a_.edges()[ei].size()) continue;
      std::sort(image.begin(), image.end());
      if (!b_edges_.contains(image)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex cand = 1; cand <= b_.n(); ++cand) {
      if (used_[cand] || b_.degree(cand) != a_.degree(v)) continue;
      map_[v] = cand;
      used_[cand] = true;
      if (consistent(v) && extend(depth + 1)) return true;
      used_[cand] = false;
      map_[v] = 0;
    }
    return false;
  }

  const UniformHypergraph& a_;
  const UniformHypergraph& b_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::set<Edge> b_edges_;
  std::vector<std::vector<int>> co_a_;
  std::vector<std::vector<int>> co_b_;
  std::vector<Vertex> order_;
};

}  // namespace

bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (Vertex v = 1; v <= a.n(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return IsoSearch(a, b).run();
}

std::optional<int> hypercycle_length(const UniformHypergraph& h) {
  const int m = static_cast<int>(h.edge_count());
  if (m < 2 || (m == 2 && h.k() == 2) || h.n() != m * (h.k() - 1)) return std::nullopt;
  if (!isomorphic(h, build_hypercycle(m, h.k()))) return std::nullopt;
  return m;
}

DenseVector tensor_apply(const UniformHypergraph& h, const DenseVector& x) {
  if (static_cast<int>(x.size()) != h.n()) throw DimensionMismatch("tensor_apply: vector length differs from n");
  DenseVector out(x.size());
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) {
      Quad5 prod(1);
      for (Vertex u : e)
        if (u != v) prod *= x[u - 1];
      out[v - 1] += prod;
    }
  }
  return out;
}

Quad5 eigen_residual(const UniformHypergraph& h, const Quad5& lambda, const DenseVector& x) {
  const DenseVector ax = tensor_apply(h, x);
  Quad5 worst(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Quad5 r = (ax[i] - lambda * quad_pow(x[i], static_cast<unsigned long>(h.k() - 1))).abs();
    if (r > worst) worst = r;
  }
  return worst;
}

}  // namespace hypertrace
