#include "hypertrace/trace.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "hypertrace/errors.hpp"
#include "hypertrace/matrix.hpp"
#include "hypertrace/parallel.hpp"

namespace hypertrace {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string trace_status(const UniformHypergraph& h, int j) {
  if (h.k() == 2) return "verified";
  const auto m = hypercycle_length(h);
  if (m && *m == 4 && (j % h.k() != 0 || j / h.k() <= 4)) return "verified";
  return "extrapolated";
}

struct WalkStats {
  BigInt b;
  BigInt c;
  BigInt walks;
};

WalkStats walk_stats(const MultiDigraph& d) { return {b_factor(d), c_factor(d), count_rooted_walks(d)}; }

// (k-1)^{n-1} * count * (b/c) * (1/(k-1)!)^j * |W|
BigRat contribution(const UniformHypergraph& h, int j, const BigInt& count, const WalkStats& s) {
  const BigInt prefactor = ipow(BigInt(h.k() - 1), static_cast<unsigned long>(h.n() - 1));
  const BigInt pi_den = ipow(factorial(static_cast<unsigned long>(h.k() - 1)), static_cast<unsigned long>(j));
  return make_rat(prefactor * count * s.b * s.walks, s.c * pi_den);
}

TraceReport finish_report(const UniformHypergraph& h, int j, std::string engine,
                          std::vector<PatternContribution> patterns, Clock::time_point start) {
  TraceReport report;
  report.k = h.k();
  report.j = j;
  report.engine = std::move(engine);
  std::sort(patterns.begin(), patterns.end(),
            [](const PatternContribution& a, const PatternContribution& b) { return a.pattern < b.pattern; });
  report.value = 0;
  for (const auto& p : patterns) report.value += p.contribution;
  report.patterns = std::move(patterns);
  report.status = trace_status(h, j);
  report.wall_ms = elapsed_ms(start);
  return report;
}

struct AtomRec {
  Vertex root;
  std::size_t edge;
  std::vector<Vertex> tail;
};

// Every atom supported on an edge, grouped by ascending root.
std::vector<AtomRec> atom_catalogue(const UniformHypergraph& h) {
  std::vector<AtomRec> atoms;
  for (Vertex v = 1; v <= h.n(); ++v) {
    for (std::size_t ei : h.incident(v)) {
      std::vector<Vertex> tail;
      for (Vertex u : h.edges()[ei])
        if (u != v) tail.push_back(u);
      do {
        atoms.push_back({v, ei, tail});
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
  }
  return atoms;
}

using ArcKey = std::vector<std::tuple<Vertex, Vertex, std::int64_t>>;

struct NaiveAccum {
  std::uint64_t count = 0;
  WalkStats stats;
};

class NaiveSearch {
 public:
  NaiveSearch(const UniformHypergraph& h, int j, const std::vector<AtomRec>& atoms)
      : h_(h), j_(j), km1_(h.k() - 1), atoms_(atoms), roots_(h.n() + 1, 0), tails_(h.n() + 1, 0) {
    seq_.reserve(j);
  }

  void run_from(std::size_t first_atom) {
    push(first_atom);
    if (feasible(atoms_[first_atom].root)) descend(first_atom);
    pop(first_atom);
  }

  std::map<FPattern, NaiveAccum>& patterns() { return patterns_; }

 private:
  void push(std::size_t a) {
    seq_.push_back(a);
    roots_[atoms_[a].root] += 1;
    for (Vertex v : atoms_[a].tail) tails_[v] += 1;
  }

  void pop(std::size_t a) {
    seq_.pop_back();
    roots_[atoms_[a].root] -= 1;
    for (Vertex v : atoms_[a].tail) tails_[v] -= 1;
  }

  // Necessary conditions for completing the tuple to a balanced one. Vertices
  // below `current` can no longer become roots.
  bool feasible(Vertex current) const {
    const std::int64_t remaining = j_ - static_cast<std::int64_t>(seq_.size());
    std::int64_t deficit = 0;
    std::int64_t roots_needed = 0;
    for (Vertex v = 1; v <= h_.n(); ++v) {
      const std::int64_t out = km1_ * roots_[v];
      if (v < current) {
        if (tails_[v] > out || out - tails_[v] > remaining) return false;
        deficit += out - tails_[v];
      } else if (tails_[v] > out) {
        roots_needed += (tails_[v] - out + km1_ - 1) / km1_;
      }
    }
    return deficit <= remaining * km1_ && roots_needed <= remaining;
  }

  void descend(std::size_t last) {
    if (static_cast<int>(seq_.size()) == j_) {
      leaf();
      return;
    }
    const Vertex current = atoms_[last].root;
    auto first = std::lower_bound(atoms_.begin(), atoms_.end(), current,
                                  [](const AtomRec& a, Vertex v) { return a.root < v; });
    for (std::size_t a = static_cast<std::size_t>(first - atoms_.begin()); a < atoms_.size(); ++a) {
      push(a);
      if (feasible(atoms_[a].root)) descend(a);
      pop(a);
    }
  }

  void leaf() {
    for (Vertex v = 1; v <= h_.n(); ++v)
      if (km1_ * roots_[v] != tails_[v]) return;
    std::vector<Atom> atoms;
    atoms.reserve(seq_.size());
    FPattern pattern;
    pattern.usage.assign(h_.edge_count(), 0);
    std::map<std::pair<Vertex, std::size_t>, std::int64_t> root_counts;
    for (std::size_t a : seq_) {
      atoms.push_back({atoms_[a].root, atoms_[a].tail});
      pattern.usage[atoms_[a].edge] += 1;
      root_counts[{atoms_[a].root, atoms_[a].edge}] += 1;
    }
    for (const auto& [key, count] : root_counts) pattern.roots.push_back({key.first, key.second, count});

    const MultiDigraph d = arcs_from_atoms(atoms);
    ArcKey key;
    key.reserve(d.arcs().size());
    for (const auto& [arc, mult] : d.arcs()) key.emplace_back(arc.first, arc.second, mult);
    auto cached = cache_.find(key);
    if (cached == cache_.end()) cached = cache_.emplace(std::move(key), walk_stats(d)).first;
    if (cached->second.walks == 0) return;

    auto& slot = patterns_[pattern];
    if (slot.count == 0) slot.stats = cached->second;
    slot.count += 1;
  }

  const UniformHypergraph& h_;
  const int j_;
  const std::int64_t km1_;
  const std::vector<AtomRec>& atoms_;
  std::vector<std::int64_t> roots_;
  std::vector<std::int64_t> tails_;
  std::vector<std::size_t> seq_;
  std::map<ArcKey, WalkStats> cache_;
  std::map<FPattern, NaiveAccum> patterns_;
};

}  // namespace

BigInt naive_search_space(const UniformHypergraph& h, int j) {
  if (j < 0) throw DomainError("naive_search_space: j must be nonnegative");
  const BigInt tail_orders = factorial(static_cast<unsigned long>(h.k() - 1));
  std::vector<BigInt> coeff(j + 1, BigInt(0));
  coeff[0] = 1;
  for (Vertex v = 1; v <= h.n(); ++v) {
    const BigInt atoms_at_v = tail_orders * h.degree(v);
    for (int i = 1; i <= j; ++i) coeff[i] += atoms_at_v * coeff[i - 1];
  }
  return coeff[j];
}

TraceReport trace_naive(const UniformHypergraph& h, int j, const EnumerationOptions& opts) {
  if (j < 1) throw DomainError("trace_naive: j must be positive");
  const auto start = Clock::now();
  const BigInt space = naive_search_space(h, j);
  if (space > BigInt(std::to_string(opts.budget)))
    throw ResourceError("naive enumeration budget exceeded: " + to_string(space) + " candidate tuples > budget " +
                        std::to_string(opts.budget) + "; use the structured engine");

  const std::vector<AtomRec> atoms = atom_catalogue(h);
  const unsigned workers = std::max(1u, opts.threads);
  std::vector<std::map<FPattern, NaiveAccum>> partial(workers);
  run_workers(workers, [&](unsigned w, unsigned count) {
    NaiveSearch search(h, j, atoms);
    for (std::size_t a = w; a < atoms.size(); a += count) search.run_from(a);
    partial[w] = std::move(search.patterns());
  });

  std::map<FPattern, NaiveAccum> merged;
  for (auto& part : partial)
    for (auto& [pattern, acc] : part) {
      auto& slot = merged[pattern];
      if (slot.count == 0) slot.stats = acc.stats;
      slot.count += acc.count;
    }

  std::vector<PatternContribution> out;
  out.reserve(merged.size());
  for (auto& [pattern, acc] : merged) {
    const BigInt count(std::to_string(acc.count));
    out.push_back({pattern, count, acc.stats.b, acc.stats.c, acc.stats.walks,
                   contribution(h, j, count, acc.stats)});
  }
  return finish_report(h, j, "naive", std::move(out), start);
}

namespace {

bool used_edges_connected(const UniformHypergraph& h, const std::vector<std::int64_t>& usage) {
  std::vector<std::size_t> used;
  for (std::size_t e = 0; e < usage.size(); ++e)
    if (usage[e] > 0) used.push_back(e);
  if (used.empty()) return false;
  std::vector<bool> reached(h.edge_count(), false);
  std::vector<std::size_t> stack{used.front()};
  reached[used.front()] = true;
  std::size_t seen = 1;
  while (!stack.empty()) {
    const std::size_t e = stack.back();
    stack.pop_back();
    for (Vertex v : h.edges()[e])
      for (std::size_t f : h.incident(v))
        if (usage[f] > 0 && !reached[f]) {
          reached[f] = true;
          ++seen;
          stack.push_back(f);
        }
  }
  return seen == used.size();
}

class PatternEnumerator {
 public:
  PatternEnumerator(const UniformHypergraph& h, int j) : h_(h), j_(j), usage_(h.edge_count(), 0) {
    // An edge with a degree-1 vertex v must be used a multiple of k times,
    // since k r_v = u_e at v.
    step_.assign(h.edge_count(), 1);
    for (std::size_t e = 0; e < h.edge_count(); ++e)
      for (Vertex v : h.edges()[e])
        if (h.degree(v) == 1) step_[e] = h.k();
  }

  std::vector<FPattern> run() {
    usage_dfs(0, j_);
    return std::move(out_);
  }

 private:
  void usage_dfs(std::size_t e, std::int64_t left) {
    if (e == h_.edge_count()) {
      if (left == 0) on_usage();
      return;
    }
    for (std::int64_t u = 0; u <= left; u += step_[e]) {
      usage_[e] = u;
      usage_dfs(e + 1, left - u);
    }
    usage_[e] = 0;
  }

  void on_usage() {
    touched_.clear();
    roots_total_.clear();
    for (Vertex v = 1; v <= h_.n(); ++v) {
      std::int64_t s = 0;
      for (std::size_t e : h_.incident(v)) s += usage_[e];
      if (s % h_.k() != 0) return;
      if (s > 0) {
        touched_.push_back(v);
        roots_total_.push_back(s / h_.k());
      }
    }
    if (!used_edges_connected(h_, usage_)) return;
    edge_left_ = usage_;
    current_.clear();
    roots_dfs(0);
  }

  void roots_dfs(std::size_t idx) {
    if (idx == touched_.size()) {
      if (std::any_of(edge_left_.begin(), edge_left_.end(), [](std::int64_t x) { return x != 0; })) return;
      FPattern p{usage_, current_};
      std::sort(p.roots.begin(), p.roots.end());
      out_.push_back(std::move(p));
      return;
    }
    const Vertex v = touched_[idx];
    std::vector<std::size_t> edges;
    for (std::size_t e : h_.incident(v))
      if (usage_[e] > 0) edges.push_back(e);
    split(v, edges, 0, roots_total_[idx], idx);
  }

  // Distributes `left` roots at v over edges[pos..].
  void split(Vertex v, const std::vector<std::size_t>& edges, std::size_t pos, std::int64_t left, std::size_t idx) {
    if (pos + 1 == edges.size()) {
      const std::size_t e = edges[pos];
      if (left > edge_left_[e]) return;
      assign(v, e, left);
      roots_dfs(idx + 1);
      unassign(v, e, left);
      return;
    }
    const std::size_t e = edges[pos];
    for (std::int64_t r = 0; r <= std::min(left, edge_left_[e]); ++r) {
      assign(v, e, r);
      split(v, edges, pos + 1, left - r, idx);
      unassign(v, e, r);
    }
  }

  void assign(Vertex v, std::size_t e, std::int64_t r) {
    edge_left_[e] -= r;
    if (r > 0) current_.push_back({v, e, r});
  }

  void unassign(Vertex, std::size_t e, std::int64_t r) {
    edge_left_[e] += r;
    if (r > 0) current_.pop_back();
  }

  const UniformHypergraph& h_;
  const int j_;
  std::vector<std::int64_t> usage_;
  std::vector<std::int64_t> step_;
  std::vector<Vertex> touched_;
  std::vector<std::int64_t> roots_total_;
  std::vector<std::int64_t> edge_left_;
  std::vector<RootCount> current_;
  std::vector<FPattern> out_;
};

}  // namespace

std::vector<FPattern> enumerate_patterns(const UniformHypergraph& h, int j) {
  if (j < 1) throw DomainError("enumerate_patterns: j must be positive");
  if (!hypercycle_length(h)) throw UnsupportedShapeError("structured engine requires a hypercycle C_{m,k}");
  if (h.k() >= 3 && j % h.k() != 0) return {};
  auto patterns = PatternEnumerator(h, j).run();
  std::sort(patterns.begin(), patterns.end());
  return patterns;
}

BigInt pattern_tuple_count(const UniformHypergraph& h, const FPattern& p) {
  BigInt count = 1;
  std::size_t i = 0;
  while (i < p.roots.size()) {
    std::vector<std::int64_t> split;
    const Vertex v = p.roots[i].vertex;
    for (; i < p.roots.size() && p.roots[i].vertex == v; ++i) split.push_back(p.roots[i].count);
    count *= multinomial(split);
  }
  std::int64_t j = 0;
  for (auto u : p.usage) j += u;
  return count * ipow(factorial(static_cast<unsigned long>(h.k() - 1)), static_cast<unsigned long>(j));
}

MultiDigraph pattern_digraph(const UniformHypergraph& h, const FPattern& p) {
  MultiDigraph d;
  for (const RootCount& rc : p.roots) {
    d.add_vertex(rc.vertex);
    for (Vertex w : h.edges().at(rc.edge))
      if (w != rc.vertex) d.add_arc(rc.vertex, w, rc.count);
  }
  return d;
}

TraceReport trace_structured(const UniformHypergraph& h, int j, const EnumerationOptions& opts) {
  const auto start = Clock::now();
  const std::vector<FPattern> patterns = enumerate_patterns(h, j);
  std::vector<PatternContribution> out(patterns.size());
  const unsigned workers = std::max(1u, opts.threads);
  run_workers(workers, [&](unsigned w, unsigned count) {
    for (std::size_t i = w; i < patterns.size(); i += count) {
      const FPattern& p = patterns[i];
      const WalkStats stats = walk_stats(pattern_digraph(h, p));
      const BigInt tuples = pattern_tuple_count(h, p);
      out[i] = {p, tuples, stats.b, stats.c, stats.walks, contribution(h, j, tuples, stats)};
    }
  });
  std::erase_if(out, [](const PatternContribution& c) { return c.walks == 0; });
  return finish_report(h, j, "structured", std::move(out), start);
}

BigInt trace_closed_c4k(int k, int d) {
  if (k < 3) throw DomainError("trace_closed_c4k: k must be at least 3");
  if (d < 1 || d > 4) throw DomainError("trace_closed_c4k: d must be in 1..4");
  const BigInt kk = k;
  const BigInt km1 = k - 1;
  const auto p = [](const BigInt& b, int e) { return ipow(b, static_cast<unsigned long>(e)); };
  const std::array<BigInt, 4> basis{
      p(kk, k - 1) * p(km1, 3 * k - 4),
      p(kk, 2 * k - 3) * p(km1, 2 * k - 3),
      p(kk, 3 * k - 5) * p(km1, k - 2),
      p(kk, 4 * k - 8),
  };
  static constexpr std::array<std::array<int, 4>, 4> coeffs{{
      {4, 0, 0, 0},
      {4, 8, 0, 0},
      {4, 24, 12, 0},
      {4, 56, 64, 40},
  }};
  BigInt total = 0;
  for (std::size_t i = 0; i < 4; ++i) total += coeffs[d - 1][i] * basis[i];
  return total;
}

BigInt trace_matrix_oracle(const BaseGraph& g, int j) {
  if (j < 1) throw DomainError("trace_matrix_oracle: j must be positive");
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix a(n);
  for (auto [u, v] : g.edges()) {
    a(u - 1, v - 1) = 1;
    a(v - 1, u - 1) = 1;
  }
  IntMatrix power = a;
  for (int i = 1; i < j; ++i) power = mat_mul(power, a);
  return trace(power);
}

}  // namespace hypertrace
