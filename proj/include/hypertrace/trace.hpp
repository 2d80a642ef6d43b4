#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hypertrace/digraph.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/number.hpp"

namespace hypertrace {

// r_{v,e}: number of atoms of edge e rooted at v.
struct RootCount {
  Vertex vertex;
  std::size_t edge;
  std::int64_t count;
  auto operator<=>(const RootCount&) const = default;
};

// Equivalence class of index structures F sharing per-edge usage and root
// assignment. All members induce the same arc multiset.
struct FPattern {
  std::vector<std::int64_t> usage;  // atoms per edge, indexed like H.edges()
  std::vector<RootCount> roots;     // nonzero entries, sorted by (vertex, edge)
  auto operator<=>(const FPattern&) const = default;
};

struct PatternContribution {
  FPattern pattern;
  BigInt count;  // number of tuples F in the class
  BigInt b;
  BigInt c;
  BigInt walks;  // |W(F)|
  BigRat contribution;
};

struct TraceReport {
  int k = 0;
  int j = 0;
  std::string engine;
  BigRat value;
  std::vector<PatternContribution> patterns;  // sorted by pattern, nonzero only
  std::string status = "verified";            // or "extrapolated"
  double wall_ms = 0.0;
};

inline constexpr std::uint64_t kDefaultNaiveBudget = 1'000'000'000;

struct EnumerationOptions {
  unsigned threads = 1;
  std::uint64_t budget = kDefaultNaiveBudget;
};

// Size of the unpruned search space of trace_naive: tuples with nondecreasing
// roots whose atoms are all supported on edges.
BigInt naive_search_space(const UniformHypergraph& h, int j);

// Direct enumeration of tuples F = (i_1 a_1, ..., i_j a_j) with i_1 <= ... <= i_j,
// pruned on vertex balance feasibility. Throws ResourceError when
// naive_search_space exceeds the budget.
TraceReport trace_naive(const UniformHypergraph& h, int j, const EnumerationOptions& opts = {});

// Balanced, connected patterns of a hypercycle. Throws UnsupportedShapeError
// when h is not a hypercycle.
std::vector<FPattern> enumerate_patterns(const UniformHypergraph& h, int j);

// Number of tuples F in a pattern: prod_v multinomial(r_{v,.}) * ((k-1)!)^j.
BigInt pattern_tuple_count(const UniformHypergraph& h, const FPattern& p);

// Arc multiset shared by every tuple of the pattern.
MultiDigraph pattern_digraph(const UniformHypergraph& h, const FPattern& p);

// Pattern enumeration with multinomial interleaving counts.
TraceReport trace_structured(const UniformHypergraph& h, int j, const EnumerationOptions& opts = {});

// Tr_{dk} of C_{4,k} from the closed forms, k >= 3, 1 <= d <= 4.
BigInt trace_closed_c4k(int k, int d);

// tr(A^j) for the ordinary adjacency matrix.
BigInt trace_matrix_oracle(const BaseGraph& g, int j);

}  // namespace hypertrace
