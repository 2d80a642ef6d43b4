#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "hypertrace/hypergraph.hpp"
#include "hypertrace/number.hpp"
#include "hypertrace/quad5.hpp"

namespace hypertrace {

// Coefficients of the monic degree-s polynomial with power sums `traces`,
// highest degree first: result[j] multiplies lambda^{s-j}. Uses
// j P_j = sum_{i=1}^{j} i p_i P_{j-i} with p_i = -Tr_i / i.
std::vector<BigRat> schur_assemble(std::span<const BigRat> traces, int s);

// Admissible values of lambda^k (= beta^2), sorted ascending, unique.
struct EigenClassSet {
  std::vector<Quad5> values;
  bool contains(const Quad5& x) const;
  bool conjugation_closed() const;
};

inline constexpr int kMaxSignedGraphVertices = 6;

// For k >= 4 all signed subgraphs of g, for k = 3 only signed induced
// subgraphs; collects beta^2 over their adjacency eigenvalues beta.
// Throws ResourceError for more than 6 vertices, DomainError if k < 3 or a
// beta^2 falls outside Q(sqrt 5).
EigenClassSet signed_subgraph_classes(const BaseGraph& g, int k, unsigned threads = 1);

// Roots mu of prod (mu - beta_i^2) given the char poly of a symmetric integer
// matrix (highest degree first), with multiplicity, ascending.
std::vector<Quad5> squared_eigenvalues(const std::vector<BigInt>& charpoly);

struct Multiplicities {
  BigInt m0;
  BigInt m1;
  BigInt m2;
  BigInt m4;
  BigInt m_pair;  // shared by (3+sqrt5)/2 and (3-sqrt5)/2
  bool operator==(const Multiplicities&) const = default;
};

// ((3+sqrt5)/2)^d + ((3-sqrt5)/2)^d.
BigInt lucas_pair_sum(unsigned long d);

// n (k-1)^{n-1} for C_{4,k}, i.e. 4 (k-1)^{4k-4}.
BigInt c4k_total_degree(int k);

// Solves k (m1 + 2^d m2 + 4^d m4 + L_d m') = Tr_{dk}, d = 1..4, then m0 from
// the degree identity. Throws ConsistencyError unless all five are
// nonnegative integers.
Multiplicities solve_multiplicities(int k, std::span<const BigInt, 4> traces);

struct CharFactor {
  Quad5 root;  // factor (lambda^k - root)^mult
  BigInt mult;
};

struct FactoredCharPoly {
  int k = 0;
  BigInt lambda_power;
  std::vector<CharFactor> factors;
  std::string status;  // "verified" or "extrapolated"
  std::string note;

  BigInt degree() const;
  std::string to_text() const;
};

// Traces from trace_closed_c4k, multiplicities from the exact solve.
FactoredCharPoly charpoly_c4k(int k);
FactoredCharPoly factored_c4k(int k, const Multiplicities& m);

// Comparison of a solved multiplicity with two published closed-form
// variants, labelled "statement" and "proof".
struct PublishedComparison {
  std::string name;
  BigInt solved;
  BigInt statement;
  BigInt proof;
  std::string verdict;  // "statement", "proof", "both", "neither"
};

std::vector<PublishedComparison> compare_with_published(int k, const Multiplicities& m);

}  // namespace hypertrace
