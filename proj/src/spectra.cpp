#include "hypertrace/spectra.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <sstream>

#include "hypertrace/errors.hpp"
#include "hypertrace/matrix.hpp"
#include "hypertrace/parallel.hpp"
#include "hypertrace/trace.hpp"

namespace hypertrace {

std::vector<BigRat> schur_assemble(std::span<const BigRat> traces, int s) {
  if (s < 0) throw DomainError("schur_assemble: negative degree");
  if (traces.size() < static_cast<std::size_t>(s)) throw DomainError("schur_assemble: fewer traces than the degree");
  std::vector<BigRat> p(s + 1, BigRat(0));
  p[0] = 1;
  for (int j = 1; j <= s; ++j) {
    BigRat acc = 0;
    for (int i = 1; i <= j; ++i) acc += traces[i - 1] * p[j - i];
    p[j] = -acc / j;
  }
  return p;
}

bool EigenClassSet::contains(const Quad5& x) const { return std::binary_search(values.begin(), values.end(), x); }

bool EigenClassSet::conjugation_closed() const {
  return std::all_of(values.begin(), values.end(), [&](const Quad5& x) { return contains(x.conj()); });
}

namespace {

using Poly = std::vector<BigInt>;  // lowest degree first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; false if there is a remainder.
bool divide_monic(const Poly& num, const Poly& den, Poly& quotient) {
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) return false;
  Poly rem = num;
  Poly q(num.size() - dn, BigInt(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = rem[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) rem[i - dn + t] -= c * den[t];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (rem[i] != 0) return false;
  quotient = std::move(q);
  trim(quotient);
  return true;
}

}  // namespace

std::vector<Quad5> squared_eigenvalues(const std::vector<BigInt>& charpoly) {
  if (charpoly.empty() || charpoly.front() != 1) throw DomainError("squared_eigenvalues: expects a monic polynomial");
  const std::size_t n = charpoly.size() - 1;
  // p(x) = E(x^2) + x O(x^2); prod (mu - beta_i^2) = (-1)^n (E^2 - mu O^2).
  Poly even, odd;
  for (std::size_t d = 0; d <= n; ++d) {
    const BigInt& c = charpoly[n - d];
    if (d % 2 == 0) {
      even.resize(d / 2 + 1, BigInt(0));
      even[d / 2] = c;
    } else {
      odd.resize(d / 2 + 1, BigInt(0));
      odd[d / 2] = c;
    }
  }
  Poly q(n + 1, BigInt(0));
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = 0; j < even.size(); ++j) q[i + j] += even[i] * even[j];
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j) q[i + j + 1] -= odd[i] * odd[j];
  if (n % 2 == 1)
    for (auto& c : q) c = -c;
  trim(q);

  // Nonnegative real roots are bounded by the Cauchy bound 1 + max |c_i|.
  BigInt bound = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    if (abs(q[i]) > bound) bound = abs(q[i]);
  bound += 1;

  std::vector<Quad5> roots;
  Poly rest;
  while (q.size() > 1 && q[0] == 0) {
    q.erase(q.begin());
    roots.emplace_back(0);
  }
  for (BigInt mu = 1; q.size() > 1 && mu <= bound; ++mu) {
    if (!mpz_divisible_p(q[0].get_mpz_t(), mu.get_mpz_t())) continue;
    while (q.size() > 1 && divide_monic(q, Poly{-mu, 1}, rest)) {
      q = rest;
      roots.emplace_back(mu);
    }
  }
  // Conjugate pairs (s +- t sqrt5)/2 from factors mu^2 - s mu + (s^2 - 5t^2)/4.
  const BigInt s_max = 2 * bound;
  for (BigInt s = 1; q.size() > 2 && s <= s_max; ++s) {
    for (BigInt t = 1; q.size() > 2 && 5 * t * t <= s * s; ++t) {
      const BigInt disc = s * s - 5 * t * t;
      if (!mpz_divisible_ui_p(disc.get_mpz_t(), 4)) continue;
      const BigInt prod = disc / 4;
      while (q.size() > 2 && divide_monic(q, Poly{prod, -s, 1}, rest)) {
        q = rest;
        roots.emplace_back(make_rat(s, 2), make_rat(t, 2));
        roots.emplace_back(make_rat(s, 2), make_rat(-t, 2));
      }
    }
  }
  if (q.size() > 1) throw DomainError("squared_eigenvalues: a squared eigenvalue lies outside Q(sqrt5)");
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct SignedGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

void collect_signed(const SignedGraph& g, std::set<Quad5>& out) {
  const std::size_t n = g.vertices.size();
  auto pos = [&](Vertex v) {
    return static_cast<std::size_t>(std::find(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin());
  };
  const std::uint32_t signings = 1u << g.edges.size();
  for (std::uint32_t mask = 0; mask < signings; ++mask) {
    IntMatrix a(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const long s = (mask >> e) & 1u ? -1 : 1;
      const std::size_t u = pos(g.edges[e].first), v = pos(g.edges[e].second);
      a(u, v) = s;
      a(v, u) = s;
    }
    for (const Quad5& mu : squared_eigenvalues(charpoly_by_determinant(a))) out.insert(mu);
  }
}

}  // namespace

EigenClassSet signed_subgraph_classes(const BaseGraph& g, int k, unsigned threads) {
  if (k < 3) throw DomainError("signed_subgraph_classes: k must be at least 3");
  if (g.vertex_count() > kMaxSignedGraphVertices)
    throw ResourceError("signed_subgraph_classes: at most 6 base-graph vertices are supported");
  const auto& edges = g.edges();
  const int n = g.vertex_count();

  std::vector<SignedGraph> subgraphs;
  if (k >= 4) {
    for (std::uint32_t mask = 1; mask < (1u << edges.size()); ++mask) {
      SignedGraph s;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if ((mask >> e) & 1u) {
          s.edges.push_back(edges[e]);
          s.vertices.push_back(edges[e].first);
          s.vertices.push_back(edges[e].second);
        }
      std::sort(s.vertices.begin(), s.vertices.end());
      s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
      subgraphs.push_back(std::move(s));
    }
  } else {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      SignedGraph s;
      for (int v = 1; v <= n; ++v)
        if ((mask >> (v - 1)) & 1u) s.vertices.push_back(v);
      for (const auto& e : edges)
        if (((mask >> (e.first - 1)) & 1u) && ((mask >> (e.second - 1)) & 1u)) s.edges.push_back(e);
      subgraphs.push_back(std::move(s));
    }
  }

  const unsigned workers = std::max(1u, threads);
  std::vector<std::set<Quad5>> partial(workers);
  run_workers(workers, [&](unsigned w, unsigned count) {
    for (std::size_t i = w; i < subgraphs.size(); i += count) collect_signed(subgraphs[i], partial[w]);
  });
  // Any single vertex is a subgraph with eigenvalue 0.
  std::set<Quad5> merged{Quad5(0)};
  for (const auto& part : partial) merged.insert(part.begin(), part.end());
  return EigenClassSet{{merged.begin(), merged.end()}};
}

BigInt lucas_pair_sum(unsigned long d) {
  const Quad5 s = quad_pow(Quad5::phi_sq_plus(), d) + quad_pow(Quad5::phi_sq_minus(), d);
  if (!s.is_rational() || !is_integer(s.a())) throw ConsistencyError("lucas_pair_sum: sum is not an integer");
  return s.a().get_num();
}

BigInt c4k_total_degree(int k) {
  if (k < 2) throw DomainError("c4k_total_degree: k must be at least 2");
  return 4 * ipow(BigInt(k - 1), static_cast<unsigned long>(4 * k - 4));
}

Multiplicities solve_multiplicities(int k, std::span<const BigInt, 4> traces) {
  if (k < 3) throw DomainError("solve_multiplicities: k must be at least 3");
  RatMatrix a(4);
  std::vector<BigRat> rhs(4);
  for (std::size_t d = 1; d <= 4; ++d) {
    a(d - 1, 0) = 1;
    a(d - 1, 1) = BigRat(ipow(2, d));
    a(d - 1, 2) = BigRat(ipow(4, d));
    a(d - 1, 3) = BigRat(lucas_pair_sum(d));
    rhs[d - 1] = BigRat(traces[d - 1]) / k;
  }
  const std::vector<BigRat> x = solve_linear_exact(a, rhs);
  for (std::size_t i = 0; i < 4; ++i)
    if (!is_integer(x[i]) || sgn(x[i]) < 0)
      throw ConsistencyError("solve_multiplicities: solution component " + std::to_string(i + 1) + " = " +
                             to_string(x[i]) + " is not a nonnegative integer");
  Multiplicities m{0, x[0].get_num(), x[1].get_num(), x[2].get_num(), x[3].get_num()};
  m.m0 = c4k_total_degree(k) - k * (m.m1 + m.m2 + m.m4 + 2 * m.m_pair);
  if (sgn(m.m0) < 0) throw ConsistencyError("solve_multiplicities: m0 = " + to_string(m.m0) + " is negative");
  return m;
}

BigInt FactoredCharPoly::degree() const {
  BigInt total = lambda_power;
  for (const auto& f : factors) total += k * f.mult;
  return total;
}

std::string FactoredCharPoly::to_text() const {
  std::ostringstream os;
  os << "lambda^" << to_string(lambda_power);
  for (const auto& f : factors) {
    if (f.mult == 0) continue;
    os << " (lambda^" << k << " - " << (f.root.is_rational() ? f.root.to_string() : "(" + f.root.to_string() + ")")
       << ")^" << to_string(f.mult);
  }
  return os.str();
}

FactoredCharPoly factored_c4k(int k, const Multiplicities& m) {
  FactoredCharPoly p;
  p.k = k;
  p.lambda_power = m.m0;
  p.factors = {{Quad5(1), m.m1},
               {Quad5(2), m.m2},
               {Quad5(4), m.m4},
               {Quad5::phi_sq_plus(), m.m_pair},
               {Quad5::phi_sq_minus(), m.m_pair}};
  if (k >= 4) {
    p.status = "verified";
  } else {
    p.status = "extrapolated";
    p.note = "k=3 lies outside the stated range k>=4 of the factored form";
  }
  return p;
}

FactoredCharPoly charpoly_c4k(int k) {
  if (k < 3) throw DomainError("charpoly_c4k: k must be at least 3");
  const std::array<BigInt, 4> traces{trace_closed_c4k(k, 1), trace_closed_c4k(k, 2), trace_closed_c4k(k, 3), trace_closed_c4k(k, 4)};
  return factored_c4k(k, solve_multiplicities(k, traces));
}

std::vector<PublishedComparison> compare_with_published(int k, const Multiplicities& m) {
  if (k < 3) throw DomainError("compare_with_published: k must be at least 3");
  const BigInt kk = k;
  const BigInt km1 = k - 1;
  const auto p = [](const BigInt& b, int e) { return ipow(b, static_cast<unsigned long>(e)); };
  const BigInt total = c4k_total_degree(k);
  const BigInt head0 = total - 4 * p(kk, k - 1) * p(km1, 3 * k - 4) + 4 * p(kk, 2 * k - 3) * p(km1, 2 * k - 3) +
                       5 * p(kk, 4 * k - 8);
  const BigInt head1 = 4 * p(kk, k - 2) * p(km1, 3 * k - 4) - 8 * p(kk, 2 * k - 4) * p(km1, 2 * k - 3);
  const BigInt head2 = 4 * p(kk, 2 * k - 4) * p(km1, 2 * k - 3) + 10 * p(kk, 4 * k - 9);
  const BigInt tail_pair = 8 * p(kk, 4 * k - 9);

  std::vector<PublishedComparison> rows{
      {"m0", m.m0, head0 - 4 * p(kk, 3 * k - 5) * p(km1, k - 2), head0 - 4 * p(kk, 3 * k - 4) * p(km1, k - 2), ""},
      {"m1", m.m1, head1 + 4 * p(kk, 3 * k - 6) * p(km1, k - 2), head1 + 4 * p(kk, 3 * k - 5) * p(km1, k - 2), ""},
      {"m2", m.m2, head2 - 8 * p(kk, 3 * k - 6) * p(km1, k - 2), head2 - 8 * p(kk, 3 * k - 5) * p(km1, k - 2), ""},
      {"m'", m.m_pair, 4 * p(kk, 3 * k - 5) * p(km1, k - 2) - tail_pair, 4 * p(kk, 3 * k - 6) * p(km1, k - 2) - tail_pair,
       ""},
  };
  for (auto& r : rows) {
    const bool st = r.solved == r.statement;
    const bool pr = r.solved == r.proof;
    r.verdict = st && pr ? "both" : st ? "statement" : pr ? "proof" : "neither";
  }
  return rows;
}

}  // namespace hypertrace
