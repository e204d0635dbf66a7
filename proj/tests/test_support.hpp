#ifndef SOCLEKIT_TEST_SUPPORT_HPP
#define SOCLEKIT_TEST_SUPPORT_HPP

// Shared test helpers: brute-force oracles kept independent of the library's
// computation paths, a platform-stable RNG, and small graph builders.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "soclekit/graph.hpp"
#include "soclekit/ideal.hpp"
#include "soclekit/polymatroid.hpp"

namespace testkit {

using soclekit::Edge;
using soclekit::Monomial;
using soclekit::MonomialIdeal;
using soclekit::PlpType;
using soclekit::Ring;
using soclekit::SimpleGraph;

// mt19937_64 output is fully specified; distributions are not, so draw ranges
// by hand to keep seeds portable.
struct TestRng {
  std::mt19937_64 engine;
  explicit TestRng(uint64_t seed) : engine(seed) {}
  int64_t next(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(engine() % static_cast<uint64_t>(hi - lo + 1));
  }
};

namespace oracle {

using Row = std::vector<int64_t>;

inline bool divides(const Row& a, const Row& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const std::vector<Row>& gens, const Row& u) {
  for (const auto& g : gens)
    if (divides(g, u)) return true;
  return false;
}

// quadratic divisibility filter
inline std::vector<Row> minimalize_bruteforce(std::vector<Row> rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<Row> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    bool keep = true;
    for (size_t j = 0; j < rows.size() && keep; ++j)
      if (i != j && divides(rows[j], rows[i]) && rows[j] != rows[i]) keep = false;
    if (keep) out.push_back(rows[i]);
  }
  return out;
}

inline std::vector<Row> rows_of(const MonomialIdeal& ideal) {
  std::vector<Row> rows;
  for (const auto& g : ideal.gens()) rows.push_back(g.exponents());
  return rows;
}

// m-fold products, then the quadratic filter
inline std::vector<Row> power_naive(const MonomialIdeal& ideal, int64_t m) {
  const size_t n = static_cast<size_t>(ideal.ring().nvars());
  std::vector<Row> acc{Row(n, 0)};
  const auto base = rows_of(ideal);
  for (int64_t step = 0; step < m; ++step) {
    std::vector<Row> next;
    for (const auto& p : acc)
      for (const auto& g : base) {
        Row r(n);
        for (size_t i = 0; i < n; ++i) r[i] = p[i] + g[i];
        next.push_back(std::move(r));
      }
    acc = minimalize_bruteforce(std::move(next));
  }
  return acc;
}

// Box enumeration of the power-m socle: every monomial with exponents at most
// m * (largest exponent of a generator), tested against the definition.
inline std::vector<Row> socle_box(const MonomialIdeal& ideal, int64_t m) {
  const size_t n = static_cast<size_t>(ideal.ring().nvars());
  int64_t max_exp = 0;
  for (const auto& g : ideal.gens())
    for (int64_t j = 0; j < ideal.ring().nvars(); ++j) max_exp = std::max(max_exp, g.exponent(j));
  const int64_t bound = m * max_exp;

  const std::vector<Row> pw = power_naive(ideal, m);

  std::vector<Row> out;
  Row u(n, 0);
  while (true) {
    if (!member(pw, u)) {
      bool socle = true;
      for (size_t i = 0; i < n && socle; ++i) {
        Row v = u;
        v[i] += 1;
        if (!member(pw, v)) socle = false;
      }
      if (socle) out.push_back(u);
    }
    size_t pos = 0;
    while (pos < n && u[pos] == bound) u[pos++] = 0;
    if (pos == n) break;
    u[pos] += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

inline std::vector<Monomial> to_monomials(const std::vector<oracle::Row>& rows) {
  std::vector<Monomial> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(Monomial(r));
  std::sort(out.begin(), out.end());
  return out;
}

inline Monomial mono(std::vector<int64_t> exps) { return Monomial(std::move(exps)); }

inline MonomialIdeal ideal_of(int64_t nvars, std::vector<std::vector<int64_t>> rows) {
  std::vector<Monomial> gens;
  for (auto& r : rows) gens.push_back(Monomial(std::move(r)));
  return MonomialIdeal(Ring(nvars), std::move(gens));
}

// --- graphs ----------------------------------------------------------------

inline SimpleGraph cycle_graph(int64_t n) {
  std::vector<Edge> edges;
  for (int64_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph complete_graph(int64_t n) {
  std::vector<Edge> edges;
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph path_graph(int64_t n) {
  std::vector<Edge> edges;
  for (int64_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return SimpleGraph(n, std::move(edges));
}

// two triangles sharing vertex 3, with four pendant edges
inline SimpleGraph figure2_graph() {
  return SimpleGraph(9, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {0, 6}, {1, 5}, {3, 7}, {4, 8}});
}

// two disjoint triangles joined by a length-2 path through the last vertex
inline SimpleGraph g1_graph() {
  return SimpleGraph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 6}, {3, 6}});
}

// --- random PLP types ------------------------------------------------------

// Basic type with n variables, entries bounded by cap, degree >= 1.
inline PlpType random_basic_type(TestRng& rng, int64_t n, int64_t cap) {
  PlpType t;
  t.a.assign(static_cast<size_t>(n), 0);
  const int64_t d = rng.next(1, cap);
  t.b.resize(static_cast<size_t>(n));
  t.b[0] = rng.next(0, d);
  for (int64_t i = 1; i < n; ++i) t.b[static_cast<size_t>(i)] = rng.next(0, cap);
  t.beta.resize(static_cast<size_t>(n));
  t.beta[0] = t.b[0];
  t.beta[static_cast<size_t>(n - 1)] = d;
  for (int64_t i = 1; i + 1 < n; ++i)
    t.beta[static_cast<size_t>(i)] = rng.next(t.beta[static_cast<size_t>(i - 1)], d);
  // fix monotonicity against the forced last entry
  for (int64_t i = n - 2; i >= 1; --i)
    t.beta[static_cast<size_t>(i)] =
        std::min(t.beta[static_cast<size_t>(i)], t.beta[static_cast<size_t>(i + 1)]);
  t.alpha.resize(static_cast<size_t>(n));
  t.alpha[0] = 0;
  t.alpha[static_cast<size_t>(n - 1)] = d;
  for (int64_t i = 1; i + 1 < n; ++i)
    t.alpha[static_cast<size_t>(i)] =
        rng.next(t.alpha[static_cast<size_t>(i - 1)],
                 std::min(t.beta[static_cast<size_t>(i)], d));
  return t;
}

inline PlpType random_feasible_basic_type(TestRng& rng, int64_t max_vars, int64_t cap) {
  while (true) {
    const int64_t n = rng.next(2, max_vars);
    PlpType t = random_basic_type(rng, n, cap);
    if (soclekit::plp_validate(t).valid && soclekit::plp_feasible(t)) return t;
  }
}

}  // namespace testkit

#endif
