#include "soclekit/socle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "soclekit/errors.hpp"

namespace soclekit {

namespace {

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw domain_error("socle of the zero ideal is undefined");
  if (ideal.is_unit()) throw domain_error("socle of the unit ideal is undefined");
}

}  // namespace

SocleBasis socle_basis(const MonomialIdeal& ideal, int64_t m) {
  require_proper(ideal);
  if (m < 1) throw domain_error("socle power must be at least 1");
  return SocleBasis{m, socle_monomials(power(ideal, m))};
}

MonomialIdeal soc_ideal(const MonomialIdeal& ideal) {
  require_proper(ideal);
  return MonomialIdeal(ideal.ring(), socle_monomials(ideal));
}

SocleModuleSummary socle_module_mingens(const MonomialIdeal& ideal, int64_t max_power) {
  require_proper(ideal);
  if (max_power < 1) throw domain_error("power bound must be at least 1");

  SocleModuleSummary out;
  out.max_power = max_power;

  std::vector<MonomialIdeal> powers;  // powers[m-1] = I^m
  powers.reserve(static_cast<size_t>(max_power));
  MonomialIdeal cur = ideal;
  powers.push_back(cur);
  for (int64_t m = 2; m <= max_power; ++m) {
    cur = multiply(cur, ideal);
    powers.push_back(cur);
  }
  for (int64_t m = 1; m <= max_power; ++m)
    out.bases.push_back(SocleBasis{m, socle_monomials(powers[static_cast<size_t>(m - 1)])});

  // The fiber cone is standard graded, so an element of the power-(k+1)
  // component is a non-generator exactly when it is g*u for a generator g of I
  // and a power-k socle element u, with the product surviving outside I^{k+1}.
  for (int64_t k = 0; k < max_power; ++k) {
    const auto& level = out.bases[static_cast<size_t>(k)].elements;  // power k+1
    std::set<Monomial> generated;
    if (k > 0) {
      const auto& below = out.bases[static_cast<size_t>(k - 1)].elements;
      const auto& target = powers[static_cast<size_t>(k)];
      for (const auto& u : below)
        for (const auto& g : ideal.gens()) {
          Monomial p = g.times(u);
          if (!target.contains(p)) generated.insert(std::move(p));
        }
    }
    std::vector<Monomial> mins;
    for (const auto& u : level)
      if (generated.find(u) == generated.end()) mins.push_back(u);
    out.min_gens_by_fiber.push_back(std::move(mins));
  }
  return out;
}

std::vector<bool> ratliff_check(const MonomialIdeal& ideal, int64_t max_power) {
  if (ideal.is_zero()) throw domain_error("Ratliff check needs a nonzero ideal");
  if (max_power < 0) throw domain_error("negative power bound");
  std::vector<bool> out;
  out.reserve(static_cast<size_t>(max_power + 1));
  MonomialIdeal prev = MonomialIdeal::unit(ideal.ring());  // I^0
  MonomialIdeal cur = ideal;                               // I^1
  for (int64_t m = 0; m <= max_power; ++m) {
    out.push_back(colon_ideal(cur, ideal) == prev);
    prev = cur;
    cur = multiply(cur, ideal);
  }
  return out;
}

bool product_decomposition_check(const MonomialIdeal& a, const MonomialIdeal& b,
                                 int64_t max_power) {
  if (max_power < 1) throw domain_error("power bound must be at least 1");
  MonomialIdeal joined = join_disjoint(a, b);

  // socle components of the factors, up to the bound
  std::vector<std::vector<Monomial>> soc_a, soc_b;
  {
    MonomialIdeal pa = a, pb = b;
    for (int64_t m = 1; m <= max_power; ++m) {
      soc_a.push_back(socle_monomials(pa));
      soc_b.push_back(socle_monomials(pb));
      if (m < max_power) {
        pa = multiply(pa, a);
        pb = multiply(pb, b);
      }
    }
  }

  MonomialIdeal pj = joined;
  for (int64_t m = 1; m <= max_power; ++m) {
    std::vector<Monomial> lhs = socle_monomials(pj);
    std::set<Monomial> rhs;
    for (int64_t r = 1; r <= m; ++r) {
      const int64_t s = m + 1 - r;
      if (s < 1 || s > max_power) continue;
      for (const auto& u : soc_a[static_cast<size_t>(r - 1)])
        for (const auto& v : soc_b[static_cast<size_t>(s - 1)]) {
          std::vector<int64_t> e = u.exponents();
          e.insert(e.end(), v.exponents().begin(), v.exponents().end());
          rhs.insert(Monomial(std::move(e)));
        }
    }
    if (lhs.size() != rhs.size() || !std::equal(lhs.begin(), lhs.end(), rhs.begin()))
      return false;
    if (m < max_power) pj = multiply(pj, joined);
  }
  return true;
}

int64_t analytic_spread(const MonomialIdeal& ideal) {
  const auto degree = ideal.generated_degree();
  if (!degree)
    throw unsupported_error("analytic spread is only computed for equigenerated ideals");
  const int64_t n = ideal.ring().nvars();

  // incremental exact row reduction, gcd-normalized, checked arithmetic
  std::vector<std::vector<int64_t>> basis;  // echelon rows
  std::vector<int64_t> pivot_col;
  int64_t rank = 0;
  for (const auto& g : ideal.gens()) {
    std::vector<int64_t> row = g.exponents();
    for (size_t k = 0; k < basis.size(); ++k) {
      const int64_t p = pivot_col[k];
      if (row[static_cast<size_t>(p)] == 0) continue;
      const int64_t lead = basis[k][static_cast<size_t>(p)];
      const int64_t factor = row[static_cast<size_t>(p)];
      for (int64_t j = 0; j < n; ++j)
        row[static_cast<size_t>(j)] =
            checked_add(checked_mul(row[static_cast<size_t>(j)], lead),
                        -checked_mul(basis[k][static_cast<size_t>(j)], factor));
      int64_t g0 = 0;
      for (int64_t v : row) g0 = std::gcd(g0, v);
      if (g0 > 1)
        for (auto& v : row) v /= g0;
    }
    int64_t p = -1;
    for (int64_t j = 0; j < n; ++j)
      if (row[static_cast<size_t>(j)] != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    basis.push_back(std::move(row));
    pivot_col.push_back(p);
    if (++rank == n) break;
  }
  return rank;
}

LinearRelationGraph linear_relation_graph(const MonomialIdeal& ideal) {
  const int64_t n = ideal.ring().nvars();
  const auto& gens = ideal.gens();
  std::set<std::pair<int64_t, int64_t>> edges;
  for (size_t k = 0; k < gens.size(); ++k)
    for (size_t l = k + 1; l < gens.size(); ++l) {
      // x_i * u_k = x_j * u_l demands u_k - u_l = e_j - e_i
      int64_t plus = -1, minus = -1;
      bool ok = true;
      for (int64_t j = 0; j < n && ok; ++j) {
        const int64_t d = gens[k].exponent(j) - gens[l].exponent(j);
        if (d == 0) continue;
        if (d == 1 && plus < 0)
          plus = j;
        else if (d == -1 && minus < 0)
          minus = j;
        else
          ok = false;
      }
      if (ok && plus >= 0 && minus >= 0)
        edges.insert({std::min(plus, minus), std::max(plus, minus)});
    }
  LinearRelationGraph graph;
  graph.nvars = n;
  std::set<int64_t> verts;
  for (const auto& e : edges) {
    verts.insert(e.first);
    verts.insert(e.second);
  }
  graph.vertices.assign(verts.begin(), verts.end());
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

std::optional<bool> relation_graph_generator_check(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return std::nullopt;
  const auto degree = ideal.generated_degree();
  if (!degree) return std::nullopt;
  const int64_t n = ideal.ring().nvars();

  LinearRelationGraph graph = linear_relation_graph(ideal);
  if (static_cast<int64_t>(graph.vertices.size()) != n) return std::nullopt;

  // connectivity over the edge list
  std::vector<std::vector<int64_t>> adj(static_cast<size_t>(n));
  for (const auto& e : graph.edges) {
    adj[static_cast<size_t>(e.first)].push_back(e.second);
    adj[static_cast<size_t>(e.second)].push_back(e.first);
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int64_t> stack{0};
  seen[0] = 1;
  int64_t reached = 1;
  while (!stack.empty()) {
    const int64_t v = stack.back();
    stack.pop_back();
    for (int64_t w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) return std::nullopt;

  const int64_t want = checked_add(checked_mul(*degree, n), -1);
  for (const auto& u : socle_basis(ideal, n).elements)
    if (u.degree() == want) return true;
  return false;
}

bool socstar_containment_check(const MonomialIdeal& ideal, int64_t k) {
  require_proper(ideal);
  if (k < 1) throw domain_error("containment index must be at least 1");
  MonomialIdeal pk = power(ideal, k);
  std::vector<Monomial> upper = socle_monomials(multiply(pk, ideal));
  if (upper.empty()) return true;
  std::vector<Monomial> lower = socle_monomials(pk);
  if (lower.empty()) return false;
  MonomialIdeal rhs = multiply(ideal, MonomialIdeal(ideal.ring(), std::move(lower)));
  for (const auto& u : upper)
    if (!rhs.contains(u)) return false;
  return true;
}

std::vector<int64_t> degree_profile(const MonomialIdeal& ideal, int64_t power_index) {
  std::vector<int64_t> out;
  for (const auto& u : socle_basis(ideal, power_index).elements) out.push_back(u.degree());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace soclekit
