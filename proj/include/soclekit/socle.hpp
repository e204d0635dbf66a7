#ifndef SOCLEKIT_SOCLE_HPP
#define SOCLEKIT_SOCLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "soclekit/ideal.hpp"

namespace soclekit {

// K-basis of (I^m : m)/I^m, listed as the monomials of (I^m : m) \ I^m.
struct SocleBasis {
  int64_t power = 0;
  std::vector<Monomial> elements;  // lexicographic order
};

// Socle components of all powers up to a bound, together with the minimal
// generators of the direct sum as a module over the fiber cone. Fiber degree k
// corresponds to power m = k + 1, so min_gens_by_fiber[k] is a subset of
// bases[k] (the component of power k + 1).
struct SocleModuleSummary {
  int64_t max_power = 0;
  std::vector<SocleBasis> bases;                      // index m-1 holds power m
  std::vector<std::vector<Monomial>> min_gens_by_fiber;  // index k, 0 <= k < max_power
};

// Graph on the variable indices with an edge {i, j} whenever two generators
// satisfy x_i * u_k = x_j * u_l.
struct LinearRelationGraph {
  int64_t nvars = 0;
  std::vector<int64_t> vertices;                    // sorted, 0-based
  std::vector<std::pair<int64_t, int64_t>> edges;   // sorted pairs i < j
};

SocleBasis socle_basis(const MonomialIdeal& ideal, int64_t power);

// The ideal generated by the power-1 socle component; zero if (I : m) = I.
MonomialIdeal soc_ideal(const MonomialIdeal& ideal);

SocleModuleSummary socle_module_mingens(const MonomialIdeal& ideal, int64_t max_power);

// Entry m (0 <= m <= max_power) is true iff (I^{m+1} : I) = I^m.
std::vector<bool> ratliff_check(const MonomialIdeal& ideal, int64_t max_power);

// For ideals over disjoint variable blocks, joined into the concatenated ring:
// checks that every socle component of the join is the set of products of
// socle elements of the factors, with power indices summing to m + 1.
bool product_decomposition_check(const MonomialIdeal& a, const MonomialIdeal& b,
                                 int64_t max_power);

// Rank of the exponent matrix of the generators; only defined for ideals
// generated in a single degree.
int64_t analytic_spread(const MonomialIdeal& ideal);

LinearRelationGraph linear_relation_graph(const MonomialIdeal& ideal);

// For an equigenerated ideal whose linear relation graph is connected on all n
// variables: does the power-n socle contain a monomial of degree d*n - 1?
// nullopt when the hypothesis fails.
std::optional<bool> relation_graph_generator_check(const MonomialIdeal& ideal);

// soc(I^{k+1}) contained in I * soc(I^k), as ideals.
bool socstar_containment_check(const MonomialIdeal& ideal, int64_t k);

// Degrees of the power-m socle basis elements, ascending.
std::vector<int64_t> degree_profile(const MonomialIdeal& ideal, int64_t power);

}  // namespace soclekit

#endif
