#ifndef SOCLEKIT_POLYMATROID_HPP
#define SOCLEKIT_POLYMATROID_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "soclekit/ideal.hpp"

namespace soclekit {

// Type data of a PLP-polymatroidal ideal: generators are the degree-d
// exponent vectors u with a <= u <= b componentwise and
// alpha_i <= u_1 + ... + u_i <= beta_i, where d = alpha_n = beta_n.
struct PlpType {
  std::vector<int64_t> a;
  std::vector<int64_t> b;
  std::vector<int64_t> alpha;
  std::vector<int64_t> beta;

  int64_t nvars() const { return static_cast<int64_t>(a.size()); }
  int64_t degree() const { return alpha.empty() ? 0 : alpha.back(); }
  bool is_basic() const;

  friend bool operator==(const PlpType&, const PlpType&) = default;
};

struct PlpDiagnostics {
  bool valid = false;
  std::vector<std::string> violations;
};

// Veronese type I_{a,d}: all degree-d monomials with u_i <= a_i.
struct VeroneseType {
  std::vector<int64_t> a;
  int64_t d = 0;

  friend bool operator==(const VeroneseType&, const VeroneseType&) = default;
};

struct BasicReduction {
  Monomial shift;   // the factored-out monomial x^a
  PlpType basic;
  bool plainly_infeasible = false;  // tightened prefix windows crossed
};

struct EquigenReport {
  int64_t k0 = 0;
  bool equi_generated = false;
  std::vector<std::vector<int64_t>> violating_sets;  // 0-based variable indices
  bool depth_zero_at_first_power = false;            // a_i >= 1 for all i and sum(a) - d >= n-1
};

struct ExchangeResult {
  bool ok = false;
  // (u, v, i): u_i > v_i but no j with u_j < v_j repairs u - e_i + e_j into a generator
  std::optional<std::tuple<Monomial, Monomial, int64_t>> counterexample;
};

PlpDiagnostics plp_validate(const PlpType& type);

// Exact enumeration of the defining system; tolerates non-monotone prefix
// bounds (they arise from corner cases of the socle type formula).
MonomialIdeal plp_gens(const PlpType& type);

// Factor a valid type as x^a times a basic type. Prefix windows are shifted by
// the running sums of a and re-tightened to monotone form, which preserves the
// solution set.
BasicReduction plp_make_basic(const PlpType& type);

bool plp_feasible(const PlpType& type);
std::optional<Monomial> plp_witness(const PlpType& type);

// Type of soc(I) for a basic type (n >= 2). nullopt marks the zero ideal
// (some b_i = 0, or d = 0).
std::optional<PlpType> plp_soc_type(const PlpType& type);

// Type of I^m for a basic type.
PlpType plp_power_type(const PlpType& type, int64_t m);

bool plp_depth_zero(const PlpType& type);
bool plp_socstar_nonzero(const PlpType& type);

// soc(I^{k+1}) contained in I*soc(I^k) for every k in [n-1, k_max].
bool plp_socstar_degree_check(const PlpType& type, int64_t k_max);

// nullopt when sum(a) < d (no generator exists).
std::optional<PlpType> veronese_to_plp(const VeroneseType& type);

// Rank function value min(sum_{i in A} a_i, d); subset holds 0-based indices.
int64_t veronese_rank(const VeroneseType& type, const std::vector<int64_t>& subset);

EquigenReport veronese_equigen(const VeroneseType& type);

ExchangeResult exchange_check(const MonomialIdeal& ideal);

}  // namespace soclekit

#endif
