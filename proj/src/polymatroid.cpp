#include "soclekit/polymatroid.hpp"

#include <algorithm>
#include <numeric>

#include "soclekit/errors.hpp"
#include "soclekit/socle.hpp"

namespace soclekit {

namespace {

constexpr int64_t kMaxSubsetScanVars = 20;

void require_valid(const PlpType& t) {
  PlpDiagnostics diag = plp_validate(t);
  if (!diag.valid) throw domain_error("invalid PLP type: " + diag.violations.front());
}

void require_basic(const PlpType& t) {
  if (!t.is_basic()) throw domain_error("operation needs a basic PLP type (a = 0)");
}

// Monotone re-tightening of the prefix windows: prefix sums of a non-negative
// vector are nondecreasing, so alpha may be replaced by its running max and
// beta by its running min from the right without changing the solution set.
// Returns false when a window crosses, i.e. the system is plainly infeasible.
bool tighten_windows(std::vector<int64_t>& alpha, std::vector<int64_t>& beta, int64_t d) {
  const size_t n = alpha.size();
  for (size_t i = 0; i < n; ++i) {
    alpha[i] = std::max<int64_t>(alpha[i], 0);
    if (i > 0) alpha[i] = std::max(alpha[i], alpha[i - 1]);
  }
  for (size_t i = n; i-- > 0;) {
    beta[i] = std::min(beta[i], d);
    if (i + 1 < n) beta[i] = std::min(beta[i], beta[i + 1]);
  }
  for (size_t i = 0; i < n; ++i)
    if (alpha[i] > beta[i]) return false;
  return true;
}

// Lemma-style feasibility on tightened basic data: beta_i + b_{i+1} + ... +
// b_j >= alpha_j for all i <= j.
bool feasible_tightened(const std::vector<int64_t>& b, const std::vector<int64_t>& alpha,
                        const std::vector<int64_t>& beta) {
  const int64_t n = static_cast<int64_t>(b.size());
  for (int64_t i = 0; i < n; ++i) {
    int64_t cap = beta[static_cast<size_t>(i)];
    for (int64_t j = i; j < n; ++j) {
      if (j > i) cap = checked_add(cap, b[static_cast<size_t>(j)]);
      if (cap < alpha[static_cast<size_t>(j)]) return false;
    }
  }
  return true;
}

struct Tightened {
  std::vector<int64_t> b, alpha, beta;
  bool crossed = false;
};

Tightened tighten(const PlpType& t) {
  Tightened out{t.b, t.alpha, t.beta, false};
  out.crossed = !tighten_windows(out.alpha, out.beta, t.degree());
  return out;
}

}  // namespace

bool PlpType::is_basic() const {
  for (int64_t v : a)
    if (v != 0) return false;
  return true;
}

PlpDiagnostics plp_validate(const PlpType& t) {
  PlpDiagnostics diag;
  auto fail = [&](const std::string& msg) { diag.violations.push_back(msg); };

  const size_t n = t.a.size();
  if (n == 0) fail("empty type");
  if (t.b.size() != n || t.alpha.size() != n || t.beta.size() != n)
    fail("vectors a, b, alpha, beta must have equal length");
  if (!diag.violations.empty()) return diag;

  for (size_t i = 0; i < n; ++i) {
    if (t.a[i] < 0 || t.b[i] < 0 || t.alpha[i] < 0 || t.beta[i] < 0) {
      fail("entries must be non-negative");
      break;
    }
  }
  for (size_t i = 0; i < n; ++i)
    if (t.a[i] > t.b[i]) {
      fail("a_i <= b_i violated at index " + std::to_string(i + 1));
      break;
    }
  for (size_t i = 0; i + 1 < n; ++i)
    if (t.alpha[i] > t.alpha[i + 1]) {
      fail("alpha must be nondecreasing");
      break;
    }
  for (size_t i = 0; i + 1 < n; ++i)
    if (t.beta[i] > t.beta[i + 1]) {
      fail("beta must be nondecreasing");
      break;
    }
  for (size_t i = 0; i < n; ++i)
    if (t.alpha[i] > t.beta[i]) {
      fail("alpha_i <= beta_i violated at index " + std::to_string(i + 1));
      break;
    }
  if (t.alpha.back() != t.beta.back()) fail("alpha_n and beta_n must agree (the degree)");
  if (t.alpha.front() != t.a.front()) fail("alpha_1 must equal a_1");
  if (t.beta.front() != t.b.front()) fail("beta_1 must equal b_1");

  diag.valid = diag.violations.empty();
  return diag;
}

MonomialIdeal plp_gens(const PlpType& t) {
  const int64_t n = t.nvars();
  if (n == 0) throw domain_error("empty PLP type");
  if (t.b.size() != static_cast<size_t>(n) || t.alpha.size() != static_cast<size_t>(n) ||
      t.beta.size() != static_cast<size_t>(n))
    throw domain_error("vectors a, b, alpha, beta must have equal length");
  for (int64_t i = 0; i < n; ++i) {
    if (t.a[static_cast<size_t>(i)] < 0 || t.b[static_cast<size_t>(i)] < 0 ||
        t.alpha[static_cast<size_t>(i)] < 0 || t.beta[static_cast<size_t>(i)] < 0)
      throw domain_error("entries must be non-negative");
    if (t.a[static_cast<size_t>(i)] > t.b[static_cast<size_t>(i)])
      throw domain_error("a_i <= b_i violated");
  }
  if (t.alpha.back() != t.beta.back())
    throw domain_error("alpha_n and beta_n must agree (the degree)");

  const int64_t d = t.degree();
  std::vector<int64_t> suffix_b(static_cast<size_t>(n) + 1, 0);
  for (int64_t i = n - 1; i >= 0; --i)
    suffix_b[static_cast<size_t>(i)] =
        checked_add(suffix_b[static_cast<size_t>(i) + 1], t.b[static_cast<size_t>(i)]);

  Ring ring(n);
  std::vector<Monomial> gens;
  std::vector<int64_t> u(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int64_t i, int64_t prefix) -> void {
    if (i == n) {
      gens.push_back(Monomial(u));
      return;
    }
    int64_t lo = std::max(t.a[static_cast<size_t>(i)], t.alpha[static_cast<size_t>(i)] - prefix);
    // remaining capacity must still reach the degree
    lo = std::max(lo, d - prefix - suffix_b[static_cast<size_t>(i) + 1]);
    const int64_t hi =
        std::min(t.b[static_cast<size_t>(i)], t.beta[static_cast<size_t>(i)] - prefix);
    for (int64_t v = lo; v <= hi; ++v) {
      u[static_cast<size_t>(i)] = v;
      self(self, i + 1, prefix + v);
      u[static_cast<size_t>(i)] = 0;
    }
  };
  rec(rec, 0, 0);
  return MonomialIdeal(std::move(ring), std::move(gens));
}

BasicReduction plp_make_basic(const PlpType& t) {
  require_valid(t);
  const int64_t n = t.nvars();

  BasicReduction out{Monomial(t.a), PlpType{}, false};
  out.basic.a.assign(static_cast<size_t>(n), 0);
  out.basic.b.resize(static_cast<size_t>(n));
  out.basic.alpha.resize(static_cast<size_t>(n));
  out.basic.beta.resize(static_cast<size_t>(n));

  int64_t running = 0;
  for (int64_t i = 0; i < n; ++i) {
    running = checked_add(running, t.a[static_cast<size_t>(i)]);
    out.basic.b[static_cast<size_t>(i)] = t.b[static_cast<size_t>(i)] - t.a[static_cast<size_t>(i)];
    out.basic.alpha[static_cast<size_t>(i)] = t.alpha[static_cast<size_t>(i)] - running;
    out.basic.beta[static_cast<size_t>(i)] = t.beta[static_cast<size_t>(i)] - running;
  }
  const int64_t d = out.basic.beta.back();
  if (d < 0 || !tighten_windows(out.basic.alpha, out.basic.beta, d) ||
      out.basic.alpha.back() != d) {
    out.plainly_infeasible = true;
    return out;
  }
  // restore the first-coordinate conventions after tightening
  out.basic.b.front() = std::min(out.basic.b.front(), out.basic.beta.front());
  out.basic.beta.front() = out.basic.b.front();
  if (out.basic.alpha.front() > out.basic.beta.front()) out.plainly_infeasible = true;
  return out;
}

bool plp_feasible(const PlpType& t) {
  require_valid(t);
  PlpType basic = t;
  if (!t.is_basic()) {
    BasicReduction red = plp_make_basic(t);
    if (red.plainly_infeasible) return false;
    basic = red.basic;
  }
  Tightened tt = tighten(basic);
  if (tt.crossed) return false;
  return feasible_tightened(tt.b, tt.alpha, tt.beta);
}

std::optional<Monomial> plp_witness(const PlpType& t) {
  require_valid(t);
  PlpType basic = t;
  std::vector<int64_t> shift(static_cast<size_t>(t.nvars()), 0);
  if (!t.is_basic()) {
    BasicReduction red = plp_make_basic(t);
    if (red.plainly_infeasible) return std::nullopt;
    basic = red.basic;
    shift = t.a;
  }
  Tightened tt = tighten(basic);
  if (tt.crossed || !feasible_tightened(tt.b, tt.alpha, tt.beta)) return std::nullopt;

  // greedy prefix maximization: u_1 = beta_1, then each prefix sum is the
  // least of the caps beta_i + b_{i+1} + ... + b_{j+1}
  const int64_t n = static_cast<int64_t>(tt.b.size());
  std::vector<int64_t> u(static_cast<size_t>(n), 0);
  int64_t prefix = tt.beta[0];
  u[0] = tt.beta[0];
  for (int64_t j = 1; j < n; ++j) {
    int64_t cap = tt.beta[static_cast<size_t>(j)];
    int64_t tail = 0;
    for (int64_t i = j; i-- > 0;) {
      tail = checked_add(tail, tt.b[static_cast<size_t>(i + 1)]);
      cap = std::min(cap, checked_add(tt.beta[static_cast<size_t>(i)], tail));
    }
    u[static_cast<size_t>(j)] = cap - prefix;
    prefix = cap;
  }
  for (int64_t j = 0; j < n; ++j)
    u[static_cast<size_t>(j)] = checked_add(u[static_cast<size_t>(j)], shift[static_cast<size_t>(j)]);
  return Monomial(std::move(u));
}

std::optional<PlpType> plp_soc_type(const PlpType& t) {
  require_valid(t);
  require_basic(t);
  const int64_t n = t.nvars();
  if (n < 2) throw unsupported_error("socle type needs at least two variables");
  if (t.degree() == 0) return std::nullopt;
  for (int64_t v : t.b)
    if (v == 0) return std::nullopt;

  PlpType soc;
  soc.a.assign(static_cast<size_t>(n), 0);
  soc.b = t.b;
  for (auto& v : soc.b) v -= 1;
  soc.alpha = t.alpha;
  soc.alpha.back() -= 1;
  soc.beta = t.beta;
  for (auto& v : soc.beta) v -= 1;
  return soc;
}

PlpType plp_power_type(const PlpType& t, int64_t m) {
  require_valid(t);
  require_basic(t);
  if (m < 1) throw domain_error("power must be at least 1");
  PlpType out = t;
  for (auto& v : out.b) v = checked_mul(v, m);
  for (auto& v : out.alpha) v = checked_mul(v, m);
  for (auto& v : out.beta) v = checked_mul(v, m);
  return out;
}

bool plp_depth_zero(const PlpType& t) {
  require_valid(t);
  require_basic(t);
  if (!plp_feasible(t)) throw domain_error("depth criterion needs a feasible type");
  const int64_t n = t.nvars();
  const int64_t d = t.degree();

  for (int64_t v : t.b)
    if (v < 1) return false;
  for (int64_t i = 1; i + 1 < n; ++i)
    if (t.alpha[static_cast<size_t>(i)] > t.beta[static_cast<size_t>(i)] - 1) return false;
  for (int64_t i = 0; i + 1 < n; ++i) {
    int64_t cap = t.beta[static_cast<size_t>(i)];
    for (int64_t j = i; j + 1 < n; ++j) {
      if (j > i) cap = checked_add(cap, t.b[static_cast<size_t>(j)]);
      if (cap < checked_add(t.alpha[static_cast<size_t>(j)], j - i + 1)) return false;
    }
  }
  for (int64_t i = 0; i < n; ++i) {
    int64_t cap = t.beta[static_cast<size_t>(i)];
    for (int64_t j = i + 1; j < n; ++j) cap = checked_add(cap, t.b[static_cast<size_t>(j)]);
    if (cap < checked_add(d, n - i - 1)) return false;
  }
  return true;
}

bool plp_socstar_nonzero(const PlpType& t) {
  require_valid(t);
  require_basic(t);
  if (!plp_feasible(t)) throw domain_error("criterion needs a feasible type");
  const int64_t n = t.nvars();

  for (int64_t v : t.b)
    if (v < 1) return false;
  for (int64_t i = 1; i + 1 < n; ++i)
    if (t.alpha[static_cast<size_t>(i)] > t.beta[static_cast<size_t>(i)] - 1) return false;
  for (int64_t i = 0; i < n; ++i) {
    int64_t cap = t.beta[static_cast<size_t>(i)];
    for (int64_t j = i + 1; j < n; ++j) {
      cap = checked_add(cap, t.b[static_cast<size_t>(j)]);
      if (cap <= t.alpha[static_cast<size_t>(j)]) return false;
    }
  }
  return true;
}

bool plp_socstar_degree_check(const PlpType& t, int64_t k_max) {
  require_valid(t);
  require_basic(t);
  if (!plp_feasible(t)) throw domain_error("degree check needs a feasible type");
  const int64_t n = t.nvars();
  MonomialIdeal ideal = plp_gens(t);
  if (ideal.is_zero() || ideal.is_unit()) return true;
  for (int64_t k = std::max<int64_t>(1, n - 1); k <= k_max; ++k)
    if (!socstar_containment_check(ideal, k)) return false;
  return true;
}

std::optional<PlpType> veronese_to_plp(const VeroneseType& v) {
  const int64_t n = static_cast<int64_t>(v.a.size());
  if (n == 0) throw domain_error("empty Veronese type");
  if (v.d < 0) throw domain_error("negative degree");
  for (int64_t x : v.a)
    if (x < 0) throw domain_error("entries must be non-negative");

  int64_t total = 0;
  for (int64_t x : v.a) total = checked_add(total, x);
  if (total < v.d) return std::nullopt;

  PlpType t;
  t.a.assign(static_cast<size_t>(n), 0);
  t.b.resize(static_cast<size_t>(n));
  t.alpha.assign(static_cast<size_t>(n), 0);
  t.alpha.back() = v.d;
  t.beta.resize(static_cast<size_t>(n));
  int64_t prefix = 0;
  for (int64_t i = 0; i < n; ++i) {
    prefix = checked_add(prefix, v.a[static_cast<size_t>(i)]);
    t.b[static_cast<size_t>(i)] = std::min(v.a[static_cast<size_t>(i)], v.d);
    t.beta[static_cast<size_t>(i)] = std::min(prefix, v.d);
  }
  return t;
}

int64_t veronese_rank(const VeroneseType& v, const std::vector<int64_t>& subset) {
  if (v.d < 0) throw domain_error("negative degree");
  int64_t total = 0;
  for (int64_t i : subset) {
    if (i < 0 || i >= static_cast<int64_t>(v.a.size()))
      throw domain_error("subset index out of range");
    if (v.a[static_cast<size_t>(i)] < 0) throw domain_error("entries must be non-negative");
    total = checked_add(total, v.a[static_cast<size_t>(i)]);
  }
  return std::min(total, v.d);
}

EquigenReport veronese_equigen(const VeroneseType& v) {
  const int64_t n = static_cast<int64_t>(v.a.size());
  if (n == 0) throw domain_error("empty Veronese type");
  if (n > kMaxSubsetScanVars)
    throw unsupported_error("subset scan supports at most " +
                            std::to_string(kMaxSubsetScanVars) + " variables");
  int64_t total = 0;
  for (int64_t x : v.a) {
    if (x < 1) throw domain_error("criterion needs a_i >= 1 for all i");
    total = checked_add(total, x);
  }
  if (total <= v.d) throw domain_error("criterion needs sum(a) > d");

  EquigenReport report;
  const int64_t surplus = total - v.d;
  report.k0 = std::max<int64_t>(1, (n - 1 + surplus - 1) / surplus);
  report.depth_zero_at_first_power = total - v.d >= n - 1;

  report.equi_generated = true;
  for (int64_t mask = 1; mask < (int64_t(1) << n); ++mask) {
    int64_t sum = 0, size = 0;
    for (int64_t i = 0; i < n; ++i)
      if (mask & (int64_t(1) << i)) {
        sum += v.a[static_cast<size_t>(i)];
        ++size;
      }
    if (sum <= v.d) continue;
    if (checked_mul(report.k0, sum - v.d) < size - 1) {
      report.equi_generated = false;
      std::vector<int64_t> set;
      for (int64_t i = 0; i < n; ++i)
        if (mask & (int64_t(1) << i)) set.push_back(i);
      report.violating_sets.push_back(std::move(set));
    }
  }
  return report;
}

ExchangeResult exchange_check(const MonomialIdeal& ideal) {
  if (!ideal.is_zero() && !ideal.generated_degree())
    throw unsupported_error("exchange check needs an equigenerated ideal");
  const auto& gens = ideal.gens();
  const int64_t n = ideal.ring().nvars();

  auto is_gen = [&](const Monomial& m) {
    return std::binary_search(gens.begin(), gens.end(), m);
  };

  for (const auto& v : gens)
    for (const auto& u : gens) {
      if (u == v) continue;
      for (int64_t i = 0; i < n; ++i) {
        if (u.exponent(i) <= v.exponent(i)) continue;
        bool fixed = false;
        for (int64_t j = 0; j < n && !fixed; ++j) {
          if (u.exponent(j) >= v.exponent(j)) continue;
          std::vector<int64_t> e = u.exponents();
          e[static_cast<size_t>(i)] -= 1;
          e[static_cast<size_t>(j)] += 1;
          if (is_gen(Monomial(std::move(e)))) fixed = true;
        }
        if (!fixed) return ExchangeResult{false, std::make_tuple(u, v, i)};
      }
    }
  return ExchangeResult{true, std::nullopt};
}

}  // namespace soclekit
