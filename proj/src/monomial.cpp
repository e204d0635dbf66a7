#include "soclekit/monomial.hpp"

#include "soclekit/errors.hpp"

namespace soclekit {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw overflow_error("exponent arithmetic overflow");
  return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw overflow_error("exponent arithmetic overflow");
  return out;
}

Monomial::Monomial(std::vector<int64_t> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw domain_error("monomial needs at least one variable");
  for (int64_t e : exps_)
    if (e < 0) throw domain_error("negative exponent");
}

Monomial Monomial::one(int64_t nvars) { return Monomial(std::vector<int64_t>(static_cast<size_t>(nvars), 0)); }

Monomial Monomial::variable(int64_t nvars, int64_t index) {
  if (index < 0 || index >= nvars) throw domain_error("variable index out of range");
  std::vector<int64_t> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(index)] = 1;
  return Monomial(std::move(e));
}

int64_t Monomial::degree() const {
  int64_t d = 0;
  for (int64_t e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_one() const {
  for (int64_t e : exps_)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  std::vector<int64_t> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) e[i] = checked_add(exps_[i], m.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int64_t i) const {
  std::vector<int64_t> e = exps_;
  e[static_cast<size_t>(i)] = checked_add(e[static_cast<size_t>(i)], 1);
  return Monomial(std::move(e));
}

Monomial Monomial::lcm_with(const Monomial& m) const {
  std::vector<int64_t> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], m.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::colon_by(const Monomial& g) const {
  std::vector<int64_t> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) e[i] = std::max<int64_t>(exps_[i] - g.exps_[i], 0);
  return Monomial(std::move(e));
}

std::string Monomial::str(const Ring& ring) const {
  std::string out;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(static_cast<int64_t>(i));
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace soclekit
