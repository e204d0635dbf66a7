#ifndef SOCLEKIT_MONOMIAL_HPP
#define SOCLEKIT_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "soclekit/ring.hpp"

namespace soclekit {

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// Exponent vector over a fixed variable set. Entries are non-negative 64-bit
// integers with checked arithmetic. The default ordering is lexicographic on
// the exponent vector, which is also the canonical generator order.
class Monomial {
public:
  explicit Monomial(std::vector<int64_t> exponents);

  static Monomial one(int64_t nvars);
  static Monomial variable(int64_t nvars, int64_t index);

  int64_t nvars() const { return static_cast<int64_t>(exps_.size()); }
  int64_t exponent(int64_t i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<int64_t>& exponents() const { return exps_; }
  int64_t degree() const;
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial times_variable(int64_t i) const;
  Monomial lcm_with(const Monomial& m) const;
  // Componentwise max(e_i - g_i, 0), i.e. this / gcd(this, g).
  Monomial colon_by(const Monomial& g) const;

  std::string str(const Ring& ring) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<int64_t> exps_;
};

}  // namespace soclekit

#endif
