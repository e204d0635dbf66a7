#ifndef SOCLEKIT_IDEAL_HPP
#define SOCLEKIT_IDEAL_HPP

#include <optional>
#include <vector>

#include "soclekit/monomial.hpp"
#include "soclekit/ring.hpp"

namespace soclekit {

// A monomial ideal held by its unique minimal generating set, stored as a
// divisibility antichain in lexicographic order, so equality is structural.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(Ring ring);
  static MonomialIdeal unit(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int64_t gen_count() const { return static_cast<int64_t>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& u) const;
  bool contains_ideal(const MonomialIdeal& other) const;

  // The common degree of the generators if the ideal is equigenerated,
  // nullopt for the zero ideal or mixed generation degrees.
  std::optional<int64_t> generated_degree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_.nvars() == b.ring_.nvars() && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, int64_t exponent);
MonomialIdeal colon_monomial(const MonomialIdeal& numerator, const Monomial& g);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_ideal(const MonomialIdeal& numerator, const MonomialIdeal& denominator);
// (J : m) for the maximal ideal m = (x_1, ..., x_n).
MonomialIdeal colon_maximal(const MonomialIdeal& ideal);

// The monomials u with u not in J and x_i*u in J for every variable, i.e. the
// minimal generators of (J : m) that lie outside J. Sorted lexicographically.
std::vector<Monomial> socle_monomials(const MonomialIdeal& ideal);

// Embeds two ideals over disjoint variable blocks into the concatenated ring
// and returns the ideal they generate together.
MonomialIdeal join_disjoint(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace soclekit

#endif
