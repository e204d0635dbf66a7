#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>

#include "soclekit/errors.hpp"
#include "soclekit/ideal.hpp"
#include "soclekit/parallel.hpp"
#include "test_support.hpp"

using namespace soclekit;
using namespace testkit;

namespace {

MonomialIdeal triangle_ideal() { return ideal_of(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

}  // namespace

TEST_CASE("monomial basics") {
  Monomial m = mono({2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK(m.str(Ring(3)) == "x1^2*x3");
  CHECK(Monomial::one(3).str(Ring(3)) == "1");
  CHECK(mono({1, 1, 0}).divides(mono({1, 2, 0})));
  CHECK_FALSE(mono({1, 1, 1}).divides(mono({1, 2, 0})));
  CHECK(mono({1, 0, 2}).lcm_with(mono({0, 3, 1})) == mono({1, 3, 2}));
  CHECK(mono({3, 1, 0}).colon_by(mono({1, 2, 0})) == mono({2, 0, 0}));
  CHECK_THROWS_AS(Monomial(std::vector<int64_t>{-1, 0}), domain_error);
}

TEST_CASE("checked arithmetic overflows loudly") {
  const int64_t big = std::numeric_limits<int64_t>::max() - 1;
  Monomial huge = mono({big, 0});
  CHECK_THROWS_AS(huge.times(mono({2, 0})), overflow_error);
  CHECK_THROWS_AS(mono({big, big}).degree(), overflow_error);
}

TEST_CASE("minimalize canonicalizes") {
  Ring ring(2);
  // {x1, x1*x2} -> {x1}
  MonomialIdeal a = minimalize(ring, {mono({1, 0}), mono({1, 1})});
  CHECK(a.gens() == std::vector<Monomial>{mono({1, 0})});

  MonomialIdeal z = minimalize(ring, {});
  CHECK(z.is_zero());

  // duplicate and redundant generators in any order give the same ideal
  TestRng rng(11);
  std::vector<Monomial> raw;
  for (int i = 0; i < 40; ++i) raw.push_back(mono({rng.next(0, 3), rng.next(0, 3)}));
  MonomialIdeal first = minimalize(ring, raw);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(raw.begin(), raw.end(), rng.engine);
    CHECK(minimalize(ring, raw) == first);
  }
  // idempotent
  CHECK(minimalize(ring, first.gens()) == first);

  // brute-force oracle agreement
  std::vector<oracle::Row> rows;
  for (const auto& m : raw) rows.push_back(m.exponents());
  CHECK(to_monomials(oracle::minimalize_bruteforce(rows)) == first.gens());
}

TEST_CASE("pairwise products of the triangle ideal minimalize to its square") {
  MonomialIdeal tri = triangle_ideal();
  std::vector<Monomial> products;
  for (const auto& g : tri.gens())
    for (const auto& h : tri.gens()) products.push_back(g.times(h));
  CHECK(products.size() == 9);
  MonomialIdeal sq = minimalize(tri.ring(), products);
  CHECK(sq.gen_count() == 6);
  CHECK(sq == power(tri, 2));
  CHECK(sq.gens() == std::vector<Monomial>{mono({0, 2, 2}), mono({1, 1, 2}), mono({1, 2, 1}),
                                           mono({2, 0, 2}), mono({2, 1, 1}), mono({2, 2, 0})});
}

TEST_CASE("contains") {
  MonomialIdeal p = ideal_of(3, {{1, 1, 0}});
  CHECK(p.contains(mono({1, 1, 1})));
  CHECK_FALSE(p.contains(mono({1, 0, 1})));
  CHECK_FALSE(MonomialIdeal::zero(Ring(3)).contains(mono({5, 5, 5})));
  // all generators of I(C3)^2 have degree 4
  CHECK_FALSE(power(triangle_ideal(), 2).contains(mono({1, 1, 1})));
  CHECK_THROWS_AS(p.contains(mono({1, 0})), dimension_mismatch);
}

TEST_CASE("multiply identities") {
  MonomialIdeal tri = triangle_ideal();
  CHECK(multiply(tri, MonomialIdeal::unit(tri.ring())) == tri);
  CHECK(multiply(tri, MonomialIdeal::zero(tri.ring())).is_zero());
  CHECK(multiply(tri, tri) == power(tri, 2));
  CHECK_THROWS_AS(multiply(tri, ideal_of(2, {{1, 0}})), dimension_mismatch);
}

TEST_CASE("power") {
  MonomialIdeal tri = triangle_ideal();
  CHECK(power(tri, 0).is_unit());
  CHECK(power(MonomialIdeal::zero(Ring(2)), 0).is_unit());
  CHECK(power(tri, 2).gen_count() == 6);
  CHECK_THROWS_AS(power(tri, -1), domain_error);

  // naive oracle agreement for small powers
  for (int64_t m = 1; m <= 3; ++m)
    CHECK(power(tri, m).gens() == to_monomials(oracle::power_naive(tri, m)));
}

TEST_CASE("power is multiplicative over exponent sums") {
  std::vector<MonomialIdeal> corpus = {
      triangle_ideal(),
      ideal_of(2, {{3, 0}, {1, 1}}),
      ideal_of(3, {{2, 0, 0}, {0, 1, 1}, {1, 1, 0}}),
      ideal_of(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}),
  };
  for (const auto& ideal : corpus)
    for (int64_t a = 0; a <= 3; ++a)
      for (int64_t b = 0; a + b <= 3; ++b)
        CHECK(multiply(power(ideal, a), power(ideal, b)) == power(ideal, a + b));
}

TEST_CASE("colon by a monomial") {
  // (x1^3 : x1) = (x1^2)
  CHECK(colon_monomial(ideal_of(1, {{3}}), mono({1})) == ideal_of(1, {{2}}));
  // (J : 1) = J
  MonomialIdeal tri = triangle_ideal();
  CHECK(colon_monomial(tri, Monomial::one(3)) == tri);
  // ((x1x2, x2x3) : x2) = (x1, x3)
  CHECK(colon_monomial(ideal_of(3, {{1, 1, 0}, {0, 1, 1}}), mono({0, 1, 0})) ==
        ideal_of(3, {{1, 0, 0}, {0, 0, 1}}));

  // membership oracle: u in (J : g) iff u*g in J
  TestRng rng(5);
  MonomialIdeal j = ideal_of(3, {{2, 1, 0}, {0, 0, 3}, {1, 1, 1}});
  Monomial g = mono({1, 0, 1});
  MonomialIdeal q = colon_monomial(j, g);
  for (int trial = 0; trial < 200; ++trial) {
    Monomial u = mono({rng.next(0, 4), rng.next(0, 4), rng.next(0, 4)});
    CHECK(q.contains(u) == j.contains(u.times(g)));
  }
}

TEST_CASE("intersection") {
  MonomialIdeal tri = triangle_ideal();
  CHECK(intersect(tri, MonomialIdeal::unit(tri.ring())) == tri);
  CHECK(intersect(ideal_of(2, {{1, 0}}), ideal_of(2, {{0, 1}})) == ideal_of(2, {{1, 1}}));
  CHECK(intersect(tri, MonomialIdeal::zero(tri.ring())).is_zero());

  // membership is the pointwise AND, on a random sample
  TestRng rng(7);
  MonomialIdeal a = ideal_of(3, {{2, 0, 1}, {0, 3, 0}});
  MonomialIdeal b = ideal_of(3, {{1, 1, 0}, {0, 0, 2}});
  MonomialIdeal both = intersect(a, b);
  for (int trial = 0; trial < 100; ++trial) {
    Monomial u = mono({rng.next(0, 4), rng.next(0, 4), rng.next(0, 4)});
    CHECK(both.contains(u) == (a.contains(u) && b.contains(u)));
  }

  // commutative and associative
  MonomialIdeal c = ideal_of(3, {{1, 0, 2}});
  CHECK(intersect(a, b) == intersect(b, a));
  CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
}

TEST_CASE("colon by an ideal") {
  MonomialIdeal tri = triangle_ideal();
  CHECK(colon_ideal(tri, MonomialIdeal::unit(tri.ring())) == tri);
  CHECK(colon_ideal(power(tri, 2), tri) == tri);
  // ((x^2, xy) : (x)) = (x, y)
  CHECK(colon_ideal(ideal_of(2, {{2, 0}, {1, 1}}), ideal_of(2, {{1, 0}})) ==
        ideal_of(2, {{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(colon_ideal(tri, MonomialIdeal::zero(tri.ring())), domain_error);
}

TEST_CASE("colon by the maximal ideal") {
  // ((x1, x2) : m) = (1)
  CHECK(colon_maximal(ideal_of(2, {{1, 0}, {0, 1}})).is_unit());
  // ((x1) : m) = (x1) in two variables
  CHECK(colon_maximal(ideal_of(2, {{1, 0}})) == ideal_of(2, {{1, 0}}));
  CHECK(colon_maximal(MonomialIdeal::zero(Ring(2))).is_zero());
  CHECK(colon_maximal(MonomialIdeal::unit(Ring(2))).is_unit());

  // (I(C3)^2 : m) picks up x1x2x3, which is not in I(C3)^2
  MonomialIdeal sq = power(triangle_ideal(), 2);
  MonomialIdeal cm = colon_maximal(sq);
  CHECK(cm.contains(mono({1, 1, 1})));
  CHECK_FALSE(sq.contains(mono({1, 1, 1})));

  // agreement with the spec formula: fold of the n monomial colons
  std::vector<MonomialIdeal> corpus = {
      sq,
      triangle_ideal(),
      ideal_of(2, {{2, 0}, {1, 1}}),
      ideal_of(3, {{2, 1, 0}, {0, 0, 3}, {1, 1, 1}}),
      power(ideal_of(2, {{1, 0}, {0, 1}}), 3),
  };
  for (const auto& j : corpus) {
    const int64_t n = j.ring().nvars();
    MonomialIdeal folded = colon_monomial(j, Monomial::variable(n, 0));
    for (int64_t i = 1; i < n; ++i)
      folded = intersect(folded, colon_monomial(j, Monomial::variable(n, i)));
    CHECK(colon_maximal(j) == folded);
  }
}

TEST_CASE("colon_maximal membership property") {
  TestRng rng(13);
  std::vector<MonomialIdeal> corpus = {
      power(triangle_ideal(), 2),
      ideal_of(3, {{2, 1, 0}, {0, 0, 3}, {1, 1, 1}}),
      ideal_of(2, {{3, 0}, {1, 2}}),
  };
  for (const auto& j : corpus) {
    const int64_t n = j.ring().nvars();
    MonomialIdeal cm = colon_maximal(j);
    CHECK(cm.contains_ideal(j));
    int64_t max_exp = 0;
    for (const auto& g : j.gens())
      for (int64_t i = 0; i < n; ++i) max_exp = std::max(max_exp, g.exponent(i));
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int64_t> e(static_cast<size_t>(n));
      for (auto& v : e) v = rng.next(0, max_exp + 1);
      Monomial u = mono(e);
      bool all = true;
      for (int64_t i = 0; i < n && all; ++i)
        if (!j.contains(u.times_variable(i))) all = false;
      CHECK(cm.contains(u) == all);
    }
  }
}

TEST_CASE("socle extraction across membership table regimes") {
  // corner of a plane staircase: soc((x^a, y^b)) = x^{a-1} y^{b-1}
  CHECK(socle_monomials(ideal_of(2, {{300, 0}, {0, 300}})) ==
        std::vector<Monomial>{mono({299, 299})});
  // box above the byte-table cap: packed-bit table
  CHECK(socle_monomials(ideal_of(2, {{17320, 0}, {0, 17320}})) ==
        std::vector<Monomial>{mono({17319, 17319})});
  // box too large to materialize at all: generator-list fallback
  CHECK(socle_monomials(ideal_of(3, {{70000, 0, 0}, {0, 70000, 0}, {0, 0, 70000}})) ==
        std::vector<Monomial>{mono({69999, 69999, 69999})});
}

TEST_CASE("join of ideals over disjoint blocks") {
  MonomialIdeal tri = triangle_ideal();
  MonomialIdeal joined = join_disjoint(tri, tri);
  CHECK(joined.ring().nvars() == 6);
  CHECK(joined.gen_count() == 6);
  CHECK(joined.contains(mono({1, 1, 0, 0, 0, 0})));
  CHECK(joined.contains(mono({0, 0, 0, 1, 1, 0})));
  CHECK_FALSE(joined.contains(mono({1, 0, 0, 1, 0, 0})));
}

TEST_CASE("multiply gives identical results across thread counts") {
  MonomialIdeal fig2 = edge_ideal(figure2_graph());
  MonomialIdeal base = power(fig2, 3);
  set_max_threads(4);
  MonomialIdeal in_parallel = multiply(base, fig2);
  set_max_threads(1);
  MonomialIdeal serial = multiply(base, fig2);
  CHECK(in_parallel == serial);
}
