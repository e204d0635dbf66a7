#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "soclekit/errors.hpp"
#include "soclekit/graph.hpp"
#include "soclekit/socle.hpp"
#include "test_support.hpp"

using namespace soclekit;
using namespace testkit;

TEST_CASE("edge ideal") {
  MonomialIdeal tri = edge_ideal(cycle_graph(3));
  CHECK(tri.gens() == std::vector<Monomial>{mono({0, 1, 1}), mono({1, 0, 1}), mono({1, 1, 0})});
  CHECK(edge_ideal(SimpleGraph(4, {})).is_zero());
  CHECK(edge_ideal(figure2_graph()).gen_count() == 10);
}

TEST_CASE("graph analysis") {
  GraphAnalysis c4 = analyze_graph(cycle_graph(4));
  CHECK(c4.is_bipartite);
  CHECK(c4.odd_cycles.empty());
  CHECK(c4.component_count == 1);

  SimpleGraph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(analyze_graph(two_triangles).component_count == 2);

  GraphAnalysis fig2 = analyze_graph(figure2_graph());
  CHECK_FALSE(fig2.is_bipartite);
  std::set<std::vector<int64_t>> cycles;
  for (auto c : fig2.odd_cycles) {
    std::sort(c.begin(), c.end());
    cycles.insert(c);
  }
  CHECK(cycles == std::set<std::vector<int64_t>>{{0, 1, 2}, {2, 3, 4}});
  CHECK(fig2.leaf_edges == std::vector<Edge>{{0, 6}, {1, 5}, {3, 7}, {4, 8}});

  // K4 has four triangles and three 4-cycles; only the odd ones are reported
  CHECK(analyze_graph(complete_graph(4)).odd_cycles.size() == 4);
}

TEST_CASE("odd cycle distance") {
  CHECK(odd_cycle_distance_ok(figure2_graph()));      // triangles share vertex 3
  CHECK_FALSE(odd_cycle_distance_ok(g1_graph()));     // triangles at distance 2
  CHECK(odd_cycle_distance_ok(cycle_graph(5)));       // single odd cycle
  CHECK(odd_cycle_distance_ok(cycle_graph(4)));       // no odd cycle at all
  SimpleGraph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK_THROWS_AS(odd_cycle_distance_ok(two_triangles), domain_error);
}

TEST_CASE("unicyclic info") {
  UnicyclicInfo c3 = unicyclic_info(cycle_graph(3));
  CHECK(c3.k == 1);
  CHECK(c3.e_star.empty());
  CHECK(c3.d_g == 2);
  CHECK(c3.u_g == mono({1, 1, 1}));

  UnicyclicInfo c5 = unicyclic_info(cycle_graph(5));
  CHECK(c5.k == 2);
  CHECK(c5.d_g == 3);
  CHECK(c5.u_g == mono({1, 1, 1, 1, 1}));

  // C5 with pendant path 1-6-7: {1,6} counts, {6,7} is a leaf
  SimpleGraph pend(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
  UnicyclicInfo info = unicyclic_info(pend);
  CHECK(info.e_star == std::vector<Edge>{{0, 5}});
  CHECK(info.d_g == 4);
  CHECK(info.u_g == mono({2, 1, 1, 1, 1, 1, 0}));

  CHECK_THROWS_AS(unicyclic_info(cycle_graph(4)), domain_error);   // even cycle
  CHECK_THROWS_AS(unicyclic_info(path_graph(4)), domain_error);    // tree
  SimpleGraph off(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK_THROWS_AS(unicyclic_info(off), domain_error);              // disconnected
  SimpleGraph chord(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  CHECK_THROWS_AS(unicyclic_info(chord), domain_error);            // six edges
}

TEST_CASE("unicyclic socle formula") {
  CHECK(socle_oracle_unicyclic(cycle_graph(3), 2) == std::vector<Monomial>{mono({1, 1, 1})});
  CHECK(socle_oracle_unicyclic(cycle_graph(3), 3) ==
        std::vector<Monomial>{mono({1, 2, 2}), mono({2, 1, 2}), mono({2, 2, 1})});
  // below d_G the formula yields nothing
  SimpleGraph pend(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
  for (int64_t m = 1; m < 4; ++m) CHECK(socle_oracle_unicyclic(pend, m).empty());

  // equivalence with the production path on a few unicyclic graphs
  std::vector<SimpleGraph> corpus = {
      cycle_graph(3),
      cycle_graph(5),
      pend,
      SimpleGraph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}),
      SimpleGraph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}),
  };
  for (const auto& g : corpus) {
    MonomialIdeal ideal = edge_ideal(g);
    const int64_t d_g = unicyclic_info(g).d_g;
    for (int64_t m = 1; m <= d_g + 2; ++m)
      CHECK(socle_oracle_unicyclic(g, m) == socle_basis(ideal, m).elements);
  }
}

TEST_CASE("unicyclic socle elements have degree 2m-1 and carry the cycle") {
  SimpleGraph pend(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
  UnicyclicInfo info = unicyclic_info(pend);
  Monomial cycle_product = mono({1, 1, 1, 1, 1, 0, 0});
  MonomialIdeal ideal = edge_ideal(pend);
  for (int64_t m = info.d_g; m <= info.d_g + 2; ++m)
    for (const auto& u : socle_basis(ideal, m).elements) {
      CHECK(u.degree() == 2 * m - 1);
      CHECK(cycle_product.divides(u));
    }
}

TEST_CASE("free rank one module check") {
  CHECK(free_rank1_check(cycle_graph(3), 2));
  // the socle component sizes along the way are 1, 3, 6
  MonomialIdeal tri = edge_ideal(cycle_graph(3));
  CHECK(socle_basis(tri, 2).elements.size() == 1);
  CHECK(socle_basis(tri, 3).elements.size() == 3);
  CHECK(socle_basis(tri, 4).elements.size() == 6);

  SimpleGraph pend(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}});
  CHECK(free_rank1_check(pend, 1));

  SimpleGraph chord(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  CHECK_THROWS_AS(free_rank1_check(chord, 2), domain_error);
}

TEST_CASE("spanning unicyclic nonbipartite subgraphs") {
  SimpleGraph fig2_graph = figure2_graph();
  auto fig2 = spanning_unicyclic_nonbipartite(fig2_graph);
  CHECK(fig2.size() == 6);
  // each drops exactly one triangle edge
  std::set<Edge> triangle_edges{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  std::set<Edge> removed;
  for (const auto& sub : fig2) {
    std::set<Edge> chosen(sub.begin(), sub.end());
    for (const auto& e : fig2_graph.edges()) {
      if (!chosen.count(e)) {
        CHECK(triangle_edges.count(e) == 1);
        removed.insert(e);
      }
    }
    CHECK(chosen.size() == 9);
  }
  CHECK(removed == triangle_edges);

  auto c3 = spanning_unicyclic_nonbipartite(cycle_graph(3));
  CHECK(c3.size() == 1);
  CHECK(c3[0] == cycle_graph(3).edges());

  CHECK(spanning_unicyclic_nonbipartite(cycle_graph(4)).empty());
}

TEST_CASE("depth stability bound") {
  DstabBoundReport fig2 = dstab_bound(figure2_graph());
  CHECK(fig2.bound == 4);

  DstabBoundReport k5 = dstab_bound(complete_graph(5));
  CHECK(k5.bound == 2);
  CHECK(k5.comparison_bound == 3);  // the bound through leaf counts is weaker

  CHECK(dstab_bound(cycle_graph(3)).bound == 2);
  CHECK_THROWS_AS(dstab_bound(cycle_graph(4)), domain_error);
}

TEST_CASE("depth stability from the socle") {
  CHECK(dstab_from_socle(figure2_graph(), 5) == std::optional<int64_t>(3));
  CHECK(dstab_from_socle(complete_graph(3), 3) == std::optional<int64_t>(2));
  CHECK(dstab_from_socle(cycle_graph(5), 4) == std::optional<int64_t>(3));
  CHECK(dstab_from_socle(cycle_graph(7), 2) == std::nullopt);  // first hit is at power 4
  CHECK_THROWS_AS(dstab_from_socle(cycle_graph(4), 3), domain_error);

  // never better than the subgraph bound
  for (const SimpleGraph& g : {figure2_graph(), complete_graph(5), cycle_graph(5)}) {
    auto from_socle = dstab_from_socle(g, 6);
    REQUIRE(from_socle.has_value());
    CHECK(*from_socle <= dstab_bound(g).bound);
  }
}

TEST_CASE("distance-one odd cycles force degree 2m-1") {
  for (const SimpleGraph& g : {figure2_graph(), complete_graph(5), cycle_graph(5)}) {
    REQUIRE(odd_cycle_distance_ok(g));
    MonomialIdeal ideal = edge_ideal(g);
    for (int64_t m = 1; m <= 4; ++m)
      for (int64_t deg : degree_profile(ideal, m)) CHECK(deg == 2 * m - 1);
  }
}
