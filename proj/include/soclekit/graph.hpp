#ifndef SOCLEKIT_GRAPH_HPP
#define SOCLEKIT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "soclekit/ideal.hpp"

namespace soclekit {

using Edge = std::pair<int64_t, int64_t>;  // 0-based, first < second

class SimpleGraph {
public:
  SimpleGraph(int64_t vertex_count, std::vector<Edge> edges);

  int64_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }

  std::vector<std::vector<int64_t>> adjacency() const;
  std::vector<int64_t> degrees() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int64_t n_;
  std::vector<Edge> edges_;
};

struct GraphAnalysis {
  int64_t component_count = 0;
  std::vector<int64_t> component_of;          // per vertex
  bool is_bipartite = false;
  std::vector<std::vector<int64_t>> odd_cycles;  // vertex lists in cycle order
  std::vector<Edge> leaf_edges;               // an endpoint has degree 1
};

struct UnicyclicInfo {
  std::vector<int64_t> cycle_vertices;  // the odd cycle, in cycle order
  int64_t k = 0;                        // cycle length 2k+1
  std::vector<Edge> e_star;             // non-cycle edges that are not leaves
  int64_t d_g = 0;                      // |e_star| + k + 1
  Monomial u_g;                         // cycle product times the e_star edges
};

struct DstabBoundReport {
  int64_t bound = 0;             // min d_H over spanning unicyclic nonbipartite subgraphs
  int64_t comparison_bound = 0;  // |V| - (leaf edge count) - k + 1, 2k-1 the longest odd cycle
};

MonomialIdeal edge_ideal(const SimpleGraph& graph);

GraphAnalysis analyze_graph(const SimpleGraph& graph, int64_t max_odd_cycles = 100000);

// Every pair of odd cycles at vertex-set distance <= 1. Requires connectivity.
bool odd_cycle_distance_ok(const SimpleGraph& graph);

// Requires a connected graph with |E| = |V| whose unique cycle is odd.
UnicyclicInfo unicyclic_info(const SimpleGraph& graph);

// All monomials (cycle product) * prod e^{m_e} with every non-leaf non-cycle
// edge used, multiplicities >= 1 summing to m - k - 1.
std::vector<Monomial> socle_oracle_unicyclic(const SimpleGraph& graph, int64_t m);

// Verifies that the socle module of the edge ideal is free of rank one over
// the fiber cone: empty below d_G, the power-(d_G + r) component is u_G times
// the generators of I^r for r <= extra_powers, and u_G is the one minimal
// module generator.
bool free_rank1_check(const SimpleGraph& graph, int64_t extra_powers);

std::vector<std::vector<Edge>> spanning_unicyclic_nonbipartite(const SimpleGraph& graph);

DstabBoundReport dstab_bound(const SimpleGraph& graph);

// Least m <= max_power with a nonzero power-m socle; nullopt if none found.
// Only defined for connected nonbipartite graphs.
std::optional<int64_t> dstab_from_socle(const SimpleGraph& graph, int64_t max_power);

}  // namespace soclekit

#endif
