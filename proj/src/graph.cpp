#include "soclekit/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "soclekit/errors.hpp"
#include "soclekit/socle.hpp"

namespace soclekit {

namespace {

constexpr int64_t kMaxCycleVertices = 12;

std::vector<int64_t> component_labels(const SimpleGraph& g, int64_t* count_out) {
  const int64_t n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int64_t> comp(static_cast<size_t>(n), -1);
  int64_t count = 0;
  for (int64_t s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int64_t> stack{s};
    comp[static_cast<size_t>(s)] = count;
    while (!stack.empty()) {
      const int64_t v = stack.back();
      stack.pop_back();
      for (int64_t w : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  if (count_out) *count_out = count;
  return comp;
}

bool is_connected(const SimpleGraph& g) {
  int64_t count = 0;
  component_labels(g, &count);
  return count == 1;
}

bool two_colorable(const std::vector<std::vector<int64_t>>& adj) {
  const int64_t n = static_cast<int64_t>(adj.size());
  std::vector<int> color(static_cast<size_t>(n), -1);
  for (int64_t s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] >= 0) continue;
    color[static_cast<size_t>(s)] = 0;
    std::queue<int64_t> q;
    q.push(s);
    while (!q.empty()) {
      const int64_t v = q.front();
      q.pop();
      for (int64_t w : adj[static_cast<size_t>(v)]) {
        if (color[static_cast<size_t>(w)] < 0) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          q.push(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// All simple cycles, as vertex lists in cycle order: root-anchored DFS with
// every non-root vertex larger than the root, direction fixed by
// path[1] < path.back().
void enumerate_cycles(const SimpleGraph& g, int64_t max_count,
                      const std::function<void(const std::vector<int64_t>&)>& emit);

struct CycleSearch {
  const std::vector<std::vector<int64_t>>& adj;
  int64_t root;
  int64_t max_count;
  int64_t* found;
  std::vector<int64_t>* path;
  std::vector<char>* on_path;
  const std::function<void(const std::vector<int64_t>&)>& emit;

  void dfs(int64_t v) {
    for (int64_t w : adj[static_cast<size_t>(v)]) {
      if (w == root) {
        if (path->size() >= 3 && (*path)[1] < path->back()) {
          if (++*found > max_count) throw unsupported_error("cycle enumeration limit exceeded");
          emit(*path);
        }
        continue;
      }
      if (w < root || (*on_path)[static_cast<size_t>(w)]) continue;
      path->push_back(w);
      (*on_path)[static_cast<size_t>(w)] = 1;
      dfs(w);
      (*on_path)[static_cast<size_t>(w)] = 0;
      path->pop_back();
    }
  }
};

void enumerate_cycles(const SimpleGraph& g, int64_t max_count,
                      const std::function<void(const std::vector<int64_t>&)>& emit) {
  if (g.vertex_count() > kMaxCycleVertices)
    throw unsupported_error("cycle enumeration supports at most " +
                            std::to_string(kMaxCycleVertices) + " vertices");
  auto adj = g.adjacency();
  int64_t found = 0;
  for (int64_t root = 0; root < g.vertex_count(); ++root) {
    std::vector<int64_t> path{root};
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
    on_path[static_cast<size_t>(root)] = 1;
    CycleSearch search{adj, root, max_count, &found, &path, &on_path, emit};
    search.dfs(root);
  }
}

std::vector<std::vector<int64_t>> all_pairs_distance(const SimpleGraph& g) {
  const int64_t n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<std::vector<int64_t>> dist(static_cast<size_t>(n),
                                         std::vector<int64_t>(static_cast<size_t>(n), -1));
  for (int64_t s = 0; s < n; ++s) {
    auto& d = dist[static_cast<size_t>(s)];
    d[static_cast<size_t>(s)] = 0;
    std::queue<int64_t> q;
    q.push(s);
    while (!q.empty()) {
      const int64_t v = q.front();
      q.pop();
      for (int64_t w : adj[static_cast<size_t>(v)])
        if (d[static_cast<size_t>(w)] < 0) {
          d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

}  // namespace

SimpleGraph::SimpleGraph(int64_t vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ < 1) throw domain_error("graph needs at least one vertex");
  for (auto& e : edges) {
    if (e.first == e.second) throw domain_error("loops are not allowed");
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n_) throw domain_error("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

std::vector<std::vector<int64_t>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int64_t>> adj(static_cast<size_t>(n_));
  for (const auto& e : edges_) {
    adj[static_cast<size_t>(e.first)].push_back(e.second);
    adj[static_cast<size_t>(e.second)].push_back(e.first);
  }
  return adj;
}

std::vector<int64_t> SimpleGraph::degrees() const {
  std::vector<int64_t> deg(static_cast<size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++deg[static_cast<size_t>(e.first)];
    ++deg[static_cast<size_t>(e.second)];
  }
  return deg;
}

MonomialIdeal edge_ideal(const SimpleGraph& graph) {
  Ring ring(graph.vertex_count());
  std::vector<Monomial> gens;
  gens.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) {
    std::vector<int64_t> exps(static_cast<size_t>(graph.vertex_count()), 0);
    exps[static_cast<size_t>(e.first)] = 1;
    exps[static_cast<size_t>(e.second)] = 1;
    gens.push_back(Monomial(std::move(exps)));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

GraphAnalysis analyze_graph(const SimpleGraph& graph, int64_t max_odd_cycles) {
  GraphAnalysis out;
  out.component_of = component_labels(graph, &out.component_count);
  out.is_bipartite = two_colorable(graph.adjacency());

  const auto deg = graph.degrees();
  for (const auto& e : graph.edges())
    if (deg[static_cast<size_t>(e.first)] == 1 || deg[static_cast<size_t>(e.second)] == 1)
      out.leaf_edges.push_back(e);

  if (!out.is_bipartite) {
    enumerate_cycles(graph, max_odd_cycles, [&](const std::vector<int64_t>& cycle) {
      if (cycle.size() % 2 == 1) out.odd_cycles.push_back(cycle);
    });
  }
  return out;
}

bool odd_cycle_distance_ok(const SimpleGraph& graph) {
  if (!is_connected(graph)) throw domain_error("odd cycle distance needs a connected graph");
  GraphAnalysis analysis = analyze_graph(graph);
  if (analysis.odd_cycles.size() < 2) return true;
  const auto dist = all_pairs_distance(graph);
  for (size_t a = 0; a < analysis.odd_cycles.size(); ++a)
    for (size_t b = a + 1; b < analysis.odd_cycles.size(); ++b) {
      int64_t best = -1;
      for (int64_t u : analysis.odd_cycles[a])
        for (int64_t v : analysis.odd_cycles[b]) {
          const int64_t d = dist[static_cast<size_t>(u)][static_cast<size_t>(v)];
          if (best < 0 || d < best) best = d;
        }
      if (best > 1) return false;
    }
  return true;
}

UnicyclicInfo unicyclic_info(const SimpleGraph& graph) {
  if (!is_connected(graph)) throw domain_error("unicyclic analysis needs a connected graph");
  if (graph.edge_count() != graph.vertex_count())
    throw domain_error("not unicyclic: edge count differs from vertex count");

  const int64_t n = graph.vertex_count();
  auto adj = graph.adjacency();

  // peel leaves; what remains is the unique cycle
  std::vector<int64_t> deg = graph.degrees();
  std::vector<char> removed(static_cast<size_t>(n), 0);
  std::queue<int64_t> q;
  for (int64_t v = 0; v < n; ++v)
    if (deg[static_cast<size_t>(v)] == 1) q.push(v);
  while (!q.empty()) {
    const int64_t v = q.front();
    q.pop();
    removed[static_cast<size_t>(v)] = 1;
    for (int64_t w : adj[static_cast<size_t>(v)])
      if (!removed[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1) q.push(w);
  }

  int64_t start = -1;
  for (int64_t v = 0; v < n; ++v)
    if (!removed[static_cast<size_t>(v)]) {
      start = v;
      break;
    }
  if (start < 0) throw domain_error("no cycle found");

  std::vector<int64_t> cycle{start};
  int64_t prev = -1, at = start;
  do {
    int64_t next = -1;
    for (int64_t w : adj[static_cast<size_t>(at)]) {
      if (removed[static_cast<size_t>(w)] || w == prev) continue;
      if (next < 0 || w < next) next = w;
    }
    prev = at;
    at = next;
    if (at != start) cycle.push_back(at);
  } while (at != start);

  if (cycle.size() % 2 == 0) throw domain_error("the unique cycle is even");

  UnicyclicInfo info{{}, 0, {}, 0, Monomial::one(n)};
  info.cycle_vertices = cycle;
  info.k = (static_cast<int64_t>(cycle.size()) - 1) / 2;

  std::set<Edge> cycle_edges;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int64_t a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    cycle_edges.insert({std::min(a, b), std::max(a, b)});
  }
  const auto gdeg = graph.degrees();
  for (const auto& e : graph.edges()) {
    if (cycle_edges.count(e)) continue;
    if (gdeg[static_cast<size_t>(e.first)] == 1 || gdeg[static_cast<size_t>(e.second)] == 1)
      continue;  // leaf
    info.e_star.push_back(e);
  }
  info.d_g = static_cast<int64_t>(info.e_star.size()) + info.k + 1;

  std::vector<int64_t> exps(static_cast<size_t>(n), 0);
  for (int64_t v : cycle) exps[static_cast<size_t>(v)] += 1;
  for (const auto& e : info.e_star) {
    exps[static_cast<size_t>(e.first)] += 1;
    exps[static_cast<size_t>(e.second)] += 1;
  }
  info.u_g = Monomial(std::move(exps));
  return info;
}

std::vector<Monomial> socle_oracle_unicyclic(const SimpleGraph& graph, int64_t m) {
  UnicyclicInfo info = unicyclic_info(graph);
  if (m < 1) throw domain_error("power must be at least 1");
  const int64_t n = graph.vertex_count();
  const int64_t budget = m - info.k - 1;
  if (budget < 0) return {};

  std::set<Edge> star(info.e_star.begin(), info.e_star.end());
  const auto& edges = graph.edges();

  std::vector<int64_t> base(static_cast<size_t>(n), 0);
  for (int64_t v : info.cycle_vertices) base[static_cast<size_t>(v)] += 1;

  std::set<Monomial> results;
  std::vector<int64_t> exps = base;
  // distribute the remaining budget over edges, at least one copy on E*
  auto place = [&](auto&& self, size_t idx, int64_t left) -> void {
    if (idx == edges.size()) {
      if (left == 0) results.insert(Monomial(exps));
      return;
    }
    const Edge& e = edges[idx];
    const int64_t lo = star.count(e) ? 1 : 0;
    if (lo > left) return;
    for (int64_t times = lo; times <= left; ++times) {
      exps[static_cast<size_t>(e.first)] += times;
      exps[static_cast<size_t>(e.second)] += times;
      self(self, idx + 1, left - times);
      exps[static_cast<size_t>(e.first)] -= times;
      exps[static_cast<size_t>(e.second)] -= times;
    }
  };
  place(place, 0, budget);
  return std::vector<Monomial>(results.begin(), results.end());
}

bool free_rank1_check(const SimpleGraph& graph, int64_t extra_powers) {
  UnicyclicInfo info = unicyclic_info(graph);  // throws unless unicyclic with odd cycle
  if (extra_powers < 0) throw domain_error("negative power bound");
  const MonomialIdeal ideal = edge_ideal(graph);
  const int64_t d_g = info.d_g;

  SocleModuleSummary summary = socle_module_mingens(ideal, d_g + extra_powers);

  for (int64_t m = 1; m < d_g; ++m)
    if (!summary.bases[static_cast<size_t>(m - 1)].elements.empty()) return false;

  MonomialIdeal pw = MonomialIdeal::unit(ideal.ring());  // I^0
  for (int64_t r = 0; r <= extra_powers; ++r) {
    std::set<Monomial> expected;
    for (const auto& v : pw.gens()) expected.insert(v.times(info.u_g));
    if (expected.size() != pw.gens().size()) return false;  // freeness: products collide
    const auto& got = summary.bases[static_cast<size_t>(d_g + r - 1)].elements;
    if (got.size() != expected.size() || !std::equal(got.begin(), got.end(), expected.begin()))
      return false;
    if (r < extra_powers) pw = multiply(pw, ideal);
  }

  int64_t min_gen_count = 0;
  for (int64_t k = 0; k < summary.max_power; ++k) {
    const auto& mins = summary.min_gens_by_fiber[static_cast<size_t>(k)];
    min_gen_count += static_cast<int64_t>(mins.size());
    if (!mins.empty() && (k != d_g - 1 || mins.size() != 1 || mins[0] != info.u_g)) return false;
  }
  return min_gen_count == 1;
}

std::vector<std::vector<Edge>> spanning_unicyclic_nonbipartite(const SimpleGraph& graph) {
  if (!is_connected(graph)) throw domain_error("spanning subgraph search needs a connected graph");
  const int64_t n = graph.vertex_count();
  const auto& edges = graph.edges();
  const int64_t m = static_cast<int64_t>(edges.size());

  std::vector<std::vector<Edge>> out;
  if (m < n) return out;

  std::vector<int64_t> chosen;
  auto check = [&]() {
    std::vector<Edge> sub;
    sub.reserve(chosen.size());
    for (int64_t idx : chosen) sub.push_back(edges[static_cast<size_t>(idx)]);
    SimpleGraph candidate(n, sub);
    if (!is_connected(candidate)) return;
    // connected with n edges means exactly one cycle; odd iff nonbipartite
    if (two_colorable(candidate.adjacency())) return;
    out.push_back(candidate.edges());
  };
  auto rec = [&](auto&& self, int64_t next) -> void {
    if (static_cast<int64_t>(chosen.size()) == n) {
      check();
      return;
    }
    const int64_t needed = n - static_cast<int64_t>(chosen.size());
    if (m - next < needed) return;
    for (int64_t i = next; i <= m - needed; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

DstabBoundReport dstab_bound(const SimpleGraph& graph) {
  if (!is_connected(graph)) throw domain_error("depth stability bound needs a connected graph");
  GraphAnalysis analysis = analyze_graph(graph);
  if (analysis.is_bipartite)
    throw domain_error("depth stability bound needs a nonbipartite graph");

  DstabBoundReport report;
  int64_t best = -1;
  for (const auto& sub : spanning_unicyclic_nonbipartite(graph)) {
    const int64_t d = unicyclic_info(SimpleGraph(graph.vertex_count(), sub)).d_g;
    if (best < 0 || d < best) best = d;
  }
  report.bound = best;

  int64_t longest_odd = 0;
  for (const auto& c : analysis.odd_cycles)
    longest_odd = std::max(longest_odd, static_cast<int64_t>(c.size()));
  const int64_t k = (longest_odd + 1) / 2;  // longest odd cycle has 2k-1 vertices
  report.comparison_bound = graph.vertex_count() -
                            static_cast<int64_t>(analysis.leaf_edges.size()) - k + 1;
  return report;
}

std::optional<int64_t> dstab_from_socle(const SimpleGraph& graph, int64_t max_power) {
  if (!is_connected(graph)) throw domain_error("depth stability index needs a connected graph");
  if (two_colorable(graph.adjacency()))
    throw domain_error("depth stability via socle needs a nonbipartite graph");
  if (max_power < 1) throw domain_error("power bound must be at least 1");

  const MonomialIdeal ideal = edge_ideal(graph);
  MonomialIdeal pw = ideal;
  for (int64_t m = 1; m <= max_power; ++m) {
    if (!socle_monomials(pw).empty()) return m;
    if (m < max_power) pw = multiply(pw, ideal);
  }
  return std::nullopt;
}

}  // namespace soclekit
