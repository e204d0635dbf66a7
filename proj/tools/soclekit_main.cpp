// soclekit: batch front-end for socle computations on monomial ideals.
// Exit codes: 0 success, 1 I/O or parse failure, 2 domain/precondition failure.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "soclekit/errors.hpp"
#include "soclekit/graph.hpp"
#include "soclekit/ideal.hpp"
#include "soclekit/json_io.hpp"
#include "soclekit/parallel.hpp"
#include "soclekit/polymatroid.hpp"
#include "soclekit/socle.hpp"

using nlohmann::json;
using namespace soclekit;

namespace {

struct Args {
  std::string ideal;
  std::string other;
  std::string graph;
  std::string type;
  std::string subset;
  int64_t power = -1;
  int64_t max_power = -1;
  int64_t extra_powers = -1;
  int64_t k_max = -1;
  int64_t max_odd_cycles = 100000;
  bool maximal = false;
};

MonomialIdeal load_ideal(const std::string& arg) { return ideal_from_json(load_json_arg(arg)); }
SimpleGraph load_graph(const std::string& arg) { return graph_from_json(load_json_arg(arg)); }
PlpType load_plp(const std::string& arg) { return plp_from_json(load_json_arg(arg)); }
VeroneseType load_veronese(const std::string& arg) {
  return veronese_from_json(load_json_arg(arg));
}

int64_t or_default(int64_t flag_value, int64_t fallback) {
  return flag_value >= 0 ? flag_value : fallback;
}

json ideal_result(const MonomialIdeal& ideal) {
  json j = ideal_to_json(ideal);
  j["monomials"] = rendered_monomials(ideal.ring(), ideal.gens());
  return j;
}

json monomial_set_result(const Ring& ring, const std::vector<Monomial>& monomials) {
  json j;
  j["gens"] = exponent_rows(monomials);
  j["monomials"] = rendered_monomials(ring, monomials);
  return j;
}

json edges_1based(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.first + 1, e.second + 1});
  return out;
}

json indices_1based(const std::vector<int64_t>& idx) {
  json out = json::array();
  for (int64_t i : idx) out.push_back(i + 1);
  return out;
}

std::vector<int64_t> parse_subset(const std::string& arg) {
  std::vector<int64_t> out;
  std::string token;
  for (char c : arg + ",") {
    if (c == ',') {
      if (!token.empty()) {
        try {
          out.push_back(std::stoll(token) - 1);  // 1-based on the command line
        } catch (const std::exception&) {
          throw parse_error("bad subset entry: " + token);
        }
        token.clear();
      }
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"socle modules of powers of monomial ideals"};
  app.require_subcommand(1);

  Args args;
  bool timing = false;
  int64_t threads = 1;
  if (const char* env = std::getenv("SOCLEKIT_THREADS")) {
    try {
      threads = std::max<int64_t>(1, std::stoll(env));
    } catch (const std::exception&) {
      threads = 1;
    }
  }
  app.add_option("--threads", threads, "worker threads (default 1, or SOCLEKIT_THREADS)");
  app.add_flag("--timing", timing, "include wall-clock timing in the report");

  std::string command;
  std::function<json()> action;

  auto leaf = [&](CLI::App* parent, const char* name, const char* desc) {
    return parent->add_subcommand(name, desc);
  };

  // ideal -------------------------------------------------------------------
  CLI::App* ideal_cmd = app.add_subcommand("ideal", "monomial ideal arithmetic");
  ideal_cmd->require_subcommand(1);
  {
    CLI::App* c = leaf(ideal_cmd, "power", "minimal generators of I^m");
    c->add_option("--ideal", args.ideal)->required();
    c->add_option("--exponent,-m", args.power)->required();
    c->final_callback([&] {
      action = [&]() { return ideal_result(power(load_ideal(args.ideal), args.power)); };
    });
  }
  {
    CLI::App* c = leaf(ideal_cmd, "colon", "(J : I) or (J : m) with --maximal");
    c->add_option("--ideal", args.ideal)->required();
    c->add_option("--by", args.other);
    c->add_flag("--maximal", args.maximal);
    c->final_callback([&] {
      action = [&]() {
        MonomialIdeal numerator = load_ideal(args.ideal);
        if (args.maximal == !args.other.empty())
          throw domain_error("pass exactly one of --by or --maximal");
        return ideal_result(args.maximal ? colon_maximal(numerator)
                                         : colon_ideal(numerator, load_ideal(args.other)));
      };
    });
  }
  {
    CLI::App* c = leaf(ideal_cmd, "socle-basis", "monomial basis of (I^m : m)/I^m");
    c->add_option("--ideal", args.ideal)->required();
    c->add_option("--power,-m", args.power)->required();
    c->final_callback([&] {
      action = [&]() {
        MonomialIdeal ideal = load_ideal(args.ideal);
        SocleBasis basis = socle_basis(ideal, args.power);
        json j = monomial_set_result(ideal.ring(), basis.elements);
        j["power"] = basis.power;
        j["fiberDegree"] = basis.power - 1;
        json degrees = json::array();
        for (const auto& u : basis.elements) degrees.push_back(u.degree());
        j["degrees"] = degrees;
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(ideal_cmd, "soc", "the ideal generated by the power-1 socle");
    c->add_option("--ideal", args.ideal)->required();
    c->final_callback([&] {
      action = [&]() { return ideal_result(soc_ideal(load_ideal(args.ideal))); };
    });
  }

  // socle -------------------------------------------------------------------
  CLI::App* socle_cmd = app.add_subcommand("socle", "socle module structure");
  socle_cmd->require_subcommand(1);
  {
    CLI::App* c = leaf(socle_cmd, "mingens", "minimal fiber-cone generators up to a power bound");
    c->add_option("--ideal", args.ideal)->required();
    c->add_option("--max-power", args.max_power);
    c->final_callback([&] {
      action = [&]() {
        MonomialIdeal ideal = load_ideal(args.ideal);
        const int64_t bound = or_default(args.max_power, ideal.ring().nvars() + 2);
        SocleModuleSummary summary = socle_module_mingens(ideal, bound);
        json bases = json::array();
        for (const auto& basis : summary.bases) {
          json jb = monomial_set_result(ideal.ring(), basis.elements);
          jb["power"] = basis.power;
          jb["fiberDegree"] = basis.power - 1;
          bases.push_back(jb);
        }
        json mins = json::array();
        for (int64_t k = 0; k < summary.max_power; ++k) {
          const auto& gens = summary.min_gens_by_fiber[static_cast<size_t>(k)];
          if (gens.empty()) continue;
          json jm = monomial_set_result(ideal.ring(), gens);
          jm["fiberDegree"] = k;
          jm["power"] = k + 1;
          mins.push_back(jm);
        }
        json j;
        j["maxPower"] = summary.max_power;
        j["bases"] = bases;
        j["minGens"] = mins;
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(socle_cmd, "ratliff", "(I^{m+1} : I) = I^m for m = 0..M");
    c->add_option("--ideal", args.ideal)->required();
    c->add_option("--max-power", args.max_power);
    c->final_callback([&] {
      action = [&]() {
        MonomialIdeal ideal = load_ideal(args.ideal);
        const int64_t bound = or_default(args.max_power, ideal.ring().nvars() + 2);
        json j;
        j["maxPower"] = bound;
        j["holds"] = ratliff_check(ideal, bound);
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(socle_cmd, "spread", "analytic spread of an equigenerated ideal");
    c->add_option("--ideal", args.ideal)->required();
    c->final_callback([&] {
      action = [&]() {
        json j;
        j["spread"] = analytic_spread(load_ideal(args.ideal));
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(socle_cmd, "product-check", "socle of a join against products of socles");
    c->add_option("--ideal", args.ideal)->required();
    c->add_option("--other", args.other)->required();
    c->add_option("--max-power", args.max_power);
    c->final_callback([&] {
      action = [&]() {
        MonomialIdeal a = load_ideal(args.ideal);
        MonomialIdeal b = load_ideal(args.other);
        const int64_t bound =
            or_default(args.max_power, a.ring().nvars() + b.ring().nvars() + 2);
        json j;
        j["maxPower"] = bound;
        j["holds"] = product_decomposition_check(a, b, bound);
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(socle_cmd, "relation-graph", "linear relation graph of the generators");
    c->add_option("--ideal", args.ideal)->required();
    c->final_callback([&] {
      action = [&]() {
        MonomialIdeal ideal = load_ideal(args.ideal);
        LinearRelationGraph graph = linear_relation_graph(ideal);
        json j;
        j["vertices"] = indices_1based(graph.vertices);
        json edges = json::array();
        for (const auto& e : graph.edges) edges.push_back({e.first + 1, e.second + 1});
        j["edges"] = edges;
        auto check = relation_graph_generator_check(ideal);
        j["generatorCheck"] = !check ? "preconditionNotMet" : (*check ? "true" : "false");
        return j;
      };
    });
  }

  // graph -------------------------------------------------------------------
  CLI::App* graph_cmd = app.add_subcommand("graph", "edge ideals of simple graphs");
  graph_cmd->require_subcommand(1);
  {
    CLI::App* c = leaf(graph_cmd, "edge-ideal", "edge ideal of a graph");
    c->add_option("--graph", args.graph)->required();
    c->final_callback([&] {
      action = [&]() { return ideal_result(edge_ideal(load_graph(args.graph))); };
    });
  }
  {
    CLI::App* c = leaf(graph_cmd, "analyze", "components, bipartiteness, odd cycles, leaves");
    c->add_option("--graph", args.graph)->required();
    c->add_option("--max-odd-cycles", args.max_odd_cycles);
    c->final_callback([&] {
      action = [&]() {
        SimpleGraph graph = load_graph(args.graph);
        GraphAnalysis a = analyze_graph(graph, args.max_odd_cycles);
        json j;
        j["components"] = a.component_count;
        j["componentOf"] = a.component_of;
        j["isBipartite"] = a.is_bipartite;
        json cycles = json::array();
        for (const auto& c2 : a.odd_cycles) cycles.push_back(indices_1based(c2));
        j["oddCycles"] = cycles;
        j["leafEdges"] = edges_1based(a.leaf_edges);
        j["oddCycleDistanceOk"] =
            a.component_count == 1 ? json(odd_cycle_distance_ok(graph)) : json();
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(graph_cmd, "unicyclic", "cycle, E*, d_G and u_G of a unicyclic graph");
    c->add_option("--graph", args.graph)->required();
    c->final_callback([&] {
      action = [&]() {
        SimpleGraph graph = load_graph(args.graph);
        UnicyclicInfo info = unicyclic_info(graph);
        Ring ring(graph.vertex_count());
        json j;
        j["cycle"] = indices_1based(info.cycle_vertices);
        j["k"] = info.k;
        j["eStar"] = edges_1based(info.e_star);
        j["dG"] = info.d_g;
        j["uG"] = json{{"exponents", info.u_g.exponents()}, {"monomial", info.u_g.str(ring)}};
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(graph_cmd, "oracle", "socle basis of a unicyclic edge ideal, by formula");
    c->add_option("--graph", args.graph)->required();
    c->add_option("--power,-m", args.power)->required();
    c->final_callback([&] {
      action = [&]() {
        SimpleGraph graph = load_graph(args.graph);
        auto mons = socle_oracle_unicyclic(graph, args.power);
        json j = monomial_set_result(Ring(graph.vertex_count()), mons);
        j["power"] = args.power;
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(graph_cmd, "free-check", "rank-one freeness of the socle module");
    c->add_option("--graph", args.graph)->required();
    c->add_option("--extra-powers,-R", args.extra_powers);
    c->final_callback([&] {
      action = [&]() {
        SimpleGraph graph = load_graph(args.graph);
        const int64_t r = or_default(args.extra_powers, 2);
        json j;
        j["dG"] = unicyclic_info(graph).d_g;
        j["extraPowers"] = r;
        j["holds"] = free_rank1_check(graph, r);
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(graph_cmd, "spanning", "spanning unicyclic nonbipartite subgraphs");
    c->add_option("--graph", args.graph)->required();
    c->final_callback([&] {
      action = [&]() {
        SimpleGraph graph = load_graph(args.graph);
        json subs = json::array();
        for (const auto& edges : spanning_unicyclic_nonbipartite(graph)) {
          json js;
          js["edges"] = edges_1based(edges);
          js["dH"] = unicyclic_info(SimpleGraph(graph.vertex_count(), edges)).d_g;
          subs.push_back(js);
        }
        json j;
        j["count"] = subs.size();
        j["subgraphs"] = subs;
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(graph_cmd, "dstab", "depth stability index from the socle, with bound");
    c->add_option("--graph", args.graph)->required();
    c->add_option("--max-power", args.max_power);
    c->final_callback([&] {
      action = [&]() {
        SimpleGraph graph = load_graph(args.graph);
        const int64_t bound = or_default(args.max_power, graph.vertex_count() + 2);
        auto from_socle = dstab_from_socle(graph, bound);
        DstabBoundReport report = dstab_bound(graph);
        json j;
        j["fromSocle"] = from_socle ? json(*from_socle) : json();
        j["maxPower"] = bound;
        j["bound"] = report.bound;
        j["comparisonBound"] = report.comparison_bound;
        return j;
      };
    });
  }

  // plp ---------------------------------------------------------------------
  CLI::App* plp_cmd = app.add_subcommand("plp", "PLP-polymatroidal ideals");
  plp_cmd->require_subcommand(1);
  {
    CLI::App* c = leaf(plp_cmd, "validate", "check the type inequalities");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        PlpDiagnostics diag = plp_validate(load_plp(args.type));
        json j;
        j["valid"] = diag.valid;
        j["violations"] = diag.violations;
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "gens", "enumerate the minimal generators");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() { return ideal_result(plp_gens(load_plp(args.type))); };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "feasible", "does the defining system have a solution");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        json j;
        j["feasible"] = plp_feasible(load_plp(args.type));
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "witness", "greedy solution of the defining system");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        PlpType t = load_plp(args.type);
        auto w = plp_witness(t);
        json j;
        if (w)
          j["witness"] =
              json{{"exponents", w->exponents()}, {"monomial", w->str(Ring(t.nvars()))}};
        else
          j["witness"] = json();
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "soc-type", "type of soc(I) for a basic type");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        auto soc = plp_soc_type(load_plp(args.type));
        json j;
        j["socType"] = soc ? plp_to_json(*soc) : json();
        j["zeroIdeal"] = !soc.has_value();
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "power-type", "type of I^m for a basic type");
    c->add_option("--type", args.type)->required();
    c->add_option("--exponent,-m", args.power)->required();
    c->final_callback([&] {
      action = [&]() {
        json j;
        j["powerType"] = plp_to_json(plp_power_type(load_plp(args.type), args.power));
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "depth-zero", "depth S/I = 0 criterion");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        json j;
        j["depthZero"] = plp_depth_zero(load_plp(args.type));
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "socstar", "does some power have a nonzero socle");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        json j;
        j["socstarNonzero"] = plp_socstar_nonzero(load_plp(args.type));
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(plp_cmd, "degree-check", "soc(I^{k+1}) in I*soc(I^k) for k up to a bound");
    c->add_option("--type", args.type)->required();
    c->add_option("--k-max", args.k_max);
    c->final_callback([&] {
      action = [&]() {
        PlpType t = load_plp(args.type);
        const int64_t bound = or_default(args.k_max, t.nvars() + 1);
        json j;
        j["kMax"] = bound;
        j["holds"] = plp_socstar_degree_check(t, bound);
        return j;
      };
    });
  }

  // veronese ----------------------------------------------------------------
  CLI::App* ver_cmd = app.add_subcommand("veronese", "ideals of Veronese type");
  ver_cmd->require_subcommand(1);
  {
    CLI::App* c = leaf(ver_cmd, "to-plp", "basic PLP type of I_{a,d}");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        auto t = veronese_to_plp(load_veronese(args.type));
        json j;
        j["plpType"] = t ? plp_to_json(*t) : json();
        j["infeasible"] = !t.has_value();
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(ver_cmd, "rank", "rank function value of a subset");
    c->add_option("--type", args.type)->required();
    c->add_option("--subset", args.subset)->required();
    c->final_callback([&] {
      action = [&]() {
        auto subset = parse_subset(args.subset);
        json j;
        j["subset"] = indices_1based(subset);
        j["rank"] = veronese_rank(load_veronese(args.type), subset);
        return j;
      };
    });
  }
  {
    CLI::App* c = leaf(ver_cmd, "equigen", "is the socle module of all powers equi-generated");
    c->add_option("--type", args.type)->required();
    c->final_callback([&] {
      action = [&]() {
        EquigenReport report = veronese_equigen(load_veronese(args.type));
        json sets = json::array();
        for (const auto& s : report.violating_sets) sets.push_back(indices_1based(s));
        json j;
        j["k0"] = report.k0;
        j["equiGenerated"] = report.equi_generated;
        j["violatingSets"] = sets;
        j["depthZeroAtFirstPower"] = report.depth_zero_at_first_power;
        return j;
      };
    });
  }

  // check -------------------------------------------------------------------
  CLI::App* check_cmd = app.add_subcommand("check", "structure checks");
  check_cmd->require_subcommand(1);
  {
    CLI::App* c = leaf(check_cmd, "exchange", "symmetric exchange property of the generators");
    c->add_option("--ideal", args.ideal)->required();
    c->final_callback([&] {
      action = [&]() {
        ExchangeResult result = exchange_check(load_ideal(args.ideal));
        json j;
        j["polymatroidal"] = result.ok;
        if (result.counterexample) {
          const auto& [u, v, i] = *result.counterexample;
          j["counterexample"] = json{{"u", u.exponents()}, {"v", v.exponents()}, {"i", i + 1}};
        } else {
          j["counterexample"] = json();
        }
        return j;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    std::cerr << e.what() << "\n";
    return 1;
  }

  set_max_threads(threads);

  for (CLI::App* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (CLI::App* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }

  json report;
  report["command"] = command;
  try {
    const auto start = std::chrono::steady_clock::now();
    json result = action();
    const auto stop = std::chrono::steady_clock::now();
    report["result"] = result;
    report["status"] = "ok";
    if (timing)
      report["timingMs"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const parse_error& e) {
    report["status"] = "parse-error";
    report["message"] = e.what();
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    report["status"] = "domain-error";
    report["message"] = e.what();
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
