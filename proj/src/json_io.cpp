#include "soclekit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "soclekit/errors.hpp"

namespace soclekit {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<int64_t> int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw parse_error(std::string(what) + " must hold integers");
    out.push_back(v.get<int64_t>());
  }
  return out;
}

}  // namespace

json ideal_to_json(const MonomialIdeal& ideal) {
  json j;
  j["vars"] = ideal.ring().names();
  j["gens"] = exponent_rows(ideal.gens());
  return j;
}

MonomialIdeal ideal_from_json(const json& j) {
  try {
    const json& jvars = need(j, "vars");
    if (!jvars.is_array()) throw parse_error("\"vars\" must be an array of names");
    std::vector<std::string> names;
    for (const auto& v : jvars) {
      if (!v.is_string()) throw parse_error("\"vars\" must be an array of names");
      names.push_back(v.get<std::string>());
    }
    Ring ring(std::move(names));
    const json& jgens = need(j, "gens");
    if (!jgens.is_array()) throw parse_error("\"gens\" must be an array");
    std::vector<Monomial> gens;
    for (const auto& row : jgens) gens.push_back(Monomial(int_vector(row, "generator")));
    return MonomialIdeal(std::move(ring), std::move(gens));
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(std::string("bad ideal: ") + e.what());
  }
}

json graph_to_json(const SimpleGraph& graph) {
  json edges = json::array();
  for (const auto& e : graph.edges()) edges.push_back({e.first + 1, e.second + 1});
  json j;
  j["vertices"] = graph.vertex_count();
  j["edges"] = edges;
  return j;
}

SimpleGraph graph_from_json(const json& j) {
  try {
    const json& jn = need(j, "vertices");
    if (!jn.is_number_integer()) throw parse_error("\"vertices\" must be an integer");
    const json& jedges = need(j, "edges");
    if (!jedges.is_array()) throw parse_error("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& row : jedges) {
      auto pair = int_vector(row, "edge");
      if (pair.size() != 2) throw parse_error("an edge needs exactly two endpoints");
      edges.push_back({pair[0] - 1, pair[1] - 1});  // file is 1-indexed
    }
    return SimpleGraph(jn.get<int64_t>(), std::move(edges));
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(std::string("bad graph: ") + e.what());
  }
}

json plp_to_json(const PlpType& type) {
  json j;
  j["a"] = type.a;
  j["b"] = type.b;
  j["alpha"] = type.alpha;
  j["beta"] = type.beta;
  return j;
}

PlpType plp_from_json(const json& j) {
  PlpType t;
  t.b = int_vector(need(j, "b"), "\"b\"");
  t.alpha = int_vector(need(j, "alpha"), "\"alpha\"");
  t.beta = int_vector(need(j, "beta"), "\"beta\"");
  if (j.contains("a"))
    t.a = int_vector(j["a"], "\"a\"");
  else
    t.a.assign(t.b.size(), 0);  // basic by default
  return t;
}

json veronese_to_json(const VeroneseType& type) {
  json j;
  j["a"] = type.a;
  j["d"] = type.d;
  return j;
}

VeroneseType veronese_from_json(const json& j) {
  VeroneseType v;
  v.a = int_vector(need(j, "a"), "\"a\"");
  const json& jd = need(j, "d");
  if (!jd.is_number_integer()) throw parse_error("\"d\" must be an integer");
  v.d = jd.get<int64_t>();
  return v;
}

json load_json_arg(const std::string& path_or_inline) {
  size_t first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    try {
      return json::parse(path_or_inline);
    } catch (const json::parse_error& e) {
      throw parse_error(std::string("inline JSON: ") + e.what());
    }
  }
  std::ifstream in(path_or_inline);
  if (!in) throw parse_error("cannot open " + path_or_inline);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw parse_error(path_or_inline + ": " + e.what());
  }
}

json rendered_monomials(const Ring& ring, const std::vector<Monomial>& monomials) {
  json out = json::array();
  for (const auto& m : monomials) out.push_back(m.str(ring));
  return out;
}

json exponent_rows(const std::vector<Monomial>& monomials) {
  json out = json::array();
  for (const auto& m : monomials) out.push_back(m.exponents());
  return out;
}

}  // namespace soclekit
