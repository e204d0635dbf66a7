#ifndef SOCLEKIT_JSON_IO_HPP
#define SOCLEKIT_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "soclekit/graph.hpp"
#include "soclekit/ideal.hpp"
#include "soclekit/polymatroid.hpp"

namespace soclekit {

// File formats, all JSON/UTF-8:
//   ideal    {"vars": ["x1", ...], "gens": [[e1, ..., en], ...]}
//   graph    {"vertices": n, "edges": [[i, j], ...]}   (1-indexed)
//   plp      {"a": [...], "b": [...], "alpha": [...], "beta": [...]}   (a optional)
//   veronese {"a": [...], "d": d}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const nlohmann::json& j);

nlohmann::json plp_to_json(const PlpType& type);
PlpType plp_from_json(const nlohmann::json& j);

nlohmann::json veronese_to_json(const VeroneseType& type);
VeroneseType veronese_from_json(const nlohmann::json& j);

// Inline JSON (leading '{' or '[') or a path to a JSON file.
nlohmann::json load_json_arg(const std::string& path_or_inline);

nlohmann::json rendered_monomials(const Ring& ring, const std::vector<Monomial>& monomials);
nlohmann::json exponent_rows(const std::vector<Monomial>& monomials);

}  // namespace soclekit

#endif
