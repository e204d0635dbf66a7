#include "soclekit/ring.hpp"

#include <unordered_set>

#include "soclekit/errors.hpp"

namespace soclekit {

Ring::Ring(int64_t nvars) {
  if (nvars < 1) throw domain_error("ring needs at least one variable");
  names_.reserve(static_cast<size_t>(nvars));
  for (int64_t i = 1; i <= nvars; ++i) names_.push_back("x" + std::to_string(i));
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw domain_error("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw domain_error("empty variable name");
    if (!seen.insert(n).second) throw domain_error("duplicate variable name: " + n);
  }
}

}  // namespace soclekit
