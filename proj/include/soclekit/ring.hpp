#ifndef SOCLEKIT_RING_HPP
#define SOCLEKIT_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace soclekit {

// A polynomial ring over an unnamed field, identified by its ordered variable
// list. Coefficients are never materialized; only the variable count matters
// for arithmetic, the names are for display.
class Ring {
public:
  explicit Ring(int64_t nvars);
  explicit Ring(std::vector<std::string> names);

  int64_t nvars() const { return static_cast<int64_t>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int64_t i) const { return names_.at(static_cast<size_t>(i)); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
  std::vector<std::string> names_;
};

}  // namespace soclekit

#endif
