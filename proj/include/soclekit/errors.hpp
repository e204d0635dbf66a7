#ifndef SOCLEKIT_ERRORS_HPP
#define SOCLEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace soclekit {

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live over rings with a different number of variables.
class dimension_mismatch : public error {
public:
  using error::error;
};

// A documented precondition does not hold (zero/unit ideal, bipartite graph, ...).
class domain_error : public error {
public:
  using error::error;
};

// Input is outside the supported regime (non-equigenerated spread, size caps).
class unsupported_error : public error {
public:
  using error::error;
};

// Checked 64-bit exponent/degree arithmetic overflowed.
class overflow_error : public error {
public:
  using error::error;
};

// Malformed input file or inline JSON.
class parse_error : public error {
public:
  using error::error;
};

}  // namespace soclekit

#endif
