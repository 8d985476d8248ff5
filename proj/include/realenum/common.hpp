#ifndef REALENUM_COMMON_HPP
#define REALENUM_COMMON_HPP

#include <stdexcept>
#include <string>

namespace realenum {

// Bad user input: unknown surface, ill-formed class, violated precondition.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant (e.g. a conjugate-pair stratum showing up in an
// all-real enumeration, or a corrupted cache record).  Exit code 3.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace realenum

#endif  // REALENUM_COMMON_HPP
