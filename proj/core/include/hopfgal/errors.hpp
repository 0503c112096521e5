#pragma once

#include <stdexcept>
#include <string>

namespace hopfgal {

// Bad inputs: malformed fixtures, precondition violations, mismatched fields.
// CLI maps these to exit code 1.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-level assertion failed: the computation contradicts a statement
// the library is supposed to certify. CLI maps these to exit code 2.
class theorem_error : public std::runtime_error {
public:
  explicit theorem_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw input_error(what);
}

inline void certify(bool ok, const std::string& what) {
  if (!ok) throw theorem_error(what);
}

}  // namespace hopfgal
