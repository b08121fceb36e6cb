#pragma once

#include <stdexcept>
#include <string>

namespace hwit {

// Malformed user-facing input (CLI flags, JSON payloads, rational strings).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A Gram matrix with determinant zero where a nondegenerate form is required.
struct SingularFormError : std::runtime_error {
  explicit SingularFormError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a Pin lift would need a splitting field the engine does not
// support: an irrational reflection norm, or more than six radicands.
struct UnsupportedSplittingField : std::runtime_error {
  explicit UnsupportedSplittingField(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hwit
