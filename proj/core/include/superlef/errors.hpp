#pragma once

#include <stdexcept>
#include <string>

namespace superlef {

/// A structurally valid request outside the supported configuration space
/// (e.g. octonion coefficients with more than one slot). Distinct from
/// invalid input so callers can map it to a dedicated exit status.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace superlef
