#pragma once

#include <stdexcept>
#include <string>

namespace postsel {

/// Invalid input: broken invariant, out-of-range parameter, malformed file.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation that cannot proceed (e.g. a factorization that fails on
/// input that passed validation). The CLI maps this to exit code 1.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace postsel
