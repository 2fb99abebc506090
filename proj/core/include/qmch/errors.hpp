#pragma once

#include <stdexcept>
#include <string>

namespace qmch {

// Invalid parameters or malformed inputs (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically impossible request, e.g. reconstruction with |I| > N (exit code 3).
struct ImpossibilityError : std::runtime_error {
  explicit ImpossibilityError(const std::string& what) : std::runtime_error(what) {}
};

// Guarded resource limit hit, e.g. index-set cardinality cap (exit code 4).
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmch
