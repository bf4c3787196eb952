#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlv {

// Mismatched rings, unknown variables, malformed shapes.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request: a pole, a non-polynomial C-symbol, an
// odd-size Pfaffian.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An exact division that should have been exact left a remainder.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ResourceError : std::runtime_error {
  ResourceError(const std::string& what, std::size_t factors_done, std::size_t factors_total)
      : std::runtime_error(what), factors_done(factors_done), factors_total(factors_total) {}
  std::size_t factors_done;
  std::size_t factors_total;
};

}  // namespace hlv
