#pragma once

#include <stdexcept>
#include <string>

namespace oco {

/// Raised when two vectors (or a vector and a set/map) disagree on dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside an operation's domain
/// (a zero coordinate handed to the entropy map, a point outside C, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid experiment configuration. The CLI maps this to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_same_dim(long a, long b, const std::string& what);

}  // namespace oco
