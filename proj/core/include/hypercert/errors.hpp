#pragma once

#include <stdexcept>

namespace hypercert {

/// A structure failed one of its self-tests while being built (non-associative
/// product, non-integrable module, socle of the wrong size, ...).
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inputs that are individually valid but do not fit together (different
/// fields, root systems, or Frobenius levels).
class IncompatibleError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A sweep configuration that cannot be run (unknown names, empty sweeps,
/// size-guard violations).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hypercert
