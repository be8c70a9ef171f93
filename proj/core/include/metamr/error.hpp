#pragma once

#include <stdexcept>
#include <string>

namespace metamr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown attribute / arity mismatch / malformed relation.
struct SchemaError : Error {
  using Error::Error;
};

// validate_schema was handed an input id it has no size for.
struct ValidationError : Error {
  using Error::Error;
};

// A key group is too large for one reducer; caller should take the skew path.
struct OversizedGroupError : Error {
  using Error::Error;
};

// No assignment can satisfy the capacity constraint (e.g. a single record > q/2).
struct InfeasibleError : Error {
  using Error::Error;
};

// The user index does not cover a requested tuple.
struct IntegrityError : Error {
  using Error::Error;
};

// Bad plan / config / CLI input.
struct ConfigError : Error {
  using Error::Error;
};

struct GenerationError : Error {
  using Error::Error;
};

struct ParameterError : Error {
  using Error::Error;
};

// Digest collisions persisted through REHASH_LIMIT rounds.
struct HashExhaustionError : Error {
  using Error::Error;
};

}  // namespace metamr
