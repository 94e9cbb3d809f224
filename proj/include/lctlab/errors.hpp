#pragma once

#include <stdexcept>
#include <string>

namespace lctlab {

// Malformed input documents: bad JSON shape, bad rational syntax,
// inconsistent dimensions. CLI maps this to exit code 2.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed but mathematically invalid models: nonpositive
// weights, non-m-primary ideals, and the like. CLI maps this to exit code 3.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lctlab
