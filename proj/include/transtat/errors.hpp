#pragma once

#include <stdexcept>
#include <string>

namespace transtat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible shapes (matrix product, subspace ambient mismatch, ...).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// The global dimension guard rejected an allocation.
class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(what) {}
};

/// A model file could not be parsed; message carries the field path.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A parsed model violates a semantic requirement (non-symmetric form, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace transtat
