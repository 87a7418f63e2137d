#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfgeo {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside the domain of an operation (k < 1, p < 2, chi <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A theorem's hypotheses are not met by the supplied data.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

// Supplied or computed invariants contradict one another.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Denominator of a rational function does not have the requested pole at 0.
class PoleOrderMismatch : public Error {
 public:
  using Error::Error;
};

// Series that should start with 1 (or carry matching prefactors) do not.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Topology outside the reach of the classification (not simply connected, b2 = 0).
class NotClassifiable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : Error("column " + std::to_string(column) + ": " + message), column_(column) {}

  // 1-based.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace surfgeo
