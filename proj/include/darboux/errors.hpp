#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darboux {

/// Base class for every error thrown by the kernel.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An analytic function was evaluated outside its real domain.
class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Division by a dual quantity whose real part vanishes (a zero divisor).
class PureDualDivision : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Norm/normalization of a dual vector whose real part vanishes.
class PureDualVector : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Arithmetic between jets of different (non-constant) orders.
class OrderMismatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A line was requested from a zero direction vector.
class ZeroDirection : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Dual vector does not satisfy the unit-line (normalized Pluecker) invariants.
class NotAUnitLine : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Director curve has (locally) vanishing derivative: the surface is
/// cylindrical and has no striction curve / indicatrix arc length.
class CylindricalDirector : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Adaptive quadrature exceeded its refinement depth limit.
class QuadratureFailure : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Expression text failed to parse. `offset` is the byte offset of the
/// first token that could not be consumed.
class SyntaxError : public GeometryError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : GeometryError(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Expression references an identifier the language does not define.
class UnknownIdentifier : public GeometryError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t offset)
      : GeometryError("unknown identifier '" + name + "' (at offset " +
                      std::to_string(offset) + ")"),
        name_(name),
        offset_(offset) {}
  const std::string& name() const { return name_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string name_;
  std::size_t offset_;
};

/// Offset construction would stall or reverse the offset indicatrix.
class DegenerateOffset : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// No offset distance can make the offset developable for this angle.
class NoSolution : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A developable base surface was required but the distribution parameter
/// does not vanish.
class NotDevelopableBase : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Config file could not be parsed. Line and column are 1-based.
class ParseError : public GeometryError {
 public:
  ParseError(const std::string& what, int line, int col)
      : GeometryError(what + " (line " + std::to_string(line) + ", column " +
                      std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Config parsed but a field violates its documented range.
class ValidationError : public GeometryError {
 public:
  explicit ValidationError(const std::string& field, const std::string& why = "")
      : GeometryError("invalid value for '" + field + "'" +
                      (why.empty() ? "" : ": " + why)),
        field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace darboux
