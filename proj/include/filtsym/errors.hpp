#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filtsym {

/// Evaluation requested outside a field's domain, or outside the
/// admissible range of a diffusivity.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix does not carry the block pattern of the requested group.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The local action on a linear profile hit its singular configuration
/// (denominator a*sin(eps) + cos(eps) vanished).
class SingularityError : public std::runtime_error {
 public:
  SingularityError(double eps, double slope, const std::string& what)
      : std::runtime_error(what), eps_(eps), slope_(slope) {}
  double eps() const { return eps_; }
  double slope() const { return slope_; }

 private:
  double eps_;
  double slope_;
};

/// A slice has too few points to decide single-valuedness.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical or syntactic failure while parsing a field expression.
/// `position` is the 0-based offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace filtsym
