#pragma once

#include <stdexcept>
#include <string>

namespace twistrep {

/// Malformed input: wrong shapes, missing table entries, bad group tables.
class StructuralError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computed quantity that must be (close to) an integer or a rank did not
/// come out that way within tolerance.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the region where an operation is defined.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A representation on which the central copy of the dual group does not act
/// by the scalars of any grade.
class GradingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Text that could not be parsed (exponent strings, matrix entries, spec files).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace twistrep

namespace twistrep {

/// Derived data contradicts itself (e.g. a fusion table violating the
/// dimension rule, which signals an incomplete irrep catalog).
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace twistrep
