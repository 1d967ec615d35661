#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crsym {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different variable contexts (length of a multi-index,
// number of variables of a polynomial, size of a weight vector, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Division by zero and similar field-arithmetic failures.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// A polynomial that was required to be real-valued is not.
class RealityError : public Error {
 public:
  using Error::Error;
};

// A vector field or polynomial mixes several weighted degrees.
class InhomogeneousError : public Error {
 public:
  using Error::Error;
};

// A polynomial cannot be written as a polynomial in Re z_l with
// coefficients free of z_l.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

// A model failed validation; what() lists the violations.
class ModelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace crsym
