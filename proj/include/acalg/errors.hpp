#pragma once

#include <stdexcept>
#include <string>

namespace acalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated mathematical precondition. The CLI maps these to exit code 3.
class MathError : public Error {
 public:
  using Error::Error;
};

// Malformed input, unreadable files, bad options. Exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
};

class IncompatibleFields : public MathError {
 public:
  explicit IncompatibleFields(const std::string& what)
      : MathError("incompatible fields: " + what) {}
};

class NoSquareRoot : public MathError {
 public:
  explicit NoSquareRoot(const std::string& what)
      : MathError("no square root: " + what) {}
};

class TowerDepthExceeded : public MathError {
 public:
  explicit TowerDepthExceeded(int cap)
      : MathError("quadratic tower depth cap " + std::to_string(cap) +
                  " exceeded") {}
};

class Singular : public MathError {
 public:
  explicit Singular(const std::string& what = "matrix is singular")
      : MathError(what) {}
};

class NotAnticommutative : public MathError {
 public:
  using MathError::MathError;
};

class ClassificationGap : public MathError {
 public:
  using MathError::MathError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

class FieldTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class TranscriptionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace acalg
