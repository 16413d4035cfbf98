#pragma once

#include <stdexcept>
#include <string>

namespace taco {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invariant violation in loaded content; the message names the record and field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(std::string label)
      : Error("insufficient training data for label '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace taco
