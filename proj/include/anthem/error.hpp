#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace anthem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

class SyntaxError : public Error {
public:
  SyntaxError(Location location, const std::string &message)
      : Error(std::to_string(location.line) + ":" + std::to_string(location.column) + ": " + message),
        location_(location) {}

  Location location() const { return location_; }

private:
  Location location_;
};

class SortError : public Error {
public:
  using Error::Error;
};

class UnsupportedFeature : public Error {
public:
  using Error::Error;
};

class NotRegular : public Error {
public:
  using Error::Error;
};

class NotCompletable : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class ClosureError : public Error {
public:
  using Error::Error;
};

class EvaluationError : public Error {
public:
  using Error::Error;
};

class ProverUnavailable : public Error {
public:
  using Error::Error;
};

/// Raised when a verification task is refused (non-tight program, private recursion).
class Refusal : public Error {
public:
  Refusal(const std::string &message, std::vector<std::string> witness)
      : Error(message), witness_(std::move(witness)) {}

  const std::vector<std::string> &witness() const { return witness_; }

private:
  std::vector<std::string> witness_;
};

class RefusedNotTight : public Refusal {
public:
  using Refusal::Refusal;
};

class RefusedPrivateRecursion : public Refusal {
public:
  using Refusal::Refusal;
};

} // namespace anthem
