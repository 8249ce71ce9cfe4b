#pragma once

#include <stdexcept>
#include <string>

namespace territoire {

/// Root of every error thrown by the library.  The CLI maps all of these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, invalid field, inconsistent dimensions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A JSON document does not match the expected schema; `path` names the
/// offending location (e.g. "/spec/table/2/1").
class SchemaError : public InputError {
 public:
  SchemaError(std::string path, const std::string& what)
      : InputError(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size or enumeration budget would be exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace territoire
