#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicesim {

// Error taxonomy. The kind maps 1:1 onto CLI exit codes:
// Validation -> 1, Runtime -> 2, Io -> 3.
enum class ErrorKind { Validation, Runtime, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// -- validation family -------------------------------------------------------

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg, std::string json_path = "")
      : Error(ErrorKind::Validation, json_path.empty() ? msg : msg + " (at " + json_path + ")"),
        json_path_(std::move(json_path)) {}
  const std::string& json_path() const { return json_path_; }

 private:
  std::string json_path_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t byte_offset)
      : Error(ErrorKind::Validation, msg), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Field-width violation on an S-NSSAI component.
class OutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// -- runtime family ----------------------------------------------------------

class RuntimeError : public Error {
 public:
  explicit RuntimeError(const std::string& msg) : Error(ErrorKind::Runtime, msg) {}
};

class NoMatchingRuleError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class AllRsdsFailedError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

enum class RejectCause { NotSubscribed, NotSupportedAtGnb };

class RegistrationRejectedError : public RuntimeError {
 public:
  RegistrationRejectedError(RejectCause cause, const std::string& msg)
      : RuntimeError(msg), cause_(cause) {}
  RejectCause cause() const { return cause_; }

 private:
  RejectCause cause_;
};

class SliceNotAllowedError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class UnknownDnnError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class SessionLimitExceededError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class AlreadyReleasedError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class NotRegisteredError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class UnknownSliceError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class DegenerateError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class IndexError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

class EmptyWindowError : public RuntimeError {
 public:
  using RuntimeError::RuntimeError;
};

// -- I/O family --------------------------------------------------------------

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(ErrorKind::Io, msg) {}
};

}  // namespace slicesim
