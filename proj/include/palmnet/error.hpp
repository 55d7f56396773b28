#pragma once

#include <stdexcept>
#include <string>

namespace palmnet {

// Error categories map 1:1 onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string msg, int exit_code)
      : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// Bad flags, bad configuration, violated call preconditions. Exit 1.
class UsageError : public Error {
 public:
  explicit UsageError(std::string msg) : Error(std::move(msg), 1) {}
};

// Unreadable files, malformed datasets/archives, mismatched shapes on IO. Exit 2.
class DataError : public Error {
 public:
  explicit DataError(std::string msg) : Error(std::move(msg), 2) {}
};

class ShapeError : public DataError {
 public:
  explicit ShapeError(std::string msg) : DataError(std::move(msg)) {}
};

// Non-finite values where finite ones are required. Exit 3.
class NumericError : public Error {
 public:
  explicit NumericError(std::string msg) : Error(std::move(msg), 3) {}
};

}  // namespace palmnet
