#pragma once

#include <stdexcept>
#include <string>

namespace wellfound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element outside the alphabet was used to build or extend a sequence.
class InvalidElementError : public Error {
 public:
  using Error::Error;
};

// A sequence or tree does not fit into the universe it is evaluated against.
class DepthError : public Error {
 public:
  using Error::Error;
};

// A configured size limit (generator count, pair-space width, ...) was hit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A name (principle, suite, demo, atom) is not known.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line/column are 1-based; -1 when the error is
// semantic rather than syntactic.
class FileParseError : public Error {
 public:
  FileParseError(const std::string& message, int line = -1, int column = -1)
      : Error(message), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace wellfound
