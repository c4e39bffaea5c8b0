#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planesum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CollinearInput : public Error {
 public:
  CollinearInput() : Error("point set is collinear or has fewer than 3 points") {}
};

class PointNotInSet : public Error {
 public:
  using Error::Error;
};

class DirectionNotGeneric : public Error {
 public:
  using Error::Error;
};

class NotCollinear : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class DegeneratePolygon : public Error {
 public:
  using Error::Error;
};

class CoordinateOverflow : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ResumeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by the point-set text parser; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace planesum
