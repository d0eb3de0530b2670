#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dwtsteg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or truncated PGM/PBM input. `offset` is the byte position at
/// which decoding stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands that must share a shape do not.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The one-level Haar transform needs even width and height.
class OddDimension : public Error {
 public:
  using Error::Error;
};

/// Message longer than the carrying subband.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// Pearson correlation with a constant operand (zero denominator).
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

}  // namespace dwtsteg
