#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound (degree, partition size, word length) was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different color sets.
class ColorMismatchError : public Error {
 public:
  using Error::Error;
};

/// Heisenberg-double operands carry different pairings.
class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

/// An exact division left a nonzero remainder.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr int kDefaultDegreeBound = 16;
inline constexpr int kDefaultPartitionBound = 30;
inline constexpr int kDefaultWordLimit = 64;

}  // namespace qlh
