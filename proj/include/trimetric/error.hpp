#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trimetric {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: bad vertex labels, self-loops, invalid family parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

// graph6 decoding failure at a specific byte of the input word.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Input outside the supported encoding (graph6 long form, n > 62).
class UnsupportedFormError : public Error {
 public:
  using Error::Error;
};

// An exact exponential search refused to run above its size cap.
class CapError : public Error {
 public:
  CapError(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// The requested parameter does not exist for this graph (disconnected, too small).
class UndefinedParameterError : public Error {
 public:
  using Error::Error;
};

class MetricsError : public Error {
 public:
  using Error::Error;
};

class RegistryError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace trimetric
