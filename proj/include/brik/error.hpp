#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brik {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request would exceed one of the configured resource caps.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::uint64_t cap, std::string requested)
      : Error("cap exceeded: " + cap_name + " = " + std::to_string(cap) +
              ", requested " + requested),
        cap_name_(std::move(cap_name)),
        cap_(cap) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::string cap_name_;
  std::uint64_t cap_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The exact value exists but cannot be held in memory.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

// Malformed position expression or input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Interval arithmetic was asked for more than the chosen depth can certify.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace brik
