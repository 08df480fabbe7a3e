#pragma once

#include <stdexcept>
#include <string>

namespace wpd {

struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// gcd of the weights exceeds 1 where a coprime system is required
struct NotCoprimeError : Error {
  explicit NotCoprimeError(const std::string &msg) : Error(msg) {}
};

// order asked of the zero operator
struct ZeroElementError : Error {
  explicit ZeroElementError(const std::string &msg) : Error(msg) {}
};

// an operation requiring a homogeneous operator got a mixed-degree one
struct NotHomogeneousError : Error {
  explicit NotHomogeneousError(const std::string &msg) : Error(msg) {}
};

struct WindowTooSmallError : Error {
  explicit WindowTooSmallError(const std::string &msg) : Error(msg) {}
};

struct NoWitnessApplicableError : Error {
  explicit NoWitnessApplicableError(const std::string &msg) : Error(msg) {}
};

struct VerificationFailedError : Error {
  explicit VerificationFailedError(const std::string &msg) : Error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string &msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

} // namespace wpd
