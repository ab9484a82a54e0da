#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chowkit {

/// Base class for every error chowkit raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("polynomials belong to different signatures") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowkit
