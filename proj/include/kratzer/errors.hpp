#pragma once
#include <stdexcept>
#include <string>

namespace kratzer {

//! Argument outside the mathematical domain of an operation (r <= 0, negative
//! radicand, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

//! Request that is well-formed but outside what the library models, e.g.
//! continuum states of a potential with a >= 0.
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Malformed or inconsistent molecule config file.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace kratzer
