#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powedge {

/// Operands built over different variable contexts.
class ContextMismatch : public std::invalid_argument {
 public:
  ContextMismatch() : std::invalid_argument("operands belong to different variable contexts") {}
};

class ExponentOverflow : public std::overflow_error {
 public:
  ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

/// Input text, JSON or graph data that violates a documented format or invariant.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Betti engine refuses ideals that contain the unit monomial.
class ImproperIdeal : public std::invalid_argument {
 public:
  ImproperIdeal() : std::invalid_argument("ideal is improper (contains the unit monomial)") {}
};

/// Taylor enumeration would exceed the configured generator cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t required, std::size_t cap)
      : std::runtime_error("ideal has " + std::to_string(required) + " minimal generators; cap is " +
                           std::to_string(cap) + " (rerun with --max-gens " + std::to_string(required) +
                           ")"),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

}  // namespace powedge
