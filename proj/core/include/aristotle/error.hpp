#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace aristotle {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatch, model mismatch, bad parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A dual point sits on an excluded chart configuration (f = 0, h = 0, k = 0, ...).
class ChartDegeneracy : public Error {
 public:
  ChartDegeneracy(std::string quantity, double value, double threshold)
      : Error("chart degeneracy: |" + quantity + "| = " + general(value) +
              " is below threshold " + general(threshold)),
        quantity_(std::move(quantity)),
        value_(value),
        threshold_(threshold) {}

  const std::string& quantity() const noexcept { return quantity_; }
  double value() const noexcept { return value_; }
  double threshold() const noexcept { return threshold_; }

 private:
  static std::string general(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
  }

  std::string quantity_;
  double value_;
  double threshold_;
};

/// A matrix that must be inverted is singular.
class Singularity : public Error {
 public:
  using Error::Error;
};

/// Series or iterative solver failed to converge.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace aristotle
