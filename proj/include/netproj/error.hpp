#pragma once

#include <stdexcept>
#include <string>

namespace netproj {

// Bad input data: malformed rows, empty graphs, invalid graph construction.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity whose definition degenerates on the given input (0/0, zero variance).
class UndefinedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative procedure stopped at its bound without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  // Final residual (power iteration) or achieved value (rewiring).
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace netproj
