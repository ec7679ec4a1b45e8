#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dsk {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;

// Malformed or out-of-domain arguments.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation at a pole of gamma or digamma.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series, quadrature or extrapolation failed to settle.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int iterations, double last_error)
      : std::runtime_error(what), iterations_(iterations), last_error_(last_error) {}
  int iterations() const { return iterations_; }
  double last_error() const { return last_error_; }

 private:
  int iterations_;
  double last_error_;
};

// A guarantee that should hold by construction was violated.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct GeometryTolerances {
  double manifold = 1e-10;
  double group = 1e-10;
  double cone = 1e-12;
};

}  // namespace dsk
