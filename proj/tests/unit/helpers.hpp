#pragma once

#include <complex>
#include <doctest.h>

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

#define CHECK_CLOSE(a, b, tol) CHECK_MESSAGE(rel_diff((a), (b)) <= (tol), "got ", (a), " expected ", (b))
