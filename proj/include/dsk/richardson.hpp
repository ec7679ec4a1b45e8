#pragma once

#include <vector>

#include "dsk/common.hpp"

namespace dsk {

struct Extrapolation {
  cplx value;
  double residual;  // |difference| of the two tableau entries that selected the value
  int order;        // column of the selected tableau entry
  bool converged;
};

// Neville extrapolation of values(h) to h = 0 for an arbitrary decreasing ladder.
Extrapolation richardson_limit(const std::vector<double>& h, const std::vector<cplx>& values,
                               double rel_tol = 1e-6);

std::vector<double> default_eps_ladder();

}  // namespace dsk
