#include "dsk/richardson.hpp"

#include <cmath>
#include <limits>

namespace dsk {

Extrapolation richardson_limit(const std::vector<double>& h, const std::vector<cplx>& values, double rel_tol) {
  const size_t N = h.size();
  if (N == 0 || values.size() != N) throw InvalidInput("richardson_limit: ladder and values differ in length");
  for (size_t i = 1; i < N; ++i)
    if (!(h[i] < h[i - 1]) || !(h[i] > 0.0)) throw InvalidInput("richardson_limit: ladder must decrease to 0+");
  if (N == 1) return {values[0], std::numeric_limits<double>::infinity(), 0, false};

  // T[k][j]: polynomial in h through points k-j..k, evaluated at 0.
  std::vector<std::vector<cplx>> T(N);
  for (size_t k = 0; k < N; ++k) {
    T[k].resize(k + 1);
    T[k][0] = values[k];
    for (size_t j = 1; j <= k; ++j) {
      const double hk = h[k], hkj = h[k - j];
      T[k][j] = T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) * (hk / (hkj - hk));
    }
  }
  double best = std::numeric_limits<double>::infinity();
  cplx val = values.back();
  int order = 0;
  for (size_t k = 1; k < N; ++k)
    for (size_t j = 1; j <= k; ++j) {
      const double diff = std::abs(T[k][j] - T[k][j - 1]);
      if (diff < best) {
        best = diff;
        val = T[k][j];
        order = int(j);
      }
    }
  return {val, best, order, best <= rel_tol * (std::abs(val) > 0.0 ? std::abs(val) : 1.0)};
}

std::vector<double> default_eps_ladder() {
  std::vector<double> h;
  for (int k = 0; k <= 8; ++k) h.push_back(0.1 * std::ldexp(1.0, -k));
  return h;
}

}  // namespace dsk
