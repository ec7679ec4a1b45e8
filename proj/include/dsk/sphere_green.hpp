#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dsk/crown.hpp"

namespace dsk {

// Point of S^n realized in the crown as (i x0, spatial).
struct SpherePoint {
  double x0;
  Eigen::VectorXd spatial;

  static SpherePoint make(double x0, const Eigen::VectorXd& spatial);
  int dim() const { return int(spatial.size()); }
  CrownPoint crown() const { return CrownPoint::sphere(x0, spatial); }
};

SpherePoint reflect_sigma(const SpherePoint& p);

// Euclidean inner product of two sphere points.
double sphere_dot(const SpherePoint& x, const SpherePoint& y);

// Uniform point of the upper hemisphere with x0 >= min_x0.
SpherePoint random_upper_point(int n, std::mt19937_64& rng, double min_x0 = 0.1);

// Reproducing kernel of degree-k harmonics on S^n as a function of the inner product.
double zonal_harmonic(int n, int k, double u);

struct GreenOptions {
  int k_min = 64;
  int k_max = 5000;
  double tail_target = 1e-8;   // relative
  double filter_strength = 36.0;
  int filter_order = 4;
};

struct GreenValue {
  double value = 0.0;
  double tail_bound = 0.0;   // |S_K - S_{K/2}|, relative to |value|
  int K = 0;
};

// Exponentially filtered zonal sum of sum_k Z_k(u) / ((k+rho)^2 - lambda^2), truncated at K.
GreenValue green_kernel(const SpectralParam& sp, double u, int K, const GreenOptions& opt = {});

// Doubles K from k_min until the tail estimate meets tail_target or k_max is reached.
GreenValue green_kernel_adaptive(const SpectralParam& sp, double u, const GreenOptions& opt = {});

// Green kernel at (x, sigma(y)), both in the open upper hemisphere.
GreenValue phi_sigma(const SpectralParam& sp, const SpherePoint& x, const SpherePoint& y,
                     const GreenOptions& opt = {});

struct RpGramReport {
  GramReport gram;
  double max_tail_bound = 0.0;
  bool tails_ok = false;
};

RpGramReport rp_gram_check(const SpectralParam& sp, const std::vector<SpherePoint>& points,
                           const GreenOptions& opt = {}, double tol_psd = 1e-10);

struct ProportionalityReport {
  double ratio = 0.0;
  double max_deviation = 0.0;
  double max_tail_bound = 0.0;
  int pairs_used = 0;
  int skipped = 0;
  std::vector<std::string> notices;
};

ProportionalityReport proportionality_check(const SpectralParam& sp,
                                            const std::vector<std::pair<SpherePoint, SpherePoint>>& pairs,
                                            const GreenOptions& opt = {});

// Closed-form ratio Gamma(rho+lambda)Gamma(rho-lambda) / ((4 pi)^{n/2} Gamma(n/2)).
double analytic_green_ratio(const SpectralParam& sp);

}  // namespace dsk
