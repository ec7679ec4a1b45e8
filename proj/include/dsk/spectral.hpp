#pragma once

#include "dsk/common.hpp"

namespace dsk {

// Admissible spectral parameter: lambda in i[0, inf) or in (0, rho).
class SpectralParam {
 public:
  static SpectralParam make(int n, cplx lambda);
  static bool admissible(int n, cplx lambda);

  int n() const { return n_; }
  cplx lambda() const { return lambda_; }
  double rho() const { return 0.5 * (n_ - 1); }
  cplx a() const { return rho() + lambda_; }
  cplx b() const { return rho() - lambda_; }
  double c() const { return 0.5 * n_; }
  bool imaginary() const { return lambda_.real() == 0.0; }
  // rho^2 - lambda^2, real and positive on the admissible set.
  double mass_squared() const { return (rho() * rho() - lambda_ * lambda_).real(); }

 private:
  SpectralParam(int n, cplx lambda) : n_(n), lambda_(lambda) {}
  int n_;
  cplx lambda_;
};

enum class BoundarySide { plus_i0, minus_i0 };

const char* side_name(BoundarySide s);

// 2F1(rho+lambda, rho-lambda; n/2; z) off the cut.
cplx family_hyp2f1(const SpectralParam& sp, cplx z);

// Boundary value at x > 1 from above (plus_i0) or below (minus_i0).
cplx hyp2f1_boundary(const SpectralParam& sp, double x, BoundarySide side);

// F on (-inf, 1), the boundary value on (1, inf), 0 at x = 1 itself.
cplx hyp2f1_real_line(const SpectralParam& sp, double x, BoundarySide side);

// For even n the logarithmic connection is used on (1, x_switch]; beyond it the
// inverse-argument connection takes over.
inline constexpr double kEvenLogSwitch = 1.75;

enum class NearOneMode { log, power };

struct NearOneCoefficient {
  NearOneMode mode;
  cplx coefficient;
  double exponent;  // (2-n)/2 for the power mode, 0 for log
};

NearOneCoefficient near_one_coefficient(const SpectralParam& sp);

// plus_i0 minus minus_i0 boundary value.
cplx cut_jump(const SpectralParam& sp, double x);

}  // namespace dsk
