#include "dsk/special.hpp"

#include <cmath>

namespace dsk {

namespace {

// |z + shift| large enough for the asymptotic series to reach full precision.
constexpr double kAsymptoticReal = 15.0;

bool near_integer(cplx z, double& k) {
  k = std::round(z.real());
  return std::abs(z - k) <= 1e-13 * std::max(1.0, std::abs(k));
}

cplx sinpi(cplx z) {
  const double k = std::round(z.real());
  const cplx s = std::sin(pi * (z - k));
  return std::fmod(std::abs(k), 2.0) == 1.0 ? -s : s;
}

cplx cotpi(cplx z) {
  const double k = std::round(z.real());
  return 1.0 / std::tan(pi * (z - k));
}

// log Gamma for Re z >= kAsymptoticReal, Stirling with Bernoulli corrections.
cplx log_gamma_asymptotic(cplx z) {
  static constexpr double coef[] = {
      1.0 / 12.0,         -1.0 / 360.0,          1.0 / 1260.0,     -1.0 / 1680.0,
      1.0 / 1188.0,       -691.0 / 360360.0,     1.0 / 156.0,      -3617.0 / 122400.0,
  };
  const cplx zi = 1.0 / z;
  const cplx zi2 = zi * zi;
  cplx corr = 0.0;
  cplx p = zi;
  for (double c : coef) {
    corr += c * p;
    p *= zi2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + corr;
}

cplx digamma_asymptotic(cplx z) {
  static constexpr double coef[] = {
      1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
  };
  const cplx zi2 = 1.0 / (z * z);
  cplx corr = 0.0;
  cplx p = zi2;
  for (double c : coef) {
    corr += c * p;
    p *= zi2;
  }
  return std::log(z) - 0.5 / z - corr;
}

// Gamma for Re z >= 0.5 by upward shift.
cplx gamma_right(cplx z) {
  cplx prod = 1.0;
  cplx w = z;
  while (w.real() < kAsymptoticReal) {
    prod *= w;
    w += 1.0;
  }
  return std::exp(log_gamma_asymptotic(w)) / prod;
}

cplx digamma_right(cplx z) {
  cplx acc = 0.0;
  cplx w = z;
  while (w.real() < kAsymptoticReal) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  return acc + digamma_asymptotic(w);
}

}  // namespace

cplx pochhammer(cplx d, int k) {
  if (k < 0) throw InvalidInput("pochhammer: negative index");
  cplx r = 1.0;
  for (int j = 0; j < k; ++j) r *= d + double(j);
  return r;
}

bool is_nonpositive_integer(cplx z) {
  double k;
  return near_integer(z, k) && k <= 0.0;
}

cplx gamma_fn(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return gamma_right(z);
  return pi / (sinpi(z) * gamma_right(1.0 - z));
}

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() >= 0.5) return 1.0 / gamma_right(z);
  return sinpi(z) * gamma_right(1.0 - z) / pi;
}

cplx digamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return digamma_right(z);
  return digamma_right(1.0 - z) - pi * cotpi(z);
}

cplx digamma_over_gamma(cplx z) {
  double k;
  if (near_integer(z, k) && k <= 0.0) {
    const int m = int(-k);
    double f = 1.0;
    for (int j = 2; j <= m; ++j) f *= j;
    return (m % 2 == 0) ? -f : f;
  }
  if (z.real() >= 0.5) return digamma_right(z) / gamma_right(z);
  // psi(z)/Gamma(z) = [psi(1-z) sin(pi z) - pi cos(pi z)] Gamma(1-z) / pi
  const double kk = std::round(z.real());
  const cplx r = z - kk;
  const double sgn = std::fmod(std::abs(kk), 2.0) == 1.0 ? -1.0 : 1.0;
  const cplx s = sgn * std::sin(pi * r);
  const cplx c = sgn * std::cos(pi * r);
  return (digamma_right(1.0 - z) * s - pi * c) * gamma_right(1.0 - z) / pi;
}

}  // namespace dsk
