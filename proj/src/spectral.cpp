#include "dsk/spectral.hpp"

#include <cmath>
#include <fmt/format.h>

#include "dsk/hyp2f1.hpp"
#include "dsk/special.hpp"

namespace dsk {

bool SpectralParam::admissible(int n, cplx lambda) {
  if (n < 2) return false;
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) return false;
  const double rho = 0.5 * (n - 1);
  if (lambda.real() == 0.0) return lambda.imag() >= 0.0;
  return lambda.imag() == 0.0 && lambda.real() > 0.0 && lambda.real() < rho;
}

SpectralParam SpectralParam::make(int n, cplx lambda) {
  if (n < 2) throw InvalidInput(fmt::format("dimension n = {} must be at least 2", n));
  if (!admissible(n, lambda))
    throw InvalidInput(fmt::format("lambda = ({},{}) is not admissible for n = {}: require lambda in i[0,inf) U (0,rho), rho = {}",
                                   lambda.real(), lambda.imag(), n, 0.5 * (n - 1)));
  return SpectralParam(n, lambda);
}

const char* side_name(BoundarySide s) { return s == BoundarySide::plus_i0 ? "+i0" : "-i0"; }

cplx family_hyp2f1(const SpectralParam& sp, cplx z) { return hyp2f1_continued(sp.a(), sp.b(), sp.c(), z); }

cplx hyp2f1_boundary(const SpectralParam& sp, double x, BoundarySide side) {
  if (!std::isfinite(x) || !(x > 1.0)) throw InvalidInput("hyp2f1_boundary: x must exceed 1");
  // z = x + i0 sees log(1-z) = ln(x-1) - i pi and log(-z) = ln x - i pi.
  const double turn = side == BoundarySide::plus_i0 ? -pi : pi;
  const bool even = sp.n() % 2 == 0;
  const double switch_at = even ? kEvenLogSwitch : 2.0;
  if (x < switch_at || (even && x == switch_at))
    return hyp2f1_connection_one_minus_z(sp.a(), sp.b(), sp.c(), 1.0 - x, cplx(std::log(x - 1.0), turn));
  return hyp2f1_connection_inverse(sp.a(), sp.b(), sp.c(), 1.0 / x, cplx(std::log(x), turn));
}

cplx hyp2f1_real_line(const SpectralParam& sp, double x, BoundarySide side) {
  if (!std::isfinite(x)) throw InvalidInput("hyp2f1_real_line: x must be finite");
  if (x == 1.0) return 0.0;
  if (x > 1.0) return hyp2f1_boundary(sp, x, side);
  if (1.0 - x < 1e-10) return hyp2f1_connection_one_minus_z(sp.a(), sp.b(), sp.c(), 1.0 - x, std::log(1.0 - x));
  return family_hyp2f1(sp, x);
}

NearOneCoefficient near_one_coefficient(const SpectralParam& sp) {
  const cplx rr = rgamma(sp.a()) * rgamma(sp.b());
  if (sp.n() == 2) return {NearOneMode::log, rr, 0.0};
  const double c = sp.c();
  return {NearOneMode::power, gamma_fn(c) * gamma_fn(c - 1.0) * rr, 1.0 - c};
}

cplx cut_jump(const SpectralParam& sp, double x) {
  return hyp2f1_boundary(sp, x, BoundarySide::plus_i0) - hyp2f1_boundary(sp, x, BoundarySide::minus_i0);
}

}  // namespace dsk
