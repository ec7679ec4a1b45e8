#include "dsk/sphere_green.hpp"

#include <cmath>
#include <fmt/format.h>

#include "dsk/parallel.hpp"
#include "dsk/quadrature.hpp"
#include "dsk/special.hpp"

namespace dsk {

SpherePoint SpherePoint::make(double x0, const Eigen::VectorXd& spatial) {
  if (spatial.size() < 2) throw InvalidInput("SpherePoint: need n >= 2 spatial coordinates");
  if (std::abs(x0 * x0 + spatial.squaredNorm() - 1.0) > GeometryTolerances{}.manifold)
    throw InvalidInput("SpherePoint: not on the unit sphere");
  return {x0, spatial};
}

SpherePoint reflect_sigma(const SpherePoint& p) { return {-p.x0, p.spatial}; }

double sphere_dot(const SpherePoint& x, const SpherePoint& y) {
  if (x.dim() != y.dim()) throw InvalidInput("sphere_dot: dimension mismatch");
  return x.x0 * y.x0 + x.spatial.dot(y.spatial);
}

SpherePoint random_upper_point(int n, std::mt19937_64& rng, double min_x0) {
  for (;;) {
    const Eigen::VectorXd v = random_unit_vector(n + 1, rng);
    const double x0 = std::abs(v(0));
    if (x0 >= min_x0) return {x0, v.tail(n)};
  }
}

namespace {

// C_k^rho(u) for k = 0..K
std::vector<double> gegenbauer_table(double rho, int K, double u) {
  std::vector<double> c(K + 1);
  c[0] = 1.0;
  if (K >= 1) c[1] = 2.0 * rho * u;
  for (int k = 2; k <= K; ++k) c[k] = (2.0 * (k + rho - 1.0) * u * c[k - 1] - (k + 2.0 * rho - 2.0) * c[k - 2]) / k;
  return c;
}

double filtered_sum(const SpectralParam& sp, const std::vector<double>& geg, int K, const GreenOptions& opt) {
  const double rho = sp.rho();
  const cplx lam2 = sp.lambda() * sp.lambda();
  double s = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double d = ((k + rho) * (k + rho) - lam2).real();
    if (!(d > 0.0)) throw InvariantBreach("green_kernel: nonpositive spectral denominator");
    const double x = double(k) / (K + 1);
    const double filt = std::exp(-opt.filter_strength * std::pow(x, 2 * opt.filter_order));
    s += filt * (k + rho) / rho * geg[k] / d;
  }
  return s / sphere_volume(sp.n());
}

}  // namespace

double zonal_harmonic(int n, int k, double u) {
  const double rho = 0.5 * (n - 1);
  const std::vector<double> c = gegenbauer_table(rho, k, u);
  return (k + rho) / rho * c[k] / sphere_volume(n);
}

GreenValue green_kernel(const SpectralParam& sp, double u, int K, const GreenOptions& opt) {
  if (!(u >= -1.0 && u < 1.0)) throw InvalidInput("green_kernel: cos(theta) must lie in [-1, 1); the diagonal is singular");
  if (K < 0) throw InvalidInput("green_kernel: negative truncation order");
  const std::vector<double> geg = gegenbauer_table(sp.rho(), K, u);
  GreenValue g;
  g.K = K;
  g.value = filtered_sum(sp, geg, K, opt);
  const double half = filtered_sum(sp, geg, K / 2, opt);
  g.tail_bound = std::abs(g.value - half) / std::max(std::abs(g.value), 1e-300);
  return g;
}

GreenValue green_kernel_adaptive(const SpectralParam& sp, double u, const GreenOptions& opt) {
  if (opt.k_max < 1) throw InvalidInput("green_kernel: K cap must be positive");
  int K = std::min(opt.k_min, opt.k_max);
  for (;;) {
    GreenValue g = green_kernel(sp, u, K, opt);
    if (g.tail_bound <= opt.tail_target || K >= opt.k_max) return g;
    K = std::min(2 * K, opt.k_max);
  }
}

GreenValue phi_sigma(const SpectralParam& sp, const SpherePoint& x, const SpherePoint& y, const GreenOptions& opt) {
  if (!(x.x0 > 0.0) || !(y.x0 > 0.0)) throw InvalidInput("phi_sigma: points must lie in the open upper hemisphere");
  if (x.dim() != sp.n() || y.dim() != sp.n()) throw InvalidInput("phi_sigma: dimension mismatch");
  return green_kernel_adaptive(sp, sphere_dot(x, reflect_sigma(y)), opt);
}

RpGramReport rp_gram_check(const SpectralParam& sp, const std::vector<SpherePoint>& points, const GreenOptions& opt,
                           double tol_psd) {
  if (points.empty()) throw InvalidInput("rp_gram_check: no points");
  const std::size_t N = points.size();
  Eigen::MatrixXcd m(N, N);
  std::vector<double> tails(N * N);
  parallel_for(N * N, [&](std::size_t idx) {
    const std::size_t j = idx / N, k = idx % N;
    const GreenValue g = phi_sigma(sp, points[j], points[k], opt);
    m(j, k) = g.value;
    tails[idx] = g.tail_bound;
  });
  RpGramReport r;
  r.gram = analyze_gram(m, tol_psd);
  for (double t : tails) r.max_tail_bound = std::max(r.max_tail_bound, t);
  r.tails_ok = r.max_tail_bound <= opt.tail_target;
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = j + 1; k < N; ++k)
      if ((points[j].spatial - points[k].spatial).norm() + std::abs(points[j].x0 - points[k].x0) < 1e-12)
        r.gram.warnings.push_back(fmt::format("points {} and {} coincide: near-singular Gram matrix", j, k));
  if (!r.tails_ok)
    r.gram.warnings.push_back(fmt::format("spectral tail bound {:.3e} above target {:.1e}", r.max_tail_bound, opt.tail_target));
  return r;
}

ProportionalityReport proportionality_check(const SpectralParam& sp,
                                            const std::vector<std::pair<SpherePoint, SpherePoint>>& pairs,
                                            const GreenOptions& opt) {
  if (pairs.size() < 2) throw InvalidInput("proportionality_check: need at least two pairs");
  const std::size_t N = pairs.size();
  std::vector<double> ratio(N, 0.0), tails(N, 0.0);
  std::vector<char> used(N, 0);
  parallel_for(N, [&](std::size_t j) {
    const auto& [x, y] = pairs[j];
    const cplx psi = psi_lambda(sp, x.crown(), y.crown());
    const GreenValue g = phi_sigma(sp, x, y, opt);
    tails[j] = g.tail_bound;
    if (std::abs(psi) < 1e-12) return;
    ratio[j] = g.value / psi.real();
    used[j] = 1;
  });
  ProportionalityReport r;
  double sum = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    r.max_tail_bound = std::max(r.max_tail_bound, tails[j]);
    if (!used[j]) {
      ++r.skipped;
      r.notices.push_back(fmt::format("pair {} skipped: kernel value near zero", j));
      continue;
    }
    sum += ratio[j];
    ++r.pairs_used;
  }
  if (r.pairs_used == 0) throw InvalidInput("proportionality_check: every pair was skipped");
  r.ratio = sum / r.pairs_used;
  for (std::size_t j = 0; j < N; ++j)
    if (used[j]) r.max_deviation = std::max(r.max_deviation, std::abs(ratio[j] - r.ratio) / std::abs(r.ratio));
  return r;
}

double analytic_green_ratio(const SpectralParam& sp) {
  const double n = sp.n();
  const cplx g = gamma_fn(sp.a()) * gamma_fn(sp.b());
  return g.real() / (std::pow(4.0 * pi, 0.5 * n) * std::tgamma(0.5 * n));
}

}  // namespace dsk
