#include "dsk/crown.hpp"

#include <cmath>
#include <fmt/format.h>

#include "dsk/hyp2f1.hpp"
#include "dsk/parallel.hpp"
#include "dsk/quadrature.hpp"

namespace dsk {

bool in_crown(const ComplexLorentzVector& z, CrownSide side, double tol) {
  if (!on_complex_de_sitter(z, tol)) return false;
  const Eigen::VectorXd y = z.coords().imag();
  const LorentzVector yl(y);
  const double q = bilinear_form(yl, yl);
  const double scale = std::max(1.0, y.squaredNorm());
  switch (side) {
    case CrownSide::xi: return q < -tol * scale && y(0) > 0.0;
    case CrownSide::xi_bar: return q < -tol * scale && y(0) < 0.0;
    case CrownSide::boundary: return y.cwiseAbs().maxCoeff() <= tol;
  }
  return false;
}

CrownPoint CrownPoint::make(const ComplexLorentzVector& z, double tol) {
  if (!on_complex_de_sitter(z, tol)) throw InvalidInput("CrownPoint: point is not on the complex de Sitter space");
  for (CrownSide s : {CrownSide::boundary, CrownSide::xi, CrownSide::xi_bar})
    if (in_crown(z, s, tol)) return {z, s};
  throw InvalidInput("CrownPoint: imaginary part is not timelike, point lies in neither crown");
}

CrownPoint CrownPoint::from_real(const LorentzVector& y) {
  if (!on_de_sitter(y)) throw InvalidInput("CrownPoint: real point is not on dS^n");
  return {ComplexLorentzVector(y), CrownSide::boundary};
}

CrownPoint CrownPoint::sphere(double x0, const Eigen::VectorXd& spatial) {
  if (std::abs(x0 * x0 + spatial.squaredNorm() - 1.0) > GeometryTolerances{}.manifold)
    throw InvalidInput("CrownPoint::sphere: point is not on the unit sphere");
  if (x0 == 0.0) throw InvalidInput("CrownPoint::sphere: equator points lie on dS^n, not in a crown");
  Eigen::VectorXcd v(spatial.size() + 1);
  v(0) = cplx(0.0, x0);
  v.tail(spatial.size()) = spatial.cast<cplx>();
  return {ComplexLorentzVector(v), x0 > 0.0 ? CrownSide::xi : CrownSide::xi_bar};
}

CrownPoint CrownPoint::hyperbolic(const GroupElement& g, CrownSide side) {
  if (side == CrownSide::boundary) throw InvalidInput("CrownPoint::hyperbolic: side must be Xi or XiBar");
  const int n = g.dim();
  const cplx s = side == CrownSide::xi ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  return {g * (ComplexLorentzVector::basis(n, 0) * s), side};
}

CrownPoint CrownPoint::conj() const {
  const CrownSide s = side == CrownSide::xi ? CrownSide::xi_bar : side == CrownSide::xi_bar ? CrownSide::xi : side;
  return {point.conj(), s};
}

const char* kernel_name(KernelKind k) { return k == KernelKind::psi ? "psi" : "psi_tilde"; }

cplx kernel_argument(const CrownPoint& z, const CrownPoint& w) {
  return 0.5 * (1.0 + bilinear_form(z.point, w.point.conj()));
}

cplx kernel_formula(const SpectralParam& sp, const ComplexLorentzVector& z, const ComplexLorentzVector& w) {
  if (z.dim() != sp.n() || w.dim() != sp.n()) throw InvalidInput("kernel: point dimension differs from n");
  const cplx arg = 0.5 * (1.0 + bilinear_form(z, w.conj()));
  return family_hyp2f1(sp, arg);
}

namespace {

cplx sided_kernel(const SpectralParam& sp, const CrownPoint& z, const CrownPoint& w, CrownSide allowed,
                  const char* name) {
  for (const CrownPoint* p : {&z, &w})
    if (p->side != allowed && p->side != CrownSide::boundary)
      throw InvalidInput(fmt::format("{}: points must lie in {} or on dS^n", name, crown_side_name(allowed)));
  if (z.side == CrownSide::boundary && w.side == CrownSide::boundary)
    throw InvalidInput(fmt::format("{}: both points on dS^n; use the boundary-value distribution", name));
  if (z.dim() != sp.n() || w.dim() != sp.n()) throw InvalidInput(fmt::format("{}: dimension mismatch", name));
  const cplx arg = kernel_argument(z, w);
  if (distance_to_cut(arg) <= kTolCut)
    throw InvariantBreach(fmt::format("{}: crown argument ({}, {}) reached the cut [1,inf)", name, arg.real(), arg.imag()));
  return family_hyp2f1(sp, arg);
}

}  // namespace

cplx psi_lambda(const SpectralParam& sp, const CrownPoint& z, const CrownPoint& w) {
  return sided_kernel(sp, z, w, CrownSide::xi, "psi_lambda");
}

cplx psi_tilde_lambda(const SpectralParam& sp, const CrownPoint& z, const CrownPoint& w) {
  return sided_kernel(sp, z, w, CrownSide::xi_bar, "psi_tilde_lambda");
}

cplx kernel_value(const SpectralParam& sp, KernelKind which, const CrownPoint& z, const CrownPoint& w) {
  return which == KernelKind::psi ? psi_lambda(sp, z, w) : psi_tilde_lambda(sp, z, w);
}

GramReport analyze_gram(const Eigen::MatrixXcd& m, double tol_psd) {
  GramReport r;
  r.size = int(m.rows());
  r.tol_psd = tol_psd;
  if (m.rows() != m.cols() || m.rows() == 0) throw InvalidInput("analyze_gram: need a nonempty square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  r.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("analyze_gram: eigen-solver failed", 0, 0.0);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.trace = h.trace().real();
  r.verdict = r.min_eigenvalue >= -tol_psd * std::abs(r.trace);
  if (r.hermiticity_error > 1e-12)
    r.warnings.push_back(fmt::format("hermiticity defect {:.3e} exceeds 1e-12", r.hermiticity_error));
  if (!r.verdict)
    r.warnings.push_back(fmt::format("min eigenvalue {:.3e} below -tol_psd*trace", r.min_eigenvalue));
  return r;
}

GramReport gram_check(const SpectralParam& sp, const std::vector<CrownPoint>& points, KernelKind which,
                      double tol_psd) {
  if (points.size() < 2) throw InvalidInput("gram_check: need at least two points");
  const CrownSide side = points.front().side;
  const CrownSide expected = which == KernelKind::psi ? CrownSide::xi : CrownSide::xi_bar;
  for (const auto& p : points)
    if (p.side != side) throw InvalidInput("gram_check: points from mixed sides");
  if (side != expected)
    throw InvalidInput(fmt::format("gram_check: {} needs points in {}", kernel_name(which), crown_side_name(expected)));
  const std::size_t N = points.size();
  Eigen::MatrixXcd m(N, N);
  parallel_for(N * N, [&](std::size_t idx) {
    const std::size_t j = idx / N, k = idx % N;
    m(j, k) = kernel_value(sp, which, points[j], points[k]);
  });
  return analyze_gram(m, tol_psd);
}

cplx phi_lambda_closed(const SpectralParam& sp, const CrownPoint& x) {
  const auto& c = x.point.coords();
  if (c.real().cwiseAbs().maxCoeff() > GeometryTolerances{}.manifold || c(0).imag() <= 0.0 ||
      !on_complex_de_sitter(x.point))
    throw InvalidInput("phi_lambda_closed: point is not on the hyperboloid H^n");
  const CrownPoint o = CrownPoint::hyperbolic(GroupElement::identity(sp.n()));
  return psi_lambda(sp, x, o);
}

double iwasawa_a_value(const GroupElement& g) {
  const int n = g.dim();
  const double a = g.matrix()(0, 0) + g.matrix()(0, n);
  if (!(a > 0.0)) throw InvariantBreach("iwasawa_a_value: nonpositive a-component");
  return a;
}

cplx spherical_function_integral(const SpectralParam& sp, const GroupElement& g, int order) {
  const int n = sp.n();
  if (g.dim() != n) throw InvalidInput("spherical_function_integral: dimension mismatch");
  if (order < 2) throw InvalidInput("spherical_function_integral: quadrature order too small");
  const Eigen::MatrixXd gi = g.inverse().matrix();
  const cplx expo = -(sp.lambda() + sp.rho());
  SphereRule r = sphere_rule(n - 1, order);
  const std::vector<Eigen::VectorXd>& pts = r.points;
  const std::vector<double>& wts = r.weights;
  double total = 0.0;
  for (double w : wts) total += w;
  std::vector<cplx> vals(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    Eigen::VectorXd lift(n + 1);
    lift(0) = 1.0;
    lift.tail(n) = pts[i];
    const double a = (gi * lift)(0);
    if (!(a > 0.0)) throw InvariantBreach("spherical_function_integral: nonpositive a-component");
    vals[i] = wts[i] * std::exp(expo * std::log(a));
  });
  cplx sum = 0.0;
  for (const cplx& v : vals) sum += v;
  return sum / total;
}

ContinuityReport continuity_extension_check(const SpectralParam& sp, const LorentzVector& y,
                                            const std::vector<double>& eps_ladder) {
  if (y.dim() != sp.n()) throw InvalidInput("continuity_extension_check: dimension mismatch");
  if (!on_de_sitter(y)) throw InvalidInput("continuity_extension_check: y is not on dS^n");
  const int n = sp.n();
  if (y[n] >= 1.0 - 1e-12) throw InvalidInput("continuity_extension_check: y_n >= 1 is the singular set");
  if (eps_ladder.empty()) throw InvalidInput("continuity_extension_check: empty ladder");
  ContinuityReport r;
  r.limit = family_hyp2f1(sp, 0.5 * (1.0 + y[n]));
  const GroupElement g = moving_e_n_to(y);
  const CrownPoint en = CrownPoint::from_real(LorentzVector::basis(n, n));
  for (double eps : eps_ladder) {
    const CrownPoint z = CrownPoint::make(g * crown_approach_point(n, eps, CrownSide::xi));
    const cplx v = psi_lambda(sp, z, en);
    r.eps.push_back(eps);
    r.values.push_back(v);
    r.errors.push_back(std::abs(v - r.limit));
  }
  // least-squares slope of log error against log eps
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (size_t k = 0; k < r.eps.size(); ++k) {
    if (r.errors[k] <= 1e-14 * std::max(1.0, std::abs(r.limit))) continue;
    const double lx = std::log(r.eps[k]), ly = std::log(r.errors[k]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++m;
  }
  if (m >= 2) r.observed_rate = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  bool monotone = true;
  for (size_t k = 1; k < r.errors.size(); ++k)
    if (r.errors[k] > r.errors[k - 1] * (1.0 + 1e-9) && r.errors[k] > 1e-13 * std::max(1.0, std::abs(r.limit)))
      monotone = false;
  r.converged = monotone && (m < 2 || r.observed_rate > 0.5);
  return r;
}

}  // namespace dsk
