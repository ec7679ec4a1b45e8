#include "dsk/bv.hpp"

#include <cmath>
#include <fmt/format.h>

#include "dsk/hyp2f1.hpp"
#include "dsk/parallel.hpp"
#include "dsk/richardson.hpp"

namespace dsk {

const char* route_name(PairingRoute r) { return r == PairingRoute::limit ? "limit" : "pointwise"; }

GridOptions refined(const GridOptions& g, int factor) {
  GridOptions r = g;
  r.omega_order *= factor;
  r.s_max_panel /= factor;
  r.grading.max_panel /= factor;
  return r;
}

double QuadratureGrid::measure() const {
  double m = 0.0;
  for (const auto& q : nodes) m += q.weight;
  return m;
}

namespace {

double max_omega_n(const SupportBox& b) {
  const int n = int(b.cap_center.size());
  const double theta = std::acos(std::clamp(b.cap_center(n - 1), -1.0, 1.0));
  return std::cos(std::max(0.0, theta - b.cap_radius));
}

std::vector<double> crossings(const Eigen::VectorXd& omega, double lo, double hi) {
  std::vector<double> out;
  const double wn = omega(omega.size() - 1);
  if (!(wn > 0.0) || wn >= 1.0) return out;
  const double s = std::acosh(1.0 / wn);
  for (double c : {-s, s})
    if (c > lo && c < hi) out.push_back(c);
  return out;
}

void add_column(QuadratureGrid& g, int idx, double cap_w, const Rule1D& r) {
  for (size_t i = 0; i < r.x.size(); ++i)
    g.nodes.push_back({r.x[i], idx, cap_w * r.w[i] * std::pow(std::cosh(r.x[i]), g.n - 1)});
}

}  // namespace

bool support_crosses_cut(const TestFunction& phi) {
  const SupportBox& b = phi.box();
  const double smax = std::max(std::abs(b.s_lo), std::abs(b.s_hi));
  return std::cosh(smax) * max_omega_n(b) >= 1.0;
}

bool support_contains_vertex(const TestFunction& phi) {
  const SupportBox& b = phi.box();
  return max_omega_n(b) >= 1.0 - 1e-15 && b.s_lo <= 0.0 && b.s_hi >= 0.0;
}

QuadratureGrid build_grid(const TestFunction& phi, const GridOptions& opt) {
  if (support_contains_vertex(phi))
    throw InvalidInput("build_grid: support contains the vertex e_n of the lightcone; move the test function off e_n");
  QuadratureGrid g;
  g.n = phi.dim();
  const SphereRule cap = cap_rule(phi.box().cap_center, phi.box().cap_radius, opt.omega_order);
  for (size_t i = 0; i < cap.points.size(); ++i) {
    const Eigen::VectorXd om = cap.points[i] / cap.points[i].norm();
    const auto range = phi.s_range(om, opt.support_scan);
    if (!range || !(range->second > range->first)) continue;
    const int idx = int(g.omegas.size());
    g.omegas.push_back(om);
    const auto cut = crossings(om, range->first, range->second);
    if (!cut.empty()) g.crosses_cut = true;
    const Rule1D r = cut.empty() ? composite_gauss(range->first, range->second, opt.s_nodes, opt.s_max_panel)
                                 : split_graded_rule(range->first, range->second, cut, opt.grading);
    add_column(g, idx, cap.weights[i], r);
  }
  return g;
}

QuadratureGrid box_grid(const SupportBox& box, const GridOptions& opt) {
  QuadratureGrid g;
  g.n = int(box.cap_center.size());
  const SphereRule cap = cap_rule(box.cap_center, box.cap_radius, opt.omega_order);
  const Rule1D r = composite_gauss(box.s_lo, box.s_hi, opt.s_nodes, opt.s_max_panel);
  for (size_t i = 0; i < cap.points.size(); ++i) {
    g.omegas.push_back(cap.points[i] / cap.points[i].norm());
    add_column(g, int(i), cap.weights[i], r);
  }
  return g;
}

cplx psi_bv_value(const SpectralParam& sp, double y0, double yn, KernelKind which) {
  const double x = 0.5 * (1.0 + yn);
  // Psi^lambda is the -i0 value on the future cone; tilde Psi^lambda takes the other side.
  const bool future = y0 > 0.0;
  const bool minus = (which == KernelKind::psi) == future;
  return hyp2f1_real_line(sp, x, minus ? BoundarySide::minus_i0 : BoundarySide::plus_i0);
}

cplx psi_bv_pointwise(const SpectralParam& sp, const LorentzVector& y, KernelKind which) {
  if (y.dim() != sp.n()) throw InvalidInput("psi_bv_pointwise: dimension mismatch");
  if (!on_de_sitter(y)) throw InvalidInput("psi_bv_pointwise: point is not on dS^n");
  const double yn = y[sp.n()];
  const double q = 2.0 - 2.0 * yn;  // [y - e_n, y - e_n]
  const double scale = std::max(1.0, (y.coords() - LorentzVector::basis(sp.n(), sp.n()).coords()).squaredNorm());
  if (std::abs(q) <= GeometryTolerances{}.cone * scale)
    throw InvalidInput("psi_bv_pointwise: point lies on the lightcone of e_n (singular support)");
  return psi_bv_value(sp, y[0], yn, which);
}

CrownSide side_for(KernelKind which) { return which == KernelKind::psi ? CrownSide::xi : CrownSide::xi_bar; }

PairingResult pair_limit(const SpectralParam& sp, const TestFunction& phi, CrownSide side,
                         const std::vector<double>& eps_ladder, const GridOptions& opt) {
  if (phi.dim() != sp.n()) throw InvalidInput("pair_limit: dimension mismatch");
  if (side == CrownSide::boundary) throw InvalidInput("pair_limit: side must be Xi or XiBar");
  const std::vector<double> ladder = eps_ladder.empty() ? default_eps_ladder() : eps_ladder;
  const QuadratureGrid g = build_grid(phi, opt);
  const std::size_t N = g.nodes.size();
  std::vector<double> wphi(N), y0(N), yn(N);
  for (std::size_t i = 0; i < N; ++i) {
    const auto& q = g.nodes[i];
    const Eigen::VectorXd& om = g.omegas[q.omega];
    wphi[i] = q.weight * phi(q.s, om);
    y0[i] = std::sinh(q.s);
    yn[i] = std::cosh(q.s) * om(om.size() - 1);
  }
  PairingResult res;
  res.nodes = N;
  const double sgn = side == CrownSide::xi ? 1.0 : -1.0;
  std::vector<cplx> vals(N);
  for (double eps : ladder) {
    if (!(eps > 0.0 && eps < 0.5 * pi)) throw InvalidInput("pair_limit: ladder entries must lie in (0, pi/2)");
    const double ce = std::cos(eps), se = std::sin(eps);
    parallel_for(N, [&](std::size_t i) {
      if (wphi[i] == 0.0) {
        vals[i] = 0.0;
        return;
      }
      // [z, y] for z = (+-i sin eps, 0, ..., cos eps)
      const cplx arg = 0.5 * (1.0 + ce * yn[i] - cplx(0.0, sgn * se * y0[i]));
      if (distance_to_cut(arg) <= kTolCut) throw InvariantBreach("pair_limit: crown argument reached the cut");
      vals[i] = wphi[i] * family_hyp2f1(sp, arg);
    });
    cplx sum = 0.0;
    for (const cplx& v : vals) sum += v;
    res.eps.push_back(eps);
    res.ladder_values.push_back(sum);
  }
  const Extrapolation ex = richardson_limit(res.eps, res.ladder_values, 1e-6);
  res.value = ex.value;
  res.residual = ex.residual;
  res.order = ex.order;
  res.converged = ex.converged;
  return res;
}

PairingResult pair_pointwise(const SpectralParam& sp, const TestFunction& phi, KernelKind which,
                             const GridOptions& opt) {
  if (phi.dim() != sp.n()) throw InvalidInput("pair_pointwise: dimension mismatch");
  const QuadratureGrid g = build_grid(phi, opt);
  if (g.crosses_cut && sp.n() >= 4)
    throw InvalidInput("pair_pointwise: the pointwise kernel is not locally integrable across the lightcone for n >= 4; use the limit route");
  const std::size_t N = g.nodes.size();
  std::vector<cplx> vals(N);
  parallel_for(N, [&](std::size_t i) {
    const auto& q = g.nodes[i];
    const Eigen::VectorXd& om = g.omegas[q.omega];
    const double w = q.weight * phi(q.s, om);
    vals[i] = w == 0.0 ? cplx(0.0) : w * psi_bv_value(sp, std::sinh(q.s), std::cosh(q.s) * om(om.size() - 1), which);
  });
  PairingResult res;
  res.nodes = N;
  res.value = 0.0;
  for (const cplx& v : vals) res.value += v;
  return res;
}

PairingResult pair(const SpectralParam& sp, const TestFunction& phi, KernelKind which, PairingRoute route,
                   const std::vector<double>& eps_ladder, const GridOptions& opt) {
  if (route == PairingRoute::limit) return pair_limit(sp, phi, side_for(which), eps_ladder, opt);
  return pair_pointwise(sp, phi, which, opt);
}

WeakKgReport weak_kg_check(const SpectralParam& sp, const TestFunction& phi, KernelKind which, PairingRoute route,
                           double fd_step, int fd_order, const std::vector<double>& eps_ladder,
                           const GridOptions& opt) {
  WeakKgReport r;
  r.theta_phi = pair(sp, phi, which, route, eps_ladder, opt).value;
  r.theta_laplacian = pair(sp, phi.laplacian(fd_step, fd_order), which, route, eps_ladder, opt).value;
  r.residual = std::abs(r.theta_laplacian - sp.mass_squared() * r.theta_phi) / (1.0 + std::abs(r.theta_phi));
  return r;
}

double h_invariance_check(const SpectralParam& sp, const TestFunction& phi, const GroupElement& h, KernelKind which,
                          PairingRoute route, const std::vector<double>& eps_ladder, const GridOptions& opt) {
  const int n = sp.n();
  if (h.dim() != n) throw InvalidInput("h_invariance_check: dimension mismatch");
  const Eigen::VectorXd en = LorentzVector::basis(n, n).coords();
  if ((h.matrix() * en - en).norm() > GeometryTolerances{}.group)
    throw InvalidInput("h_invariance_check: group element does not fix e_n");
  if (h.matrix().isIdentity(0.0)) return 0.0;
  const cplx base = pair(sp, phi, which, route, eps_ladder, opt).value;
  const cplx moved = pair(sp, phi.composed(h), which, route, eps_ladder, opt).value;
  return std::abs(moved - base) / (1.0 + std::abs(base));
}

}  // namespace dsk
