#pragma once

#include <vector>

#include "dsk/crown.hpp"
#include "dsk/quadrature.hpp"
#include "dsk/test_function.hpp"

namespace dsk {

enum class PairingRoute { limit, pointwise };

const char* route_name(PairingRoute r);

struct GridOptions {
  int omega_order = 32;       // Gauss-Legendre nodes in the cap polar angle
  int s_nodes = 16;           // nodes per s panel
  double s_max_panel = 0.05;
  GradingOptions grading{16, 0.15, 40, 0.05};
  int support_scan = 400;     // samples used to locate the s-support when it is not known exactly
};

GridOptions refined(const GridOptions& g, int factor);

struct QuadNode {
  double s;
  int omega;      // index into QuadratureGrid::omegas
  double weight;  // includes cosh^{n-1} s and the cap weight
};

struct QuadratureGrid {
  int n = 0;
  std::vector<Eigen::VectorXd> omegas;
  std::vector<QuadNode> nodes;
  bool crosses_cut = false;

  LorentzVector point(const QuadNode& q) const { return de_sitter_chart(q.s, omegas[q.omega]); }
  double measure() const;
};

// Lightcone of e_n inside the support: y_n = cosh s * omega_n = 1.
bool support_crosses_cut(const TestFunction& phi);
bool support_contains_vertex(const TestFunction& phi);

// Cut-adapted grid over the support of phi: s split and graded at the lightcone crossings.
QuadratureGrid build_grid(const TestFunction& phi, const GridOptions& opt = {});
// Plain grid over the whole support box, no cut handling.
QuadratureGrid box_grid(const SupportBox& box, const GridOptions& opt = {});

// Psi^lambda (which = psi) or tilde Psi^lambda off the lightcone of e_n.
cplx psi_bv_pointwise(const SpectralParam& sp, const LorentzVector& y, KernelKind which);

// Same table from (y_0, y_n) alone, without the lightcone guard; exactly on the cone it returns 0.
cplx psi_bv_value(const SpectralParam& sp, double y0, double yn, KernelKind which);

struct PairingResult {
  cplx value;
  double residual = 0.0;   // Richardson residual, 0 for the pointwise route
  int order = 0;
  bool converged = true;
  std::vector<double> eps;
  std::vector<cplx> ladder_values;
  std::size_t nodes = 0;
};

CrownSide side_for(KernelKind which);

// Richardson limit of int conj(phi(y)) K(crown_approach_point(eps, side), y) dmu(y) as eps -> 0+.
PairingResult pair_limit(const SpectralParam& sp, const TestFunction& phi, CrownSide side,
                         const std::vector<double>& eps_ladder, const GridOptions& opt = {});

// Quadrature of psi_bv_pointwise against conj(phi).
PairingResult pair_pointwise(const SpectralParam& sp, const TestFunction& phi, KernelKind which,
                             const GridOptions& opt = {});

PairingResult pair(const SpectralParam& sp, const TestFunction& phi, KernelKind which, PairingRoute route,
                   const std::vector<double>& eps_ladder, const GridOptions& opt = {});

struct WeakKgReport {
  double residual = 0.0;
  cplx theta_phi;
  cplx theta_laplacian;
};

// |Theta(Delta phi) - (rho^2 - lambda^2) Theta(phi)| / (1 + |Theta(phi)|)
WeakKgReport weak_kg_check(const SpectralParam& sp, const TestFunction& phi, KernelKind which, PairingRoute route,
                           double fd_step, int fd_order = 4, const std::vector<double>& eps_ladder = {},
                           const GridOptions& opt = {});

// |Theta(phi o h) - Theta(phi)| / (1 + |Theta(phi)|) for h fixing e_n.
double h_invariance_check(const SpectralParam& sp, const TestFunction& phi, const GroupElement& h, KernelKind which,
                          PairingRoute route, const std::vector<double>& eps_ladder = {},
                          const GridOptions& opt = {});

}  // namespace dsk
