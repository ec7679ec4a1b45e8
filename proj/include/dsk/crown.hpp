#pragma once

#include <string>
#include <vector>

#include "dsk/lorentz.hpp"
#include "dsk/spectral.hpp"

namespace dsk {

// Point of the crown Xi, its conjugate XiBar, or of dS^n itself.
struct CrownPoint {
  ComplexLorentzVector point;
  CrownSide side;

  // Side read off from the imaginary part: future timelike -> Xi, past -> XiBar, zero -> dS.
  static CrownPoint make(const ComplexLorentzVector& z, double tol = GeometryTolerances{}.manifold);
  static CrownPoint from_real(const LorentzVector& y);
  // Sphere point (i x0, x) with x0 != 0.
  static CrownPoint sphere(double x0, const Eigen::VectorXd& spatial);
  // Point g * (+-i e_0) of the hyperboloid H^n (Xi) or its conjugate.
  static CrownPoint hyperbolic(const GroupElement& g, CrownSide side = CrownSide::xi);

  CrownPoint conj() const;
  int dim() const { return point.dim(); }
};

// Classification of Im z: true when it lies in the open future (past) cone.
bool in_crown(const ComplexLorentzVector& z, CrownSide side, double tol = GeometryTolerances{}.manifold);

enum class KernelKind { psi, psi_tilde };

const char* kernel_name(KernelKind k);

// (1 + [z, conj(w)]) / 2
cplx kernel_argument(const CrownPoint& z, const CrownPoint& w);

// Hypergeometric formula at kernel_argument with no side check.
cplx kernel_formula(const SpectralParam& sp, const ComplexLorentzVector& z, const ComplexLorentzVector& w);

cplx psi_lambda(const SpectralParam& sp, const CrownPoint& z, const CrownPoint& w);
cplx psi_tilde_lambda(const SpectralParam& sp, const CrownPoint& z, const CrownPoint& w);
cplx kernel_value(const SpectralParam& sp, KernelKind which, const CrownPoint& z, const CrownPoint& w);

struct GramReport {
  int size = 0;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double hermiticity_error = 0.0;
  double tol_psd = 1e-10;
  bool verdict = false;
  std::vector<std::string> warnings;
};

// Eigen-analysis of an (approximately) Hermitian matrix.
GramReport analyze_gram(const Eigen::MatrixXcd& m, double tol_psd = 1e-10);

GramReport gram_check(const SpectralParam& sp, const std::vector<CrownPoint>& points, KernelKind which,
                      double tol_psd = 1e-10);

// Psi_lambda(x, i e_0) for x in H^n.
cplx phi_lambda_closed(const SpectralParam& sp, const CrownPoint& x);

// 0th coordinate of g (e_0 + e_n).
double iwasawa_a_value(const GroupElement& g);

// Normalized integral over v in S^{n-1} of a(g^{-1} (1, v))^{-lambda-rho}.
cplx spherical_function_integral(const SpectralParam& sp, const GroupElement& g, int order = 64);

struct ContinuityReport {
  cplx limit;                       // direct evaluation at the limiting argument
  std::vector<double> eps;
  std::vector<cplx> values;         // Psi_lambda(z_k, e_n)
  std::vector<double> errors;       // |values_k - limit|
  double observed_rate = 0.0;       // slope of log error against log eps
  bool converged = false;
};

// Approaches y in dS^n from Xi along g_y exp(i eps h) e_n.
ContinuityReport continuity_extension_check(const SpectralParam& sp, const LorentzVector& y,
                                            const std::vector<double>& eps_ladder);

}  // namespace dsk
