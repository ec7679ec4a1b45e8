#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dsk/crown.hpp"
#include "dsk/quadrature.hpp"

namespace dsk {

// Base point on dS^n with a covector (v_0, ..., v_{n-1}) in the projection chart
// (y_0, ..., y_{n-1}) around e_n.
struct CovectorPoint {
  LorentzVector base;
  Eigen::VectorXd covector;
};

// Null tangent vector v at e_n with base = e_n + v, if the base lies on the lightcone of e_n.
bool lightcone_offset(const LorentzVector& base, Eigen::VectorXd& v, double tol = 1e-10);

// Predicted analytic wavefront set of Psi^lambda / tilde Psi^lambda.
bool predicted_wf_membership(const SpectralParam& sp, const CovectorPoint& cp, KernelKind which,
                             double direction_tol = 1e-9);

struct OverlapReport {
  bool passed = true;
  int samples = 0;
  int members = 0;
  int violations = 0;
};

// Samples covector points at e_n and on its lightcone and checks that (x, xi) and
// (x, -xi) are never both members.
OverlapReport wf_no_overlap_check(const SpectralParam& sp, int samples, KernelKind which, std::uint64_t seed = 1);

enum class DecayClass { rapid, slow, inconclusive };

const char* decay_name(DecayClass c);

struct ProbeOptions {
  double window_radius = 0.3;
  std::vector<double> sigma_times_radius{20, 40, 80, 160, 320};
  double p_slow = 1.5;
  double p_rapid = 4.0;
  int nodes_per_panel = 16;
  double max_phase_per_panel = 8.0;  // sigma_max * panel length
  double grading_ratio = 0.15;
  int grading_levels = 40;
};

struct DecayReport {
  Eigen::VectorXd direction;
  std::vector<double> sigmas;
  std::vector<double> magnitudes;  // |windowed Fourier transform|
  double exponent = 0.0;           // minus the fitted slope of log magnitude against log sigma
  DecayClass classification = DecayClass::inconclusive;
  double p_slow = 1.5;
  double p_rapid = 4.0;
};

DecayClass classify_exponent(double p, const ProbeOptions& opt);

// Bump-windowed transform int chi(x) f(x) exp(-i sigma xi (x - x0)) dx along the ladder.
// singular: points where f is not analytic, used to grade the grid.
DecayReport windowed_decay_probe_1d(const std::function<cplx(double)>& f, double x0, double xi,
                                    const std::vector<double>& singular, const ProbeOptions& opt = {});

// Probe data for one base point in the plane, sampled once for every direction.
class PlaneProbe {
 public:
  // f is sampled on a disc of radius window_radius around x0, with the grid graded
  // toward the line through x0 with unit normal line_normal.
  PlaneProbe(const std::function<cplx(const Eigen::Vector2d&)>& f, const Eigen::Vector2d& x0,
             const Eigen::Vector2d& line_normal, const ProbeOptions& opt = {});
  DecayReport probe(const Eigen::Vector2d& xi) const;
  std::size_t nodes() const { return w_.size(); }

 private:
  Eigen::Vector2d x0_;
  ProbeOptions opt_;
  std::vector<Eigen::Vector2d> x_;
  std::vector<cplx> w_;  // weight * window * f
};

struct WfProbeRow {
  double angle_deg;
  DecayReport report;
  bool predicted;
  bool agrees;
};

struct WfProbeTable {
  std::vector<WfProbeRow> rows;
  int agreements = 0;
};

// Probes the n = 2 chart restriction (p0, p1) -> (p0, p1, sqrt(1 + p0^2 - p1^2)) of the
// boundary-value distribution around a lightcone base point in `directions` equally spaced directions.
WfProbeTable wf_probe_de_sitter(const SpectralParam& sp, const Eigen::Vector2d& base, int directions,
                                KernelKind which, const ProbeOptions& opt = {});

}  // namespace dsk
