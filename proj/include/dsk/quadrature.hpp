#pragma once

#include <Eigen/Dense>
#include <vector>

namespace dsk {

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
  void append(const Rule1D& o);
  double total_weight() const;
};

// Gauss-Legendre rule with m nodes on [lo, hi].
Rule1D gauss_legendre(int m, double lo = -1.0, double hi = 1.0);

// Uniform panels no longer than max_panel, m nodes each.
Rule1D composite_gauss(double lo, double hi, int m, double max_panel);

struct GradingOptions {
  int nodes_per_panel = 16;
  double ratio = 0.15;  // successive panel lengths shrink by this factor toward the singular point
  int levels = 24;
  double max_panel = 0.25;
};

// Panels graded geometrically toward lo (toward_lo) or hi.
Rule1D graded_rule(double lo, double hi, bool toward_lo, const GradingOptions& opt);

// Rule on [lo, hi] graded toward every listed interior or end point.
Rule1D split_graded_rule(double lo, double hi, std::vector<double> singular, const GradingOptions& opt);

// Points and weights on S^m embedded in R^{m+1}; weights sum to vol(S^m).
struct SphereRule {
  std::vector<Eigen::VectorXd> points;
  std::vector<double> weights;
  double total_weight() const;
};

SphereRule sphere_rule(int m, int order);

// Geodesic cap {omega in S^{d-1} : angle(omega, center) <= radius}, polar angle by
// Gauss-Legendre and the transverse sphere S^{d-2} by sphere_rule.
SphereRule cap_rule(const Eigen::VectorXd& center, double radius, int order);

double sphere_volume(int m);

}  // namespace dsk
