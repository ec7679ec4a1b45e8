#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "dsk/common.hpp"

namespace dsk {

// Point of R^{1,n}; index 0 is the time coordinate.
class LorentzVector {
 public:
  explicit LorentzVector(Eigen::VectorXd coords);
  static LorentzVector basis(int n, int i);

  int dim() const { return int(c_.size()) - 1; }
  const Eigen::VectorXd& coords() const { return c_; }
  double operator[](int i) const { return c_(i); }

 private:
  Eigen::VectorXd c_;
};

// Point of C^{1+n}.
class ComplexLorentzVector {
 public:
  explicit ComplexLorentzVector(Eigen::VectorXcd coords);
  ComplexLorentzVector(const LorentzVector& real);
  static ComplexLorentzVector basis(int n, int i);

  int dim() const { return int(c_.size()) - 1; }
  const Eigen::VectorXcd& coords() const { return c_; }
  cplx operator[](int i) const { return c_(i); }
  ComplexLorentzVector conj() const { return ComplexLorentzVector(c_.conjugate()); }
  ComplexLorentzVector operator*(cplx s) const { return ComplexLorentzVector(c_ * s); }
  bool is_real(double tol = 0.0) const { return c_.imag().cwiseAbs().maxCoeff() <= tol; }
  LorentzVector real() const { return LorentzVector(c_.real()); }

 private:
  Eigen::VectorXcd c_;
};

// -z0 w0 + sum_j zj wj, no conjugation.
cplx bilinear_form(const ComplexLorentzVector& z, const ComplexLorentzVector& w);
double bilinear_form(const LorentzVector& x, const LorentzVector& y);

bool on_de_sitter(const LorentzVector& x, double tol = GeometryTolerances{}.manifold);
bool on_complex_de_sitter(const ComplexLorentzVector& z, double tol = GeometryTolerances{}.manifold);

enum class ConeClass { future, past, spacelike, lightlike, coincident };

const char* cone_name(ConeClass c);

// Causal position of y relative to x.
ConeClass classify_interval(const LorentzVector& x, const LorentzVector& y,
                            const GeometryTolerances& tol = {});

// Element of SO(1,n)_e.
class GroupElement {
 public:
  // Validates membership in the identity component unless told otherwise.
  explicit GroupElement(Eigen::MatrixXd m, bool validate = true, double tol = GeometryTolerances{}.group);
  static GroupElement identity(int n);

  int dim() const { return int(m_.rows()) - 1; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& o) const;
  LorentzVector operator*(const LorentzVector& x) const;
  ComplexLorentzVector operator*(const ComplexLorentzVector& z) const;
  // Largest |[g ei, g ej] - [ei, ej]| over basis pairs.
  double form_defect() const;

 private:
  Eigen::MatrixXd m_;
};

// a_t mixing coordinates 0 and n.
GroupElement boost_a(int n, double t);
// Boost in the (0, axis) plane.
GroupElement boost(int n, int axis, double t);
// Rotation in the (i, j) plane of spatial coordinates, 1 <= i, j <= n.
GroupElement rotation(int n, int i, int j, double angle);

// exp(i t h) with h the (0,n)-boost generator, so exp(t h) = a_t.
Eigen::MatrixXcd h_boost_generator_exp(int n, cplx t);

enum class CrownSide { xi, xi_bar, boundary };

const char* crown_side_name(CrownSide s);

// exp(+-i eps h) e_n = (+-i sin eps, 0, ..., 0, cos eps); tends to e_n as eps -> 0+.
ComplexLorentzVector crown_approach_point(int n, double eps, CrownSide side);

// (sinh s, cosh s * omega) with omega on S^{n-1}.
LorentzVector de_sitter_chart(double s, const Eigen::VectorXd& omega);
double chart_measure_weight(int n, double s);

struct ChartCoords {
  double s;
  Eigen::VectorXd omega;
};
ChartCoords chart_coords(const LorentzVector& y);

// Element fixing e_n: rotation in coordinates 1..n-1 (seed 0 means none) after a (0,1)-boost.
GroupElement random_H_element(int n, double rapidity, std::uint64_t rotation_seed);

// Generic element k1 a_t k2 with |t| <= max_rapidity.
GroupElement random_G_element(int n, std::mt19937_64& rng, double max_rapidity = 1.0);

// Spatial rotation carrying e_n to the unit vector omega in R^n.
GroupElement rotation_to(const Eigen::VectorXd& omega);

// An element g with g e_n = y.
GroupElement moving_e_n_to(const LorentzVector& y);

// Euclidean dot with every sample is >= -tol.
bool dual_cone_contains(const Eigen::VectorXd& eta, const std::vector<Eigen::VectorXd>& cone_samples,
                        double tol = GeometryTolerances{}.cone);

Eigen::VectorXd random_unit_vector(int dim, std::mt19937_64& rng);

}  // namespace dsk
