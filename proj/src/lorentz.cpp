#include "dsk/lorentz.hpp"

#include <cmath>

namespace dsk {

LorentzVector::LorentzVector(Eigen::VectorXd coords) : c_(std::move(coords)) {
  if (c_.size() < 3) throw InvalidInput("LorentzVector: need 1+n coordinates with n >= 2");
}

LorentzVector LorentzVector::basis(int n, int i) {
  if (n < 2 || i < 0 || i > n) throw InvalidInput("LorentzVector::basis: index out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n + 1);
  v(i) = 1.0;
  return LorentzVector(v);
}

ComplexLorentzVector::ComplexLorentzVector(Eigen::VectorXcd coords) : c_(std::move(coords)) {
  if (c_.size() < 3) throw InvalidInput("ComplexLorentzVector: need 1+n coordinates with n >= 2");
}

ComplexLorentzVector::ComplexLorentzVector(const LorentzVector& real) : c_(real.coords().cast<cplx>()) {}

ComplexLorentzVector ComplexLorentzVector::basis(int n, int i) { return ComplexLorentzVector(LorentzVector::basis(n, i)); }

cplx bilinear_form(const ComplexLorentzVector& z, const ComplexLorentzVector& w) {
  if (z.dim() != w.dim()) throw InvalidInput("bilinear_form: dimension mismatch");
  const auto& a = z.coords();
  const auto& b = w.coords();
  return -a(0) * b(0) + (a.tail(a.size() - 1).transpose() * b.tail(b.size() - 1)).value();
}

double bilinear_form(const LorentzVector& x, const LorentzVector& y) {
  if (x.dim() != y.dim()) throw InvalidInput("bilinear_form: dimension mismatch");
  const auto& a = x.coords();
  const auto& b = y.coords();
  return -a(0) * b(0) + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

bool on_de_sitter(const LorentzVector& x, double tol) { return std::abs(bilinear_form(x, x) - 1.0) <= tol; }

bool on_complex_de_sitter(const ComplexLorentzVector& z, double tol) {
  return std::abs(bilinear_form(z, z) - 1.0) <= tol;
}

const char* cone_name(ConeClass c) {
  switch (c) {
    case ConeClass::future: return "future";
    case ConeClass::past: return "past";
    case ConeClass::spacelike: return "spacelike";
    case ConeClass::lightlike: return "lightlike";
    case ConeClass::coincident: return "coincident";
  }
  return "?";
}

ConeClass classify_interval(const LorentzVector& x, const LorentzVector& y, const GeometryTolerances& tol) {
  if (!on_de_sitter(x, tol.manifold) || !on_de_sitter(y, tol.manifold))
    throw InvalidInput("classify_interval: point off the de Sitter manifold");
  const Eigen::VectorXd d = y.coords() - x.coords();
  const double scale = std::max(1.0, d.squaredNorm());
  if (d.norm() <= tol.manifold * (1.0 + x.coords().norm())) return ConeClass::coincident;
  const double q = bilinear_form(LorentzVector(d), LorentzVector(d));
  if (std::abs(q) <= tol.cone * scale) return ConeClass::lightlike;
  if (q > 0.0) return ConeClass::spacelike;
  return d(0) > 0.0 ? ConeClass::future : ConeClass::past;
}

GroupElement::GroupElement(Eigen::MatrixXd m, bool validate, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 3) throw InvalidInput("GroupElement: need a square (1+n)x(1+n) matrix");
  if (!validate) return;
  if (form_defect() > tol) throw InvalidInput("GroupElement: matrix does not preserve the bilinear form");
  if (m_(0, 0) < 1.0 - tol || m_.determinant() < 0.0)
    throw InvalidInput("GroupElement: matrix outside the identity component");
}

GroupElement GroupElement::identity(int n) { return GroupElement(Eigen::MatrixXd::Identity(n + 1, n + 1), false); }

GroupElement GroupElement::inverse() const {
  // eta g^T eta
  Eigen::MatrixXd inv = m_.transpose();
  inv.row(0) *= -1.0;
  inv.col(0) *= -1.0;
  return GroupElement(inv, false);
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (o.dim() != dim()) throw InvalidInput("GroupElement: dimension mismatch");
  return GroupElement(m_ * o.m_, false);
}

LorentzVector GroupElement::operator*(const LorentzVector& x) const {
  if (x.dim() != dim()) throw InvalidInput("GroupElement: dimension mismatch");
  return LorentzVector(m_ * x.coords());
}

ComplexLorentzVector GroupElement::operator*(const ComplexLorentzVector& z) const {
  if (z.dim() != dim()) throw InvalidInput("GroupElement: dimension mismatch");
  return ComplexLorentzVector(m_.cast<cplx>() * z.coords());
}

double GroupElement::form_defect() const {
  Eigen::MatrixXd eta = Eigen::MatrixXd::Identity(m_.rows(), m_.cols());
  eta(0, 0) = -1.0;
  return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
}

GroupElement boost(int n, int axis, double t) {
  if (n < 2 || axis < 1 || axis > n) throw InvalidInput("boost: axis out of range");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
  m(0, 0) = m(axis, axis) = std::cosh(t);
  m(0, axis) = m(axis, 0) = std::sinh(t);
  return GroupElement(m, false);
}

GroupElement boost_a(int n, double t) { return boost(n, n, t); }

GroupElement rotation(int n, int i, int j, double angle) {
  if (n < 2 || i < 1 || j < 1 || i > n || j > n || i == j) throw InvalidInput("rotation: plane out of range");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
  m(i, i) = m(j, j) = std::cos(angle);
  m(i, j) = -std::sin(angle);
  m(j, i) = std::sin(angle);
  return GroupElement(m, false);
}

Eigen::MatrixXcd h_boost_generator_exp(int n, cplx t) {
  if (n < 2) throw InvalidInput("h_boost_generator_exp: n must be at least 2");
  const cplx it = cplx(0.0, 1.0) * t;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n + 1, n + 1);
  m(0, 0) = m(n, n) = std::cosh(it);
  m(0, n) = m(n, 0) = std::sinh(it);
  return m;
}

const char* crown_side_name(CrownSide s) {
  switch (s) {
    case CrownSide::xi: return "Xi";
    case CrownSide::xi_bar: return "XiBar";
    case CrownSide::boundary: return "dS";
  }
  return "?";
}

ComplexLorentzVector crown_approach_point(int n, double eps, CrownSide side) {
  if (!(eps > 0.0 && eps < 0.5 * pi)) throw InvalidInput("crown_approach_point: eps must lie in (0, pi/2)");
  if (side == CrownSide::boundary) throw InvalidInput("crown_approach_point: side must be Xi or XiBar");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + 1);
  v(0) = cplx(0.0, side == CrownSide::xi ? std::sin(eps) : -std::sin(eps));
  v(n) = std::cos(eps);
  return ComplexLorentzVector(v);
}

LorentzVector de_sitter_chart(double s, const Eigen::VectorXd& omega) {
  if (omega.size() < 2) throw InvalidInput("de_sitter_chart: omega must lie on S^{n-1} with n >= 2");
  if (std::abs(omega.norm() - 1.0) > GeometryTolerances{}.manifold) throw InvalidInput("de_sitter_chart: omega is not a unit vector");
  Eigen::VectorXd x(omega.size() + 1);
  x(0) = std::sinh(s);
  x.tail(omega.size()) = std::cosh(s) * omega;
  return LorentzVector(x);
}

double chart_measure_weight(int n, double s) { return std::pow(std::cosh(s), n - 1); }

ChartCoords chart_coords(const LorentzVector& y) {
  const double s = std::asinh(y[0]);
  Eigen::VectorXd om = y.coords().tail(y.dim());
  return {s, om / om.norm()};
}

GroupElement random_H_element(int n, double rapidity, std::uint64_t rotation_seed) {
  GroupElement g = boost(n, 1, rapidity);
  if (rotation_seed == 0 || n < 3) return g;
  std::mt19937_64 rng(rotation_seed);
  std::uniform_real_distribution<double> ang(-pi, pi);
  GroupElement r = GroupElement::identity(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r = rotation(n, i, j, ang(rng)) * r;
  return r * g;
}

namespace {

GroupElement random_K(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-pi, pi);
  GroupElement r = GroupElement::identity(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) r = rotation(n, i, j, ang(rng)) * r;
  return r;
}

}  // namespace

GroupElement random_G_element(int n, std::mt19937_64& rng, double max_rapidity) {
  std::uniform_real_distribution<double> rap(-max_rapidity, max_rapidity);
  const GroupElement k1 = random_K(n, rng);
  const double t = rap(rng);
  const GroupElement k2 = random_K(n, rng);
  return k1 * boost_a(n, t) * k2;
}

GroupElement rotation_to(const Eigen::VectorXd& omega) {
  const int n = int(omega.size());
  if (n < 2) throw InvalidInput("rotation_to: need a unit vector in R^n, n >= 2");
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  u(n - 1) = 1.0;
  const Eigen::VectorXd w = omega / omega.norm();
  const double c = u.dot(w);
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  if (c < -1.0 + 1e-15) {
    r(0, 0) = -1.0;
    r(n - 1, n - 1) = -1.0;
  } else if (c < 1.0 - 1e-15) {
    Eigen::VectorXd v = w - c * u;
    v /= v.norm();
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    r += s * (v * u.transpose() - u * v.transpose()) + (c - 1.0) * (u * u.transpose() + v * v.transpose());
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
  m.bottomRightCorner(n, n) = r;
  return GroupElement(m, false);
}

GroupElement moving_e_n_to(const LorentzVector& y) {
  const ChartCoords cc = chart_coords(y);
  return rotation_to(cc.omega) * boost_a(y.dim(), cc.s);
}

bool dual_cone_contains(const Eigen::VectorXd& eta, const std::vector<Eigen::VectorXd>& cone_samples, double tol) {
  if (cone_samples.empty()) throw InvalidInput("dual_cone_contains: empty cone sample set");
  for (const auto& xi : cone_samples) {
    if (xi.size() != eta.size()) throw InvalidInput("dual_cone_contains: dimension mismatch");
    if (eta.dot(xi) < -tol) return false;
  }
  return true;
}

Eigen::VectorXd random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::VectorXd v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = nd(rng);
  } while (v.norm() < 1e-8);
  return v / v.norm();
}

}  // namespace dsk
