#include <doctest.h>

#include "dsk/microlocal.hpp"
#include "helpers.hpp"

using namespace dsk;

namespace {
LorentzVector lv(std::initializer_list<double> v) {
  Eigen::VectorXd c(v.size());
  int i = 0;
  for (double x : v) c(i++) = x;
  return LorentzVector(c);
}
CovectorPoint at_en(std::initializer_list<double> v) {
  Eigen::VectorXd c(v.size());
  int i = 0;
  for (double x : v) c(i++) = x;
  return {LorentzVector::basis(int(v.size()), int(v.size())), c};
}
}  // namespace

TEST_CASE("predicted wavefront set at the vertex") {
  const auto sp = SpectralParam::make(2, 0.3);
  CHECK(predicted_wf_membership(sp, at_en({-1.0, 1.0}), KernelKind::psi));
  CHECK_FALSE(predicted_wf_membership(sp, at_en({1.0, 1.0}), KernelKind::psi));
  CHECK(predicted_wf_membership(sp, at_en({1.0, 1.0}), KernelKind::psi_tilde));
  CHECK(predicted_wf_membership(sp, at_en({-1.0, 0.5}), KernelKind::psi));
  CHECK_FALSE(predicted_wf_membership(sp, at_en({0.0, 1.0}), KernelKind::psi));
  // conic
  CHECK(predicted_wf_membership(sp, at_en({-7.0, 7.0}), KernelKind::psi));
}

TEST_CASE("predicted wavefront set on the cone") {
  const auto sp = SpectralParam::make(2, 0.3);
  const auto base = lv({0.5, 0.5, 1.0});
  Eigen::VectorXd v;
  REQUIRE(lightcone_offset(base, v));
  CHECK(v(0) == doctest::Approx(0.5));
  CHECK_FALSE(lightcone_offset(lv({0.0, 0.0, -1.0}), v));
  // sgn(v0) (-v0, v1) = (-0.5, 0.5) for Psi, its negative for tilde Psi
  CHECK(predicted_wf_membership(sp, {base, Eigen::Vector2d(-1.0, 1.0)}, KernelKind::psi));
  CHECK_FALSE(predicted_wf_membership(sp, {base, Eigen::Vector2d(1.0, -1.0)}, KernelKind::psi));
  CHECK(predicted_wf_membership(sp, {base, Eigen::Vector2d(1.0, -1.0)}, KernelKind::psi_tilde));
  CHECK_FALSE(predicted_wf_membership(sp, {base, Eigen::Vector2d(1.0, 1.0)}, KernelKind::psi));
  const auto spacelike = lv({0.0, 0.0, -1.0});
  CHECK_FALSE(predicted_wf_membership(sp, {spacelike, Eigen::Vector2d(-1.0, 1.0)}, KernelKind::psi));
}

TEST_CASE("mirror symmetry and no overlap") {
  const auto sp = SpectralParam::make(3, 0.5);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    Eigen::VectorXd xi = Eigen::VectorXd::Random(3);
    const Eigen::VectorXd spatial = random_unit_vector(2, rng);
    const double t = std::uniform_real_distribution<double>(-1, 1)(rng);
    Eigen::VectorXd b(4);
    b << t, t * spatial(0), t * spatial(1), 1.0;
    const CovectorPoint p{LorentzVector(b), xi};
    const CovectorPoint q{LorentzVector(b), -xi};
    CHECK(predicted_wf_membership(sp, p, KernelKind::psi) == predicted_wf_membership(sp, q, KernelKind::psi_tilde));
    CHECK(predicted_wf_membership(sp, p, KernelKind::psi) ==
          predicted_wf_membership(sp, {p.base, 3.0 * xi}, KernelKind::psi));
  }
  for (KernelKind which : {KernelKind::psi, KernelKind::psi_tilde}) {
    const OverlapReport r = wf_no_overlap_check(SpectralParam::make(2, 0.3), 1000, which);
    CHECK(r.passed);
    CHECK(r.violations == 0);
    CHECK(r.members > 0);
  }
}

TEST_CASE("one dimensional probe") {
  const auto sp = SpectralParam::make(2, 0.3);
  for (BoundarySide side : {BoundarySide::plus_i0, BoundarySide::minus_i0}) {
    const auto f = [&](double x) { return hyp2f1_real_line(sp, x, side); };
    const bool plus = side == BoundarySide::plus_i0;
    CHECK(windowed_decay_probe_1d(f, 1.0, 1.0, {1.0}).classification == (plus ? DecayClass::slow : DecayClass::rapid));
    CHECK(windowed_decay_probe_1d(f, 1.0, -1.0, {1.0}).classification == (plus ? DecayClass::rapid : DecayClass::slow));
  }
  const auto analytic = [&](double x) { return family_hyp2f1(sp, x); };
  CHECK(windowed_decay_probe_1d(analytic, 0.4, 1.0, {}).classification == DecayClass::rapid);
  CHECK(classify_exponent(1.0, {}) == DecayClass::slow);
  CHECK(classify_exponent(2.5, {}) == DecayClass::inconclusive);
  CHECK(classify_exponent(6.0, {}) == DecayClass::rapid);
  ProbeOptions bad;
  bad.max_phase_per_panel = 40.0;
  CHECK_THROWS_AS(windowed_decay_probe_1d(analytic, 0.4, 1.0, {}, bad), InvalidInput);
  CHECK_THROWS_AS(windowed_decay_probe_1d(analytic, 0.4, 0.0, {}), InvalidInput);
}

TEST_CASE("plane probe of a smooth function is rapid in every direction") {
  const auto f = [](const Eigen::Vector2d& x) { return cplx(std::cos(x(0) + 2 * x(1))); };
  ProbeOptions o;
  const PlaneProbe p(f, Eigen::Vector2d(0.1, 0.2), Eigen::Vector2d(1.0, 0.0), o);
  for (double a : {0.0, 1.0, 2.0}) CHECK(p.probe(Eigen::Vector2d(std::cos(a), std::sin(a))).classification == DecayClass::rapid);
  const auto jump = [](const Eigen::Vector2d& x) { return cplx(x(0) > 0.0 ? 1.0 : 0.0); };
  const PlaneProbe q(jump, Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(1.0, 0.0), o);
  CHECK(q.probe(Eigen::Vector2d(1.0, 0.0)).classification == DecayClass::slow);
  CHECK(q.probe(Eigen::Vector2d(0.0, 1.0)).classification == DecayClass::rapid);
}
