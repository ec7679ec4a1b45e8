#include "dsk/microlocal.hpp"

#include <cmath>
#include <random>

#include "dsk/bv.hpp"
#include "dsk/parallel.hpp"

namespace dsk {

bool lightcone_offset(const LorentzVector& base, Eigen::VectorXd& v, double tol) {
  const int n = base.dim();
  Eigen::VectorXd d = base.coords();
  d(n) -= 1.0;
  if (std::abs(d(n)) > tol) return false;
  v = d.head(n);
  if (v.norm() <= tol) return false;
  const double q = -v(0) * v(0) + v.tail(n - 1).squaredNorm();
  return std::abs(q) <= tol * std::max(1.0, v.squaredNorm());
}

bool predicted_wf_membership(const SpectralParam& sp, const CovectorPoint& cp, KernelKind which,
                             double direction_tol) {
  const int n = sp.n();
  if (cp.base.dim() != n || cp.covector.size() != n) throw InvalidInput("predicted_wf_membership: dimension mismatch");
  if (cp.covector.norm() == 0.0) throw InvalidInput("predicted_wf_membership: zero covector");
  if (!on_de_sitter(cp.base)) throw InvalidInput("predicted_wf_membership: base point is not on dS^n");
  const double sgn = which == KernelKind::psi ? 1.0 : -1.0;
  const Eigen::VectorXd en = LorentzVector::basis(n, n).coords();
  if ((cp.base.coords() - en).norm() <= 1e-10) return sgn * cp.covector(0) < 0.0;
  Eigen::VectorXd v;
  if (!lightcone_offset(cp.base, v)) return false;
  Eigen::VectorXd d = v;
  d(0) = -v(0);
  d *= sgn * (v(0) > 0.0 ? 1.0 : -1.0);
  return cp.covector.normalized().dot(d.normalized()) >= 1.0 - direction_tol;
}

OverlapReport wf_no_overlap_check(const SpectralParam& sp, int samples, KernelKind which, std::uint64_t seed) {
  const int n = sp.n();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> nd(0.0, 1.0);
  OverlapReport r;
  for (int k = 0; k < samples; ++k) {
    Eigen::VectorXd base = Eigen::VectorXd::Zero(n + 1);
    base(n) = 1.0;
    Eigen::VectorXd xi(n);
    if (uni(rng) < 0.3) {
      for (int i = 0; i < n; ++i) xi(i) = nd(rng);
    } else {
      const double radius = 0.1 + 1.9 * uni(rng);
      const Eigen::VectorXd dir = random_unit_vector(n - 1, rng);
      base(0) = uni(rng) < 0.5 ? radius : -radius;
      base.segment(1, n - 1) = radius * dir;
      const double pick = uni(rng);
      if (pick < 0.5) {
        // the predicted conormal or its negative, scaled
        Eigen::VectorXd d = base.head(n);
        d(0) = -d(0);
        xi = (pick < 0.25 ? 1.0 : -1.0) * (0.1 + 10.0 * uni(rng)) * d;
      } else {
        for (int i = 0; i < n; ++i) xi(i) = nd(rng);
      }
    }
    if (xi.norm() == 0.0) xi(0) = 1.0;
    const LorentzVector b(base);
    const bool m1 = predicted_wf_membership(sp, {b, xi}, which);
    const bool m2 = predicted_wf_membership(sp, {b, -xi}, which);
    ++r.samples;
    r.members += m1;
    if (m1 && m2) ++r.violations;
  }
  r.passed = r.violations == 0;
  return r;
}

const char* decay_name(DecayClass c) {
  switch (c) {
    case DecayClass::rapid: return "rapid";
    case DecayClass::slow: return "slow";
    case DecayClass::inconclusive: return "inconclusive";
  }
  return "?";
}

DecayClass classify_exponent(double p, const ProbeOptions& opt) {
  if (p <= opt.p_slow) return DecayClass::slow;
  if (p >= opt.p_rapid) return DecayClass::rapid;
  return DecayClass::inconclusive;
}

namespace {

void validate(const ProbeOptions& opt) {
  if (!(opt.window_radius > 0.0)) throw InvalidInput("decay probe: window radius must be positive");
  if (opt.sigma_times_radius.size() < 2) throw InvalidInput("decay probe: need at least two scales");
  for (size_t i = 0; i < opt.sigma_times_radius.size(); ++i) {
    if (!(opt.sigma_times_radius[i] > 0.0)) throw InvalidInput("decay probe: scales must be positive");
    if (i > 0 && !(opt.sigma_times_radius[i] > opt.sigma_times_radius[i - 1]))
      throw InvalidInput("decay probe: scales must increase");
  }
  if (opt.nodes_per_panel < 8 || !(opt.max_phase_per_panel > 0.0) || opt.max_phase_per_panel > 12.0)
    throw InvalidInput("decay probe: grid underresolved for the top frequency (need >= 8 nodes and phase <= 12 per panel)");
}

double window(double r2) { return r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0; }

void fit(DecayReport& rep, const ProbeOptions& opt) {
  const size_t m = rep.sigmas.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < m; ++i) {
    const double lx = std::log(rep.sigmas[i]);
    const double ly = std::log(std::max(rep.magnitudes[i], 1e-300));
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  rep.exponent = -slope;
  rep.p_slow = opt.p_slow;
  rep.p_rapid = opt.p_rapid;
  rep.classification = classify_exponent(rep.exponent, opt);
}

GradingOptions grading(const ProbeOptions& opt, double max_panel) {
  return GradingOptions{opt.nodes_per_panel, opt.grading_ratio, opt.grading_levels, max_panel};
}

}  // namespace

DecayReport windowed_decay_probe_1d(const std::function<cplx(double)>& f, double x0, double xi,
                                    const std::vector<double>& singular, const ProbeOptions& opt) {
  validate(opt);
  if (xi == 0.0) throw InvalidInput("decay probe: zero direction");
  const double R = opt.window_radius;
  const double sigma_max = opt.sigma_times_radius.back() / R;
  const double max_panel = opt.max_phase_per_panel / sigma_max;
  const Rule1D rule = split_graded_rule(x0 - R, x0 + R, singular, grading(opt, max_panel));
  std::vector<cplx> w(rule.x.size());
  parallel_for(rule.x.size(), [&](std::size_t i) {
    const double r = (rule.x[i] - x0) / R;
    const double chi = window(r * r);
    w[i] = chi == 0.0 ? cplx(0.0) : rule.w[i] * chi * f(rule.x[i]);
  });
  DecayReport rep;
  rep.direction = Eigen::VectorXd::Constant(1, xi);
  for (double sr : opt.sigma_times_radius) {
    const double sigma = sr / R;
    cplx acc = 0.0;
    for (size_t i = 0; i < w.size(); ++i) acc += w[i] * std::polar(1.0, -sigma * xi * (rule.x[i] - x0));
    rep.sigmas.push_back(sigma);
    rep.magnitudes.push_back(std::abs(acc));
  }
  fit(rep, opt);
  return rep;
}

PlaneProbe::PlaneProbe(const std::function<cplx(const Eigen::Vector2d&)>& f, const Eigen::Vector2d& x0,
                       const Eigen::Vector2d& line_normal, const ProbeOptions& opt)
    : x0_(x0), opt_(opt) {
  validate(opt);
  if (line_normal.norm() == 0.0) throw InvalidInput("decay probe: zero line normal");
  const Eigen::Vector2d nu = line_normal.normalized();
  const Eigen::Vector2d tau(-nu(1), nu(0));
  const double R = opt.window_radius;
  const double sigma_max = opt.sigma_times_radius.back() / R;
  const double max_panel = opt.max_phase_per_panel / sigma_max;
  const Rule1D along = composite_gauss(-R, R, opt.nodes_per_panel, max_panel);
  std::vector<double> wt;
  for (size_t j = 0; j < along.x.size(); ++j) {
    const double w = along.x[j];
    const double half = std::sqrt(std::max(0.0, R * R - w * w));
    const Rule1D across = split_graded_rule(-half, half, {0.0}, grading(opt, max_panel));
    for (size_t i = 0; i < across.x.size(); ++i) {
      x_.push_back(x0 + across.x[i] * nu + w * tau);
      wt.push_back(along.w[j] * across.w[i]);
    }
  }
  w_.resize(x_.size());
  parallel_for(x_.size(), [&](std::size_t i) {
    const double r2 = (x_[i] - x0).squaredNorm() / (R * R);
    const double chi = window(r2);
    w_[i] = chi == 0.0 ? cplx(0.0) : wt[i] * chi * f(x_[i]);
  });
}

DecayReport PlaneProbe::probe(const Eigen::Vector2d& xi) const {
  if (xi.norm() == 0.0) throw InvalidInput("decay probe: zero direction");
  const Eigen::Vector2d d = xi.normalized();
  DecayReport rep;
  rep.direction = d;
  for (double sr : opt_.sigma_times_radius) {
    const double sigma = sr / opt_.window_radius;
    cplx acc = 0.0;
    for (size_t i = 0; i < x_.size(); ++i) acc += w_[i] * std::polar(1.0, -sigma * d.dot(x_[i] - x0_));
    rep.sigmas.push_back(sigma);
    rep.magnitudes.push_back(std::abs(acc));
  }
  fit(rep, opt_);
  return rep;
}

WfProbeTable wf_probe_de_sitter(const SpectralParam& sp, const Eigen::Vector2d& base, int directions,
                                KernelKind which, const ProbeOptions& opt) {
  if (sp.n() != 2) throw InvalidInput("wf_probe_de_sitter: only n = 2 is supported");
  if (directions < 1) throw InvalidInput("wf_probe_de_sitter: need at least one direction");
  if (std::abs(std::abs(base(0)) - std::abs(base(1))) > 1e-12 || base.norm() < 1e-8)
    throw InvalidInput("wf_probe_de_sitter: base must lie on the lightcone of e_n, away from e_n");
  // distance from the base to the vertex and to the other cone line is |base|
  if (opt.window_radius >= base.norm())
    throw InvalidInput("wf_probe_de_sitter: window reaches the vertex e_n");
  // The cone through the base is the line p0 = p1 (or p0 = -p1).
  const Eigen::Vector2d normal = base(0) * base(1) > 0.0 ? Eigen::Vector2d(1.0, -1.0) : Eigen::Vector2d(1.0, 1.0);
  auto f = [&](const Eigen::Vector2d& p) {
    const double q = 1.0 + p(0) * p(0) - p(1) * p(1);
    return psi_bv_value(sp, p(0), std::sqrt(q), which);
  };
  const PlaneProbe probe(f, base, normal, opt);
  Eigen::VectorXd yb(3);
  yb << base(0), base(1), 1.0;
  const LorentzVector y(yb);
  WfProbeTable t;
  for (int k = 0; k < directions; ++k) {
    const double ang = 2.0 * pi * k / directions;
    const Eigen::Vector2d xi(std::cos(ang), std::sin(ang));
    WfProbeRow row{360.0 * k / directions, probe.probe(xi), false, false};
    row.predicted = predicted_wf_membership(sp, {y, xi}, which);
    row.agrees = row.predicted ? row.report.classification == DecayClass::slow
                               : row.report.classification == DecayClass::rapid;
    t.agreements += row.agrees;
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace dsk
