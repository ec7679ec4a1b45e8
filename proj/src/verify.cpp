#include "dsk/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dsk/bv.hpp"
#include "dsk/hyp2f1.hpp"
#include "dsk/microlocal.hpp"
#include "dsk/richardson.hpp"
#include "dsk/sphere_green.hpp"

namespace dsk {

Suite parse_suite(const std::string& name) {
  if (name == "hyp") return Suite::hyp;
  if (name == "kernels") return Suite::kernels;
  if (name == "rp") return Suite::rp;
  if (name == "distributions") return Suite::distributions;
  if (name == "microlocal") return Suite::microlocal;
  if (name == "all") return Suite::all;
  throw InvalidInput(fmt::format("unknown suite '{}' (hyp, kernels, rp, distributions, microlocal, all)", name));
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::hyp: return "hyp";
    case Suite::kernels: return "kernels";
    case Suite::rp: return "rp";
    case Suite::distributions: return "distributions";
    case Suite::microlocal: return "microlocal";
    case Suite::all: return "all";
  }
  return "?";
}

std::map<std::string, double> default_tolerances() {
  return {
      {"boundary", 1e-8},       {"boundary-switch", 1e-6}, {"reflection", 1e-12},  {"near-one", 1e-2},
      {"proportionality", 1e-5}, {"green-tail", 1e-8},     {"psd", 1e-10},        {"symmetry", 1e-12},
      {"spherical", 1e-6},      {"bv-offcut", 1e-6},       {"bv-cut", 1e-3},      {"kg-offcut", 1e-4},
      {"kg-cut", 1e-2},         {"kg-order", 2.0},         {"h-boost", 1e-3},     {"h-exact", 1e-12},
      {"probe-agreement", 7.0},
  };
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

struct Ctx {
  const VerifyOptions& opt;
  std::string suite;
  std::vector<CheckResult>& out;

  double tol(const std::string& key) const {
    auto it = opt.tol.find(key);
    if (it == opt.tol.end()) throw InvalidInput(fmt::format("missing tolerance '{}'", key));
    return it->second;
  }
  std::vector<double> ladder() const { return opt.eps_ladder.empty() ? default_eps_ladder() : opt.eps_ladder; }

  void at_most(const std::string& name, double measured, double t, std::string detail) {
    out.push_back({suite, name, std::isfinite(measured) && measured <= t, measured, t, "<=", std::move(detail)});
  }
  void at_least(const std::string& name, double measured, double t, std::string detail) {
    out.push_back({suite, name, std::isfinite(measured) && measured >= t, measured, t, ">=", std::move(detail)});
  }
  void fail(const std::string& name, const std::string& why) { out.push_back({suite, name, false, NAN, 0.0, "<=", why}); }
};

double rel_err(cplx a, cplx ref) { return std::abs(a - ref) / std::max(std::abs(ref), 1e-300); }

std::vector<cplx> lambdas_for(double rho, std::initializer_list<double> fractions, bool with_i) {
  std::vector<cplx> out;
  for (double f : fractions) out.push_back(f * rho);
  if (with_i) out.push_back(cplx(0.0, 1.0));
  return out;
}

std::string lam_str(cplx l) { return l.imag() != 0.0 ? fmt::format("{}i", l.imag()) : fmt::format("{:.4g}", l.real()); }

// Runs body, recording an error check instead of aborting the suite.
template <class F>
void guarded(Ctx& c, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.fail(name, fmt::format("error: {}", e.what()));
  }
}

// ---------------- hyp ----------------

void suite_hyp(Ctx& c) {
  const std::vector<double> xs{1.1, 1.5, 1.9, 2.5, 5.0};
  const std::vector<double> ladder = c.ladder();
  double worst = 0.0, worst_switch = 0.0, worst_refl = 0.0;
  std::string where, where_switch, where_refl;
  guarded(c, "boundary_limit", [&] {
    for (int n : {2, 3, 4}) {
      const double rho = 0.5 * (n - 1);
      for (cplx lam : lambdas_for(rho, {0.3, 0.9}, true)) {
        const SpectralParam sp = SpectralParam::make(n, lam);
        for (double x : xs)
          for (BoundarySide side : {BoundarySide::plus_i0, BoundarySide::minus_i0}) {
            const double sgn = side == BoundarySide::plus_i0 ? 1.0 : -1.0;
            std::vector<cplx> vals;
            for (double e : ladder) vals.push_back(family_hyp2f1(sp, cplx(x, sgn * e)));
            const Extrapolation ex = richardson_limit(ladder, vals, 1e-12);
            const cplx ref = hyp2f1_boundary(sp, x, side);
            const double err = rel_err(ex.value, ref);
            const std::string tag = fmt::format("n={} lambda={} x={} side={}", n, lam_str(lam), x, side_name(side));
            if (x == 2.5) {
              if (err > worst_switch) worst_switch = err, where_switch = tag;
            } else if (err > worst) {
              worst = err, where = tag;
            }
            if (side == BoundarySide::plus_i0) {
              const cplx minus = hyp2f1_boundary(sp, x, BoundarySide::minus_i0);
              const double r = std::abs(minus - std::conj(ref)) / std::max(1.0, std::abs(ref));
              if (r >= worst_refl) worst_refl = r, where_refl = tag;
            }
          }
      }
    }
    c.at_most("boundary_limit", worst, c.tol("boundary"), "worst at " + where);
    c.at_most("boundary_limit_x2.5", worst_switch, c.tol("boundary-switch"), "worst at " + where_switch);
    c.at_most("schwarz_reflection", worst_refl, c.tol("reflection"), "worst at " + where_refl);
  });

  for (int n : {2, 3, 4}) {
    const std::string name = fmt::format("near_one_ratio_n{}", n);
    guarded(c, name, [&] {
      const double rho = 0.5 * (n - 1);
      const double t = 1e-6;
      double worst_dev = 0.0;
      std::string at;
      for (cplx lam : lambdas_for(rho, {0.3, 0.9}, true)) {
        const SpectralParam sp = SpectralParam::make(n, lam);
        const NearOneCoefficient co = near_one_coefficient(sp);
        const cplx f = family_hyp2f1(sp, 1.0 - t);
        const cplx profile = co.mode == NearOneMode::log ? cplx(-std::log(t)) : cplx(std::pow(t, co.exponent));
        const double dev = std::abs(f / profile / co.coefficient - 1.0);
        if (dev >= worst_dev) worst_dev = dev, at = fmt::format("lambda={}", lam_str(lam));
      }
      c.at_most(name, worst_dev, c.tol("near-one"), fmt::format("ratio deviation at 1-z=1e-6, worst {}", at));
    });
  }
}

// ---------------- kernels ----------------

// Random point of Xi: g applied to a point of the upper hemisphere.
CrownPoint random_crown_point(int n, std::mt19937_64& rng) {
  const SpherePoint p = random_upper_point(n, rng);
  const GroupElement g = random_G_element(n, rng, 1.0);
  return CrownPoint::make(g * p.crown().point);
}

void suite_kernels(Ctx& c) {
  std::mt19937_64 rng(c.opt.seed);
  for (int n : {2, 3}) {
    const double rho = 0.5 * (n - 1);
    for (cplx lam : lambdas_for(rho, {0.3, 0.9}, true)) {
      const SpectralParam sp = SpectralParam::make(n, lam);
      const std::string tag = fmt::format("n{}_lambda{}", n, lam_str(lam));
      for (int kind = 0; kind < 3; ++kind) {
        const char* label = kind == 0 ? "hyperbolic" : kind == 1 ? "crown" : "crown_conjugate";
        const std::string name = fmt::format("gram_{}_{}", label, tag);
        guarded(c, name, [&] {
          std::vector<CrownPoint> pts;
          for (int k = 0; k < 30; ++k) {
            if (kind == 0) pts.push_back(CrownPoint::hyperbolic(random_G_element(n, rng, 1.5)));
            else if (kind == 1) pts.push_back(random_crown_point(n, rng));
            else pts.push_back(random_crown_point(n, rng).conj());
          }
          const KernelKind which = kind == 2 ? KernelKind::psi_tilde : KernelKind::psi;
          const GramReport r = gram_check(sp, pts, which, c.tol("psd"));
          const double floor = std::max(0.0, -r.min_eigenvalue) / r.trace;
          c.at_most(name, floor, c.tol("psd"),
                    fmt::format("30 points, min eigenvalue {:.3e}, trace {:.3e}, hermiticity {:.1e}", r.min_eigenvalue,
                                r.trace, r.hermiticity_error));
        });
      }
    }
  }

  for (int n : {2, 3}) {
    const double rho = 0.5 * (n - 1);
    const SpectralParam sp = SpectralParam::make(n, 0.3 * rho);
    const SpectralParam spi = SpectralParam::make(n, cplx(0.0, 1.0));
    double e[4] = {0, 0, 0, 0};
    guarded(c, fmt::format("symmetry_n{}", n), [&] {
      for (const SpectralParam* s : {&sp, &spi})
        for (int k = 0; k < 50; ++k) {
          const CrownPoint z = random_crown_point(n, rng), w = random_crown_point(n, rng);
          const cplx psi = psi_lambda(*s, z, w);
          const double scale = std::max(1.0, std::abs(psi));
          e[0] = std::max(e[0], std::abs(std::conj(psi) - kernel_formula(*s, z.conj().point, w.conj().point)) / scale);
          const cplx tz = psi_tilde_lambda(*s, z.conj(), w.conj());
          const cplx tw = psi_tilde_lambda(*s, w.conj(), z.conj());
          e[1] = std::max(e[1], std::abs(tz - std::conj(tw)) / scale);
          e[2] = std::max(e[2], std::abs(psi - std::conj(tz)) / scale);
          e[3] = std::max(e[3], std::abs(psi - tw) / scale);
        }
      const char* names[4] = {"conjugation", "tilde_hermitian", "chain_conjugate", "chain_swap"};
      for (int i = 0; i < 4; ++i)
        c.at_most(fmt::format("symmetry_{}_n{}", names[i], n), e[i], c.tol("symmetry"), "50 random pairs in Xi");
    });
  }

  for (int n : {2, 3}) {
    const double rho = 0.5 * (n - 1);
    for (cplx lam : lambdas_for(rho, {0.3}, true)) {
      const SpectralParam sp = SpectralParam::make(n, lam);
      const std::string name = fmt::format("spherical_integral_n{}_lambda{}", n, lam_str(lam));
      guarded(c, name, [&] {
        double worst = 0.0;
        double at = 0.0;
        for (double s : {0.25, 0.5, 1.0, 2.0}) {
          const GroupElement g = boost_a(n, s);
          const double err = rel_err(spherical_function_integral(sp, g, c.opt.quad_order),
                                     phi_lambda_closed(sp, CrownPoint::hyperbolic(g)));
          if (err >= worst) worst = err, at = s;
        }
        c.at_most(name, worst, c.tol("spherical"), fmt::format("order {}, worst at s={}", c.opt.quad_order, at));
      });
    }
  }
}

// ---------------- rp ----------------

void suite_rp(Ctx& c) {
  GreenOptions go;
  go.tail_target = c.tol("green-tail");
  if (c.opt.green_K > 0) go.k_min = go.k_max = c.opt.green_K;
  for (int n : {2, 3}) {
    const double rho = 0.5 * (n - 1);
    for (cplx lam : lambdas_for(rho, {0.3}, true)) {
      const SpectralParam sp = SpectralParam::make(n, lam);
      const std::string tag = fmt::format("n{}_lambda{}", n, lam_str(lam));
      std::mt19937_64 rng(c.opt.seed * 1000 + std::uint64_t(n) * 10 + (lam.imag() != 0.0));
      std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
      std::vector<SpherePoint> pts;
      for (int k = 0; k < 20; ++k) {
        SpherePoint x = random_upper_point(n, rng);
        SpherePoint y = random_upper_point(n, rng);
        pairs.emplace_back(std::move(x), std::move(y));
      }
      for (int k = 0; k < 20; ++k) pts.push_back(random_upper_point(n, rng));
      guarded(c, "proportionality_" + tag, [&] {
        const ProportionalityReport p = proportionality_check(sp, pairs, go);
        const bool tails_ok = p.max_tail_bound <= go.tail_target;
        const double measured = tails_ok ? p.max_deviation : std::max(p.max_deviation, 1.0);
        c.at_most("proportionality_" + tag, measured, c.tol("proportionality"),
                  fmt::format("ratio {:.12g}, pairs {}, skipped {}, spectral tail bound {:.2e} (target {:.1e}){}", p.ratio,
                              p.pairs_used, p.skipped, p.max_tail_bound, go.tail_target,
                              tails_ok ? "" : ": truncation too small"));
        c.at_most("green_ratio_closed_form_" + tag, rel_err(p.ratio, analytic_green_ratio(sp)),
                  c.tol("proportionality"), fmt::format("closed form {:.12g}", analytic_green_ratio(sp)));
      });
      guarded(c, "rp_gram_" + tag, [&] {
        const RpGramReport r = rp_gram_check(sp, pts, go, c.tol("psd"));
        const double floor = std::max(0.0, -r.gram.min_eigenvalue) / r.gram.trace;
        const bool ok = r.gram.verdict && r.tails_ok;
        c.at_most("rp_gram_" + tag, ok ? floor : std::max(floor, 1.0), c.tol("psd"),
                  fmt::format("20 points, min eigenvalue {:.3e}, trace {:.3e}, spectral tail bound {:.2e}{}",
                              r.gram.min_eigenvalue, r.gram.trace, r.max_tail_bound,
                              r.tails_ok ? "" : ": truncation too small"));
      });
    }
  }
}

// ---------------- distributions ----------------

Eigen::VectorXd circle(double theta) {
  Eigen::VectorXd w(2);
  w << std::cos(theta), std::sin(theta);
  return w;
}

TestFunction offcut_bump_n2() { return bump_test_function(0.3, circle(-1.0), 0.4, 0.4); }
TestFunction cut_bump_n2() { return bump_test_function(0.8, circle(0.6), 0.4, 0.4); }
TestFunction offcut_bump_n3() {
  Eigen::VectorXd w(3);
  w << 0.6, 0.3, -0.74;
  return bump_test_function(0.3, w.normalized(), 0.4, 0.4);
}

void suite_distributions(Ctx& c) {
  const std::vector<double> ladder = c.ladder();
  const SpectralParam sp2 = SpectralParam::make(2, 0.3);
  const SpectralParam sp3 = SpectralParam::make(3, 0.6);

  struct Case {
    const char* label;
    TestFunction phi;
    const char* tol;
  };
  const std::vector<Case> cases{{"offcut", offcut_bump_n2(), "bv-offcut"}, {"cut", cut_bump_n2(), "bv-cut"}};
  for (const Case& k : cases)
    for (KernelKind which : {KernelKind::psi, KernelKind::psi_tilde}) {
      const std::string name = fmt::format("boundary_table_{}_{}", k.label, kernel_name(which));
      guarded(c, name, [&] {
        const PairingResult lim = pair_limit(sp2, k.phi, side_for(which), ladder);
        const PairingResult pw = pair_pointwise(sp2, k.phi, which);
        c.at_most(name, rel_err(lim.value, pw.value), c.tol(k.tol),
                  fmt::format("n=2, {} side limit ({:.12g}, {:.12g}) vs pointwise ({:.12g}, {:.12g}), Richardson residual {:.1e}",
                              crown_side_name(side_for(which)), lim.value.real(), lim.value.imag(), pw.value.real(),
                              pw.value.imag(), lim.residual));
      });
    }

  const std::vector<double> steps{0.04, 0.02, 0.01};
  auto kg = [&](const std::string& tag, const SpectralParam& sp, const TestFunction& phi, PairingRoute route,
                const char* tol, bool order_check) {
    guarded(c, "weak_kg_" + tag, [&] {
      std::vector<double> r;
      for (double h : steps) r.push_back(weak_kg_check(sp, phi, KernelKind::psi, route, h, 4, ladder).residual);
      c.at_most("weak_kg_" + tag, r.back(), c.tol(tol),
                fmt::format("{} route, residuals {:.2e} {:.2e} {:.2e} at steps 0.04 0.02 0.01", route_name(route), r[0],
                            r[1], r[2]));
      if (order_check) {
        const double p1 = std::log2(r[0] / r[1]), p2 = std::log2(r[1] / r[2]);
        c.at_least("weak_kg_order_" + tag, std::min(p1, p2), c.tol("kg-order"),
                   fmt::format("observed orders {:.2f} {:.2f}", p1, p2));
      }
    });
  };
  kg("offcut_n2", sp2, offcut_bump_n2(), PairingRoute::pointwise, "kg-offcut", true);
  kg("offcut_n3", sp3, offcut_bump_n3(), PairingRoute::pointwise, "kg-offcut", true);
  kg("cut_n2", sp2, cut_bump_n2(), PairingRoute::limit, "kg-cut", false);

  for (const Case& k : cases) {
    guarded(c, fmt::format("h_invariance_boost_{}", k.label), [&] {
      const double r = h_invariance_check(sp2, k.phi, random_H_element(2, 0.2, 0), KernelKind::psi,
                                          PairingRoute::pointwise);
      c.at_most(fmt::format("h_invariance_boost_{}", k.label), r, c.tol("h-boost"), "n=2, rapidity 0.2");
    });
  }
  guarded(c, "h_invariance_rotation_n2", [&] {
    const double r = h_invariance_check(sp2, offcut_bump_n2(), random_H_element(2, 0.0, c.opt.seed),
                                        KernelKind::psi, PairingRoute::pointwise);
    c.at_most("h_invariance_rotation_n2", r, c.tol("h-exact"), "n=2: rotations fixing the chart axis are the identity");
  });
  guarded(c, "h_invariance_rotation_n3", [&] {
    const double r = h_invariance_check(sp3, offcut_bump_n3(), rotation(3, 1, 2, 0.7), KernelKind::psi,
                                        PairingRoute::pointwise);
    c.at_most("h_invariance_rotation_n3", r, c.tol("h-exact"), "n=3, rotation by 0.7 in the (1,2) plane");
  });
}

// ---------------- microlocal ----------------

void suite_microlocal(Ctx& c) {
  for (int n : {2, 3}) {
    const SpectralParam sp = SpectralParam::make(n, 0.3 * 0.5 * (n - 1));
    const std::string name = fmt::format("probe_1d_n{}", n);
    guarded(c, name, [&] {
      int matches = 0, total = 0;
      std::string detail;
      for (BoundarySide side : {BoundarySide::plus_i0, BoundarySide::minus_i0})
        for (double xi : {1.0, -1.0}) {
          const auto f = [&](double x) { return hyp2f1_real_line(sp, x, side); };
          const DecayReport r = windowed_decay_probe_1d(f, 1.0, xi, {1.0});
          const bool slow_expected = (side == BoundarySide::plus_i0) == (xi > 0);
          const DecayClass want = slow_expected ? DecayClass::slow : DecayClass::rapid;
          matches += r.classification == want;
          ++total;
          detail += fmt::format("{} xi={:+g}: {} (p={:.2f}); ", side_name(side), xi, decay_name(r.classification), r.exponent);
        }
      const auto analytic = [&](double x) { return family_hyp2f1(sp, x); };
      for (double xi : {1.0, -1.0}) {
        const DecayReport r = windowed_decay_probe_1d(analytic, 0.5, xi, {});
        matches += r.classification == DecayClass::rapid;
        ++total;
        detail += fmt::format("analytic at 0.5 xi={:+g}: {} (p={:.2f}); ", xi, decay_name(r.classification), r.exponent);
      }
      c.at_least(name, matches, total, detail);
    });
  }
  guarded(c, "probe_2d_n2", [&] {
    const SpectralParam sp = SpectralParam::make(2, 0.3);
    const WfProbeTable t = wf_probe_de_sitter(sp, Eigen::Vector2d(0.5, 0.5), 8, KernelKind::psi);
    std::string detail = "base (0.5, 0.5): ";
    for (const auto& row : t.rows)
      detail += fmt::format("{:g}deg {}{} ", row.angle_deg, decay_name(row.report.classification), row.predicted ? "*" : "");
    c.at_least("probe_2d_n2", t.agreements, c.tol("probe-agreement"), detail + "(* predicted member)");
  });
  for (KernelKind which : {KernelKind::psi, KernelKind::psi_tilde}) {
    const std::string name = fmt::format("no_overlap_{}", kernel_name(which));
    guarded(c, name, [&] {
      const OverlapReport r = wf_no_overlap_check(SpectralParam::make(2, 0.3), 1000, which, c.opt.seed);
      c.at_most(name, r.violations, 0.0, fmt::format("{} samples, {} members", r.samples, r.members));
    });
  }
}

}  // namespace

std::vector<CheckResult> run_suite(Suite s, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const auto run = [&](Suite one, void (*fn)(Ctx&)) {
    if (s != Suite::all && s != one) return;
    Ctx c{opt, suite_name(one), out};
    fn(c);
  };
  run(Suite::hyp, suite_hyp);
  run(Suite::kernels, suite_kernels);
  run(Suite::rp, suite_rp);
  run(Suite::distributions, suite_distributions);
  run(Suite::microlocal, suite_microlocal);
  return out;
}

}  // namespace dsk
