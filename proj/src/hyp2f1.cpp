#include "dsk/hyp2f1.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "dsk/special.hpp"

namespace dsk {

namespace {

constexpr double kSeriesRadius = 0.8;
constexpr double kIntegerSnap = 1e-12;

bool snaps_to_integer(cplx z, int& m) {
  const double r = std::round(z.real());
  if (std::abs(z - r) > kIntegerSnap * std::max(1.0, std::abs(r))) return false;
  m = int(r);
  return true;
}

bool terminates(cplx a, cplx b) { return is_nonpositive_integer(a) || is_nonpositive_integer(b); }

// Tail of a series whose term ratio tends to a modulus below one.
double tail_estimate(double term, double ratio) {
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return term * ratio / (1.0 - ratio);
}

cplx terminating_sum(cplx a, cplx b, cplx c, cplx z) {
  int ma = 0, mb = 0;
  int len = std::numeric_limits<int>::max();
  if (is_nonpositive_integer(a) && snaps_to_integer(a, ma)) len = std::min(len, -ma);
  if (is_nonpositive_integer(b) && snaps_to_integer(b, mb)) len = std::min(len, -mb);
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < len; ++k) {
    if (is_nonpositive_integer(c + double(k))) throw InvalidInput("hyp2f1: c hits a pole before termination");
    term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
    sum += term;
  }
  return sum;
}

// Direct series or its Pfaff transform, whichever has the smaller argument.
cplx near_zero(cplx a, cplx b, cplx c, cplx t) {
  if (terminates(a, b)) return terminating_sum(a, b, c, t);
  if (t == 0.0) return 1.0;
  const cplx tp = t / (t - 1.0);
  if (std::abs(tp) < std::abs(t)) return std::pow(1.0 - t, -a) * hyp2f1_series(a, c - b, c, tp);
  return hyp2f1_series(a, b, c, t);
}

cplx taylor_path(cplx a, cplx b, cplx c, cplx z) {
  const cplx z_start = 0.5 * z / std::abs(z);
  cplx f = hyp2f1_series(a, b, c, z_start);
  cplx df = a * b / c * hyp2f1_series(a + 1.0, b + 1.0, c + 1.0, z_start);
  cplx zc = z_start;
  for (int step = 0; step < 10000; ++step) {
    const cplx remaining = z - zc;
    if (std::abs(remaining) == 0.0) return f;
    const double radius = std::min(std::abs(zc), std::abs(1.0 - zc));
    const double hmax = 0.5 * radius;
    const cplx h = std::abs(remaining) <= hmax ? remaining : remaining / std::abs(remaining) * hmax;

    const cplx p0 = zc * (1.0 - zc);
    const cplx p1 = 1.0 - 2.0 * zc;
    const cplx q0 = c - (a + b + 1.0) * zc;
    cplx c_prev = f, c_cur = df;  // c_k, c_{k+1}
    cplx val = f + df * h;
    cplx dval = df;
    cplx hp = h;  // h^{k+1}
    int small = 0;
    for (int k = 0; k < 400; ++k) {
      const double kk = k;
      const cplx c_next = -((p1 * kk + q0) * (kk + 1.0) * c_cur - (kk + a) * (kk + b) * c_prev) /
                          (p0 * (kk + 1.0) * (kk + 2.0));
      const cplx dterm = (kk + 2.0) * c_next * hp;
      hp *= h;
      const cplx term = c_next * hp;
      val += term;
      dval += dterm;
      c_prev = c_cur;
      c_cur = c_next;
      if (std::abs(term) <= 1e-17 * std::abs(val) && std::abs(dterm) <= 1e-17 * std::abs(dval)) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    f = val;
    df = dval;
    zc += h;
  }
  throw ConvergenceError("hyp2f1: Taylor path did not reach the target", 10000, 0.0);
}

}  // namespace

const char* route_name(Hyp2f1Route r) {
  switch (r) {
    case Hyp2f1Route::terminating: return "terminating";
    case Hyp2f1Route::direct: return "direct";
    case Hyp2f1Route::pfaff: return "pfaff";
    case Hyp2f1Route::one_minus_z: return "one_minus_z";
    case Hyp2f1Route::inverse_z: return "inverse_z";
    case Hyp2f1Route::taylor_path: return "taylor_path";
  }
  return "?";
}

double distance_to_cut(cplx z) {
  if (z.real() >= 1.0) return std::abs(z.imag());
  return std::abs(z - 1.0);
}

cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z, const SeriesOptions& opt, SeriesDiagnostics* diag) {
  if (is_nonpositive_integer(c)) throw InvalidInput("hyp2f1: c is a nonpositive integer");
  if (terminates(a, b)) {
    if (diag) *diag = {0, 0.0};
    return terminating_sum(a, b, c, z);
  }
  const double az = std::abs(z);
  if (!(az < 1.0)) throw InvalidInput("hyp2f1_series: |z| must be below 1");
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < opt.max_terms; ++k) {
    const double kk = k;
    const cplx ratio = (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0));
    term *= ratio * z;
    sum += term;
    // Once the coefficient ratio settles below one the tail is geometric.
    const double next_ratio = std::abs((a + kk + 1.0) * (b + kk + 1.0) / ((c + kk + 1.0) * (kk + 2.0))) * az;
    const double r = std::max(next_ratio, az);
    const double tail = tail_estimate(std::abs(term), r);
    if (k > 2 && next_ratio < 1.0 && tail <= opt.tol * std::abs(sum)) {
      if (diag) *diag = {k + 1, tail};
      return sum;
    }
    if (term == 0.0) {
      if (diag) *diag = {k + 1, 0.0};
      return sum;
    }
  }
  throw ConvergenceError("hyp2f1_series: max_terms reached", opt.max_terms, std::abs(term));
}

Hyp2f1Route select_route(cplx a, cplx b, cplx c, cplx z) {
  if (is_nonpositive_integer(c)) throw InvalidInput("hyp2f1: c is a nonpositive integer");
  if (terminates(a, b)) return Hyp2f1Route::terminating;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidInput("hyp2f1: non-finite argument");
  if (distance_to_cut(z) <= kTolCut)
    throw InvalidInput("hyp2f1_continued: argument on the branch cut [1,inf); use hyp2f1_boundary");
  if (z == 0.0) return Hyp2f1Route::direct;
  const std::array<std::pair<double, Hyp2f1Route>, 4> cand = {{
      {std::abs(z), Hyp2f1Route::direct},
      {std::abs(z / (z - 1.0)), Hyp2f1Route::pfaff},
      {std::abs(1.0 - z), Hyp2f1Route::one_minus_z},
      {1.0 / std::abs(z), Hyp2f1Route::inverse_z},
  }};
  auto best = cand[0];
  for (const auto& c2 : cand)
    if (c2.first < best.first - 1e-12) best = c2;
  if (best.first > kSeriesRadius) return Hyp2f1Route::taylor_path;
  return best.second;
}

cplx hyp2f1_connection_one_minus_z(cplx a, cplx b, cplx c, cplx t, cplx log_t) {
  const cplx s = c - a - b;
  int m = 0;
  if (!snaps_to_integer(s, m)) {
    const cplx t1 = gamma_fn(c) * gamma_fn(s) * rgamma(c - a) * rgamma(c - b) * near_zero(a, b, 1.0 - s, t);
    const cplx t2 = std::exp(s * log_t) * gamma_fn(c) * gamma_fn(-s) * rgamma(a) * rgamma(b) *
                    near_zero(c - a, c - b, 1.0 + s, t);
    return t1 + t2;
  }
  if (m > 0) {
    // Euler transform brings the exponent difference to -m.
    return std::exp(s * log_t) * hyp2f1_connection_one_minus_z(c - a, c - b, c, t, log_t);
  }
  m = -m;
  const cplx gc = gamma_fn(c);
  cplx finite = 0.0;
  if (m > 0) {
    double gm = 1.0;
    for (int j = 2; j < m; ++j) gm *= j;
    const cplx pref = gm * gc * rgamma(a) * rgamma(b);
    if (pref != 0.0) {
      cplx coef = 1.0;
      cplx tp = std::pow(t, -m);
      cplx acc = 0.0;
      for (int k = 0; k < m; ++k) {
        acc += coef * tp;
        if (k + 1 == m) break;
        const double kk = k;
        coef *= (a - double(m) + kk) * (b - double(m) + kk) / ((kk + 1.0) * (1.0 - m + kk));
        tp *= t;
      }
      finite = pref * acc;
    }
  }
  const cplx pref2 = -(m % 2 == 0 ? 1.0 : -1.0) * gc * rgamma(a - double(m)) * rgamma(b - double(m));
  if (pref2 == 0.0) return finite;

  double fact_m = 1.0;
  for (int j = 2; j <= m; ++j) fact_m *= j;
  cplx q = 1.0 / fact_m;  // (a)_k (b)_k / (k! (k+m)!) t^k
  cplx psi1 = -euler_gamma;
  cplx psim = -euler_gamma;
  for (int j = 1; j <= m; ++j) psim += 1.0 / double(j);
  cplx psia = digamma(a), psib = digamma(b);
  cplx sum = 0.0;
  const double at = std::abs(t);
  if (!(at < 1.0)) throw InvalidInput("hyp2f1: logarithmic connection needs |1-z| < 1");
  for (int k = 0; k < 20000; ++k) {
    const double kk = k;
    const cplx term = q * (log_t - psi1 - psim + psia + psib);
    sum += term;
    const cplx ratio = (a + kk) * (b + kk) / ((kk + 1.0) * (kk + m + 1.0));
    const double r = std::max(std::abs(ratio) * at, at);
    if (k > 2 && std::abs(ratio) * at < 1.0 &&
        2.0 * tail_estimate(std::abs(term) + std::abs(q), r) <= 1e-16 * std::abs(sum))
      return finite + pref2 * sum;
    q *= ratio * t;
    psi1 += 1.0 / (kk + 1.0);
    psim += 1.0 / (kk + m + 1.0);
    psia += 1.0 / (a + kk);
    psib += 1.0 / (b + kk);
    if (q == 0.0) return finite + pref2 * sum;
  }
  throw ConvergenceError("hyp2f1: logarithmic 1-z series did not converge", 20000, 0.0);
}

cplx hyp2f1_connection_inverse(cplx a, cplx b, cplx c, cplx w, cplx log_minus_z) {
  const cplx d = b - a;
  int m = 0;
  if (!snaps_to_integer(d, m)) {
    const cplx t1 = gamma_fn(c) * gamma_fn(d) * rgamma(b) * rgamma(c - a) * std::exp(-a * log_minus_z) *
                    near_zero(a, a - c + 1.0, 1.0 - d, w);
    const cplx t2 = gamma_fn(c) * gamma_fn(-d) * rgamma(a) * rgamma(c - b) * std::exp(-b * log_minus_z) *
                    near_zero(b, b - c + 1.0, 1.0 + d, w);
    return t1 + t2;
  }
  if (m < 0) return hyp2f1_connection_inverse(b, a, c, w, log_minus_z);
  const double aw = std::abs(w);
  if (!(aw < 1.0)) throw InvalidInput("hyp2f1: logarithmic inverse connection needs |z| > 1");

  const cplx lead = gamma_fn(c) * std::exp(-a * log_minus_z);
  cplx finite = 0.0;
  if (m > 0) {
    const cplx pref = rgamma(a + double(m));
    if (pref != 0.0) {
      cplx poch = 1.0;  // (a)_k / k!
      cplx rg = rgamma(c - a);
      cplx wp = 1.0;
      cplx acc = 0.0;
      for (int k = 0; k < m; ++k) {
        double fac = 1.0;
        for (int j = 2; j <= m - k - 1; ++j) fac *= j;
        acc += poch * fac * rg * wp;
        const double kk = k;
        poch *= (a + kk) / (kk + 1.0);
        const cplx x = c - a - kk;
        rg = (x - 1.0) * rg;
        wp *= w;
      }
      finite = pref * acc;
    }
  }

  const cplx pref2 = rgamma(a);
  if (pref2 == 0.0) return lead * finite;
  double fact_m = 1.0;
  for (int j = 2; j <= m; ++j) fact_m *= j;
  cplx q = std::pow(w, m) / fact_m;  // (a+m)_k / (k! (k+m)!) (-1)^k w^{k+m}
  cplx psi1 = -euler_gamma;
  cplx psim = -euler_gamma;
  for (int j = 1; j <= m; ++j) psim += 1.0 / double(j);
  cplx psiam = digamma(a + double(m));
  cplx x = c - a - double(m);
  cplx rg = rgamma(x);
  cplx prg = digamma_over_gamma(x);
  cplx sum = 0.0;
  for (int k = 0; k < 20000; ++k) {
    const double kk = k;
    const cplx term = q * ((log_minus_z + psi1 + psim - psiam) * rg - prg);
    sum += term;
    const cplx ratio = -(a + double(m) + kk) / ((kk + 1.0) * (kk + m + 1.0)) * (x - 1.0);
    const double r = std::max(std::abs(ratio) * aw, aw);
    if (k > 2 && std::abs(ratio) * aw < 1.0 &&
        2.0 * tail_estimate(std::abs(term) + std::abs(q * rg) + std::abs(q * prg), r) <= 1e-16 * std::abs(sum))
      return lead * (finite + pref2 * sum);
    q *= -(a + double(m) + kk) / ((kk + 1.0) * (kk + m + 1.0)) * w;
    const cplx rg_next = (x - 1.0) * rg;
    prg = (x - 1.0) * prg - rg;
    rg = rg_next;
    x -= 1.0;
    psi1 += 1.0 / (kk + 1.0);
    psim += 1.0 / (kk + m + 1.0);
    psiam += 1.0 / (a + double(m) + kk);
  }
  throw ConvergenceError("hyp2f1: logarithmic 1/z series did not converge", 20000, 0.0);
}

cplx hyp2f1_via(Hyp2f1Route route, cplx a, cplx b, cplx c, cplx z) {
  if (is_nonpositive_integer(c)) throw InvalidInput("hyp2f1: c is a nonpositive integer");
  if (route != Hyp2f1Route::terminating && distance_to_cut(z) <= kTolCut)
    throw InvalidInput("hyp2f1_continued: argument on the branch cut [1,inf); use hyp2f1_boundary");
  switch (route) {
    case Hyp2f1Route::terminating:
      if (!terminates(a, b)) throw InvalidInput("hyp2f1: series does not terminate");
      return terminating_sum(a, b, c, z);
    case Hyp2f1Route::direct:
      return hyp2f1_series(a, b, c, z);
    case Hyp2f1Route::pfaff: {
      const cplx zp = z / (z - 1.0);
      return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, zp);
    }
    case Hyp2f1Route::one_minus_z: {
      const cplx t = 1.0 - z;
      return hyp2f1_connection_one_minus_z(a, b, c, t, std::log(t));
    }
    case Hyp2f1Route::inverse_z: {
      if (z == 0.0) throw InvalidInput("hyp2f1: inverse route at z = 0");
      return hyp2f1_connection_inverse(a, b, c, 1.0 / z, std::log(-z));
    }
    case Hyp2f1Route::taylor_path:
      if (z == 0.0) return 1.0;
      return taylor_path(a, b, c, z);
  }
  throw InvalidInput("hyp2f1: unknown route");
}

cplx hyp2f1_continued(cplx a, cplx b, cplx c, cplx z) {
  return hyp2f1_via(select_route(a, b, c, z), a, b, c, z);
}

}  // namespace dsk
