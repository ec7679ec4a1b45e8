#include "dsk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "dsk/common.hpp"

namespace dsk {

void Rule1D::append(const Rule1D& o) {
  x.insert(x.end(), o.x.begin(), o.x.end());
  w.insert(w.end(), o.w.begin(), o.w.end());
}

double Rule1D::total_weight() const {
  double s = 0.0;
  for (double v : w) s += v;
  return s;
}

namespace {

Rule1D compute_gauss_legendre(int m) {
  Rule1D r;
  r.x.resize(m);
  r.w.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (m == 1) p0 = 1.0;
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[m - 1 - i] = x;
    r.w[i] = r.w[m - 1 - i] = w;
  }
  if (m % 2 == 1) r.x[m / 2] = 0.0;
  return r;
}

const Rule1D& reference_rule(int m) {
  static std::mutex mu;
  static std::map<int, Rule1D> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, compute_gauss_legendre(m)).first;
  return it->second;
}

}  // namespace

Rule1D gauss_legendre(int m, double lo, double hi) {
  if (m < 1) throw InvalidInput("gauss_legendre: need at least one node");
  if (m == 1) return Rule1D{{0.5 * (lo + hi)}, {hi - lo}};
  const Rule1D& ref = reference_rule(m);
  Rule1D r;
  r.x.resize(m);
  r.w.resize(m);
  const double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
  for (int i = 0; i < m; ++i) {
    r.x[i] = c + h * ref.x[i];
    r.w[i] = h * ref.w[i];
  }
  return r;
}

Rule1D composite_gauss(double lo, double hi, int m, double max_panel) {
  Rule1D r;
  if (!(hi > lo)) return r;
  const int panels = std::max(1, int(std::ceil((hi - lo) / max_panel - 1e-12)));
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) r.append(gauss_legendre(m, lo + p * h, lo + (p + 1) * h));
  return r;
}

Rule1D graded_rule(double lo, double hi, bool toward_lo, const GradingOptions& opt) {
  Rule1D r;
  const double len = hi - lo;
  if (!(len > 0.0)) return r;
  // breakpoints measured as distance from the singular end
  std::vector<double> d{len};
  double cur = std::min(len, opt.max_panel) * opt.ratio;
  if (len > opt.max_panel) d.push_back(opt.max_panel);
  for (int k = 0; k < opt.levels; ++k) {
    if (cur <= 1e-15 * std::max(1.0, std::abs(toward_lo ? lo : hi))) break;
    d.push_back(cur);
    cur *= opt.ratio;
  }
  d.push_back(0.0);
  for (size_t k = 0; k + 1 < d.size(); ++k) {
    const double a = d[k + 1], b = d[k];
    const double plo = toward_lo ? lo + a : hi - b;
    const double phi = toward_lo ? lo + b : hi - a;
    r.append(composite_gauss(plo, phi, opt.nodes_per_panel, opt.max_panel));
  }
  return r;
}

Rule1D split_graded_rule(double lo, double hi, std::vector<double> singular, const GradingOptions& opt) {
  std::sort(singular.begin(), singular.end());
  std::vector<double> cuts{lo};
  for (double s : singular)
    if (s > lo && s < hi) cuts.push_back(s);
  cuts.push_back(hi);
  auto is_sing = [&](double v) { return std::find(singular.begin(), singular.end(), v) != singular.end(); };
  Rule1D r;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k], b = cuts[k + 1];
    const bool sa = is_sing(a), sb = is_sing(b);
    if (sa && sb) {
      const double mid = 0.5 * (a + b);
      r.append(graded_rule(a, mid, true, opt));
      r.append(graded_rule(mid, b, false, opt));
    } else if (sa) {
      r.append(graded_rule(a, b, true, opt));
    } else if (sb) {
      r.append(graded_rule(a, b, false, opt));
    } else {
      r.append(composite_gauss(a, b, opt.nodes_per_panel, opt.max_panel));
    }
  }
  return r;
}

double SphereRule::total_weight() const {
  double s = 0.0;
  for (double v : weights) s += v;
  return s;
}

double sphere_volume(int m) { return 2.0 * std::pow(pi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1)); }

SphereRule sphere_rule(int m, int order) {
  if (m < 0 || order < 1) throw InvalidInput("sphere_rule: bad dimension or order");
  SphereRule r;
  if (m == 0) {
    r.points = {Eigen::VectorXd::Constant(1, 1.0), Eigen::VectorXd::Constant(1, -1.0)};
    r.weights = {1.0, 1.0};
    return r;
  }
  if (m == 1) {
    const int N = 2 * order;
    for (int j = 0; j < N; ++j) {
      const double t = 2.0 * pi * j / N;
      Eigen::VectorXd p(2);
      p << std::cos(t), std::sin(t);
      r.points.push_back(p);
      r.weights.push_back(2.0 * pi / N);
    }
    return r;
  }
  const Rule1D polar = gauss_legendre(order, 0.0, pi);
  const SphereRule sub = sphere_rule(m - 1, order);
  for (size_t i = 0; i < polar.x.size(); ++i) {
    const double th = polar.x[i];
    const double wt = polar.w[i] * std::pow(std::sin(th), m - 1);
    for (size_t j = 0; j < sub.points.size(); ++j) {
      Eigen::VectorXd p(m + 1);
      p.head(m) = std::sin(th) * sub.points[j];
      p(m) = std::cos(th);
      r.points.push_back(p);
      r.weights.push_back(wt * sub.weights[j]);
    }
  }
  return r;
}

SphereRule cap_rule(const Eigen::VectorXd& center, double radius, int order) {
  const int d = int(center.size());
  if (d < 2) throw InvalidInput("cap_rule: sphere dimension too small");
  const Eigen::VectorXd c = center / center.norm();
  // orthonormal complement of c
  Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd q(d, d);
  q.col(0) = c;
  int filled = 1;
  for (int i = 0; i < d && filled < d; ++i) {
    Eigen::VectorXd v = basis.col(i);
    for (int j = 0; j < filled; ++j) v -= v.dot(q.col(j)) * q.col(j);
    if (v.norm() > 1e-8) q.col(filled++) = v / v.norm();
  }
  const Eigen::MatrixXd perp = q.rightCols(d - 1);
  const double top = std::min(radius, pi);
  const Rule1D polar = gauss_legendre(order, 0.0, top);
  const SphereRule sub = sphere_rule(d - 2, order);
  SphereRule r;
  for (size_t i = 0; i < polar.x.size(); ++i) {
    const double t = polar.x[i];
    const double wt = polar.w[i] * std::pow(std::sin(t), d - 2);
    for (size_t j = 0; j < sub.points.size(); ++j) {
      r.points.push_back(std::cos(t) * c + std::sin(t) * (perp * sub.points[j]));
      r.weights.push_back(wt * sub.weights[j]);
    }
  }
  return r;
}

}  // namespace dsk
