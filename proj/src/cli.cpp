#include "dsk/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <variant>

#include "dsk/verify.hpp"

namespace dsk {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw InvalidInput(fmt::format("{}: '{}' is not a finite number", what, s));
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<double> parse_numbers(const std::string& s, const std::string& what) {
  std::vector<double> v;
  for (const auto& p : split(s, ',')) v.push_back(parse_number(p, what));
  return v;
}

cplx parse_lambda(const std::string& s) {
  const auto v = parse_numbers(s, "--lambda");
  if (v.size() == 1) return v[0];
  if (v.size() == 2) return {v[0], v[1]};
  throw InvalidInput("--lambda expects 're' or 're,im'");
}

std::vector<double> parse_ladder(const std::string& s) {
  std::vector<double> v;
  if (s.rfind("geom:", 0) == 0) {
    const auto g = parse_numbers(s.substr(5), "--eps-ladder");
    if (g.size() != 3 || g[2] < 2 || g[2] != std::floor(g[2]))
      throw InvalidInput("--eps-ladder geom:start,ratio,count needs an integer count >= 2");
    for (int k = 0; k < int(g[2]); ++k) v.push_back(g[0] * std::pow(g[1], k));
  } else {
    v = parse_numbers(s, "--eps-ladder");
  }
  if (v.size() < 2) throw InvalidInput("--eps-ladder needs at least two values");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(v[i] > 0.0) || (i > 0 && !(v[i] < v[i - 1])))
      throw InvalidInput("--eps-ladder must be positive and strictly decreasing");
  return v;
}

using Cell = std::variant<std::string, double, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string format_cell(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return csv_field(*s);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return fmt::format("{:.17g}", std::get<double>(c));
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_field(t.columns[i]);
  out += "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_cell(row[i]);
    out += "\r\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["table"] = t.name;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) std::visit([&](const auto& v) { r[t.columns[i]] = v; }, row[i]);
    j["rows"].push_back(r);
  }
  return j;
}

struct RunConfig {
  int n = 2;
  std::string lambda = "0.3";
  std::string out_path;
  std::string format;
  std::uint64_t seed = 1;
  int quad_order = 64;
  std::string eps_ladder;
  int K = 0;
  std::map<std::string, double> tol = default_tolerances();
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw InvalidInput(fmt::format("cannot open '{}' for writing", cfg.out_path));
  f << text;
}

std::string render(const Table& t, const std::string& format) {
  return format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t);
}

Table eval_kernel(const SpectralParam& sp, const std::vector<std::string>& pairs, const std::string& kernel) {
  const KernelKind which = kernel == "psi" ? KernelKind::psi : KernelKind::psi_tilde;
  Table t{"eval-kernel", {"z", "w", "kernel", "re", "im"}, {}};
  for (const auto& p : pairs) {
    const auto parts = split(p, ';');
    if (parts.size() != 2) throw InvalidInput(fmt::format("--pair '{}': expected 'z;w'", p));
    const CrownPoint z = parse_point_spec(parts[0], sp.n());
    const CrownPoint w = parse_point_spec(parts[1], sp.n());
    const cplx v = kernel_value(sp, which, z, w);
    t.rows.push_back({parts[0], parts[1], std::string(kernel_name(which)), v.real(), v.imag()});
  }
  return t;
}

Table bv_profile(const SpectralParam& sp, double x_min, double x_max, int count, std::ostream& err) {
  Table t{"bv-profile", {"x", "re_plus_i0", "im_plus_i0", "re_minus_i0", "im_minus_i0", "re_jump", "im_jump"}, {}};
  if (count <= 0 || x_max < x_min) return t;
  std::vector<double> xs;
  if (x_min <= 1.0) {
    if (x_max <= 1.0) {
      err << "warning: range lies at or below x = 1; table is empty\n";
      return t;
    }
    err << fmt::format("warning: range clipped to (1, {}]\n", x_max);
    for (int k = 1; k <= count; ++k) xs.push_back(1.0 + (x_max - 1.0) * k / count);
  } else if (count == 1) {
    xs.push_back(x_min);
  } else {
    for (int k = 0; k < count; ++k) xs.push_back(x_min + (x_max - x_min) * k / (count - 1));
  }
  for (double x : xs) {
    const cplx p = hyp2f1_boundary(sp, x, BoundarySide::plus_i0);
    const cplx m = hyp2f1_boundary(sp, x, BoundarySide::minus_i0);
    t.rows.push_back({x, p.real(), p.imag(), m.real(), m.imag(), (p - m).real(), (p - m).imag()});
  }
  return t;
}

const char* kProfileSchema =
    "bv-profile columns: x, re/im of 2F1(x+i0), re/im of 2F1(x-i0), re/im of the jump (x+i0) - (x-i0).";

const char* kPointHelp =
    "Point specs: ie0 | -ie0 (or ie0bar) | H:s | Hbar:s | S:x0,x1,..,xn | dS:s,w1,..,wn | Z:re:im,re:im,...\n"
    "Pass a pair as --pair='z;w'.";

}  // namespace

CrownPoint parse_point_spec(const std::string& spec, int n) {
  const auto bad = [&](const std::string& why) { return InvalidInput(fmt::format("point '{}': {}", spec, why)); };
  if (spec == "ie0") return CrownPoint::make(ComplexLorentzVector::basis(n, 0) * cplx(0.0, 1.0));
  if (spec == "-ie0" || spec == "ie0bar") return CrownPoint::make(ComplexLorentzVector::basis(n, 0) * cplx(0.0, -1.0));
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw bad("unknown form");
  const std::string tag = spec.substr(0, colon), body = spec.substr(colon + 1);
  if (tag == "H" || tag == "Hbar") {
    const double s = parse_number(body, "point " + spec);
    return CrownPoint::hyperbolic(boost_a(n, s), tag == "H" ? CrownSide::xi : CrownSide::xi_bar);
  }
  if (tag == "S") {
    const auto v = parse_numbers(body, "point " + spec);
    if (int(v.size()) != n + 1) throw bad(fmt::format("expected {} numbers", n + 1));
    return CrownPoint::sphere(v[0], Eigen::Map<const Eigen::VectorXd>(v.data() + 1, n));
  }
  if (tag == "dS") {
    const auto v = parse_numbers(body, "point " + spec);
    if (int(v.size()) != n + 1) throw bad(fmt::format("expected s and {} direction components", n));
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(v.data() + 1, n);
    if (w.norm() == 0.0) throw bad("zero direction");
    return CrownPoint::from_real(de_sitter_chart(v[0], w.normalized()));
  }
  if (tag == "Z") {
    const auto parts = split(body, ',');
    if (int(parts.size()) != n + 1) throw bad(fmt::format("expected {} coordinates", n + 1));
    Eigen::VectorXcd z(n + 1);
    for (int i = 0; i <= n; ++i) {
      const auto ri = split(parts[i], ':');
      if (ri.empty() || ri.size() > 2) throw bad("coordinates are re or re:im");
      z(i) = cplx(parse_number(ri[0], "point " + spec), ri.size() == 2 ? parse_number(ri[1], "point " + spec) : 0.0);
    }
    return CrownPoint::make(ComplexLorentzVector(z));
  }
  throw bad("unknown form");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical distributions on de Sitter space: kernels, boundary values, verification suites", "dsk"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--n", cfg.n, "Dimension n >= 2")->check(CLI::Range(2, 64));
  app.add_option("--lambda", cfg.lambda, "Spectral parameter as 're' or 're,im'");
  app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", cfg.format, "csv or json (default: csv for tables, json for verify)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  app.add_option("--quad-order", cfg.quad_order, "Quadrature order of the spherical integral")->check(CLI::Range(2, 4096));
  app.add_option("--eps-ladder", cfg.eps_ladder, "Decreasing eps values 'e1,e2,...' or 'geom:start,ratio,count'");
  app.add_option("--K", cfg.K, "Fixed zonal truncation for the sphere Green kernel (0: adaptive)")->check(CLI::NonNegativeNumber);
  for (auto& [name, value] : cfg.tol) app.add_option("--tol-" + name, value, "Tolerance " + name);

  auto* ev = app.add_subcommand("eval-kernel", "Evaluate Psi or tilde Psi at point pairs")->fallthrough();
  std::vector<std::string> pairs;
  std::string kernel = "psi";
  ev->add_option("--pair", pairs, "Point pair 'z;w'")->required();
  ev->add_option("--kernel", kernel, "psi or psi_tilde")->check(CLI::IsMember({"psi", "psi_tilde"}));
  ev->footer(kPointHelp);

  auto* bv = app.add_subcommand("bv-profile", "Tabulate the boundary values 2F1(x +- i0) on (1, inf)")->fallthrough();
  double x_min = 1.1, x_max = 5.0;
  int x_count = 50;
  bv->add_option("--x-min", x_min, "Lower end of the x range");
  bv->add_option("--x-max", x_max, "Upper end of the x range");
  bv->add_option("--x-count", x_count, "Number of rows")->check(CLI::NonNegativeNumber);
  bv->footer(kProfileSchema);

  auto* vf = app.add_subcommand("verify", "Run verification suites; JSON report, exit 0 iff all checks pass")->fallthrough();
  std::string suite = "all";
  vf->add_option("--suite", suite, "hyp, kernels, rp, distributions, microlocal or all");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const SpectralParam sp = SpectralParam::make(cfg.n, parse_lambda(cfg.lambda));
    if (*ev) {
      emit(cfg, render(eval_kernel(sp, pairs, kernel), cfg.format.empty() ? "csv" : cfg.format), out);
      return 0;
    }
    if (*bv) {
      emit(cfg, render(bv_profile(sp, x_min, x_max, x_count, err), cfg.format.empty() ? "csv" : cfg.format), out);
      return 0;
    }
    VerifyOptions vo;
    const Suite s = parse_suite(suite);
    vo.seed = cfg.seed;
    vo.quad_order = cfg.quad_order;
    if (!cfg.eps_ladder.empty()) vo.eps_ladder = parse_ladder(cfg.eps_ladder);
    vo.green_K = cfg.K;
    vo.tol = cfg.tol;
    const std::vector<CheckResult> checks = run_suite(s, vo);
    const bool ok = all_passed(checks);
    Table t{"verify", {"suite", "check", "passed", "measured", "relation", "tolerance", "detail"}, {}};
    std::vector<std::string> failing;
    for (const auto& c : checks) {
      t.rows.push_back({c.suite, c.name, c.passed, c.measured, c.relation, c.tolerance, c.detail});
      if (!c.passed) failing.push_back(c.name);
    }
    if (cfg.format == "csv") {
      emit(cfg, to_csv(t), out);
    } else {
      nlohmann::ordered_json j;
      j["suite"] = suite_name(s);
      j["passed"] = ok;
      j["failing"] = failing;
      j["checks"] = to_json(t)["rows"];
      emit(cfg, j.dump(2) + "\n", out);
    }
    for (const auto& f : failing) err << "FAIL " << f << "\n";
    return ok ? 0 : 1;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dsk
