#include <doctest.h>

#include <sstream>

#include "dsk/cli.hpp"
#include "helpers.hpp"

using namespace dsk;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l)) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    v.push_back(l);
  }
  return v;
}

std::vector<double> fields(const std::string& row) {
  std::vector<double> v;
  std::istringstream in(row);
  std::string f;
  while (std::getline(in, f, ',')) v.push_back(std::stod(f));
  return v;
}
}  // namespace

TEST_CASE("point specs") {
  CHECK(parse_point_spec("ie0", 2).side == CrownSide::xi);
  CHECK(parse_point_spec("-ie0", 2).side == CrownSide::xi_bar);
  CHECK(parse_point_spec("ie0bar", 3).side == CrownSide::xi_bar);
  CHECK(parse_point_spec("H:0.5", 2).point[2].imag() == doctest::Approx(std::sinh(0.5)));
  CHECK(parse_point_spec("Hbar:0.5", 2).side == CrownSide::xi_bar);
  CHECK(parse_point_spec("S:0.6,0.8,0", 2).side == CrownSide::xi);
  CHECK(parse_point_spec("dS:0.3,1,1", 2).side == CrownSide::boundary);
  CHECK(parse_point_spec("Z:0:1,0,0", 2).side == CrownSide::xi);
  CHECK_THROWS_AS(parse_point_spec("Q:1", 2), InvalidInput);
  CHECK_THROWS_AS(parse_point_spec("S:0.6,0.8", 2), InvalidInput);
  CHECK_THROWS_AS(parse_point_spec("H:abc", 2), InvalidInput);
}

TEST_CASE("eval-kernel") {
  const Run r = run({"eval-kernel", "--n", "2", "--lambda", "0.3", "--pair=ie0;ie0", "--pair=H:1;ie0"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == "z,w,kernel,re,im");
  CHECK(l[1] == "ie0,ie0,psi,1,0");
  const Run again = run({"eval-kernel", "--n", "2", "--lambda", "0.3", "--pair=ie0;ie0", "--pair=H:1;ie0"});
  CHECK(again.out == r.out);
  const Run tilde = run({"eval-kernel", "--kernel", "psi_tilde", "--pair=-ie0;-ie0"});
  CHECK(tilde.code == 0);
  const Run json = run({"eval-kernel", "--format", "json", "--pair=ie0;ie0"});
  CHECK(json.out.find("\"re\": 1.0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  const Run bad_lambda = run({"eval-kernel", "--n", "2", "--lambda", "0.7", "--pair=ie0;ie0"});
  CHECK(bad_lambda.code == 2);
  CHECK(bad_lambda.err.find("i[0,inf) U (0,rho)") != std::string::npos);
  CHECK(run({"eval-kernel", "--pair=ie0"}).code == 2);
  CHECK(run({"eval-kernel", "--pair=ie0;-ie0"}).code == 2);
  CHECK(run({"eval-kernel"}).code == 2);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bv-profile", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bv-profile") {
  const Run r = run({"bv-profile", "--n", "2", "--lambda", "0.3", "--x-min", "1.2", "--x-max", "3", "--x-count", "7"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 8);
  CHECK(l[0] == "x,re_plus_i0,im_plus_i0,re_minus_i0,im_minus_i0,re_jump,im_jump");
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto f = fields(l[i]);
    REQUIRE(f.size() == 7);
    CHECK(f[2] == -f[4]);
    CHECK(f[5] == doctest::Approx(f[1] - f[3]));
    CHECK(f[6] == doctest::Approx(f[2] - f[4]));
  }
  const Run empty = run({"bv-profile", "--x-count", "0"});
  CHECK(empty.code == 0);
  CHECK(lines(empty.out).size() == 1);
  const Run clipped = run({"bv-profile", "--x-min", "0.5", "--x-max", "2", "--x-count", "4"});
  CHECK(clipped.code == 0);
  CHECK(clipped.err.find("clipped") != std::string::npos);
  CHECK(lines(clipped.out).size() == 5);
}

TEST_CASE("verify exit codes") {
  const Run weak = run({"verify", "--suite", "rp", "--K", "8"});
  CHECK(weak.code == 1);
  CHECK(weak.out.find("truncation too small") != std::string::npos);
  CHECK(weak.err.find("FAIL") != std::string::npos);
  const Run rp = run({"verify", "--suite", "rp"});
  CHECK(rp.code == 0);
  CHECK(rp.out.find("\"passed\": true") != std::string::npos);
}
