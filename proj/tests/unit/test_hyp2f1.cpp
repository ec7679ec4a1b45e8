#include <doctest.h>

#include "dsk/hyp2f1.hpp"
#include "dsk/special.hpp"
#include "dsk/spectral.hpp"
#include "helpers.hpp"
#include "oracle_values.hpp"

using namespace dsk;

TEST_CASE("series basics") {
  CHECK(hyp2f1_series(0.3, 0.7, 1.2, 0.0) == cplx(1.0));
  CHECK_CLOSE(hyp2f1_series(1.0, 1.0, 2.0, 0.5), cplx(-std::log(0.5) / 0.5), 1e-14);
  CHECK_CLOSE(hyp2f1_series(0.3, 1.7, 2.5, 0.3), hyp2f1_series(1.7, 0.3, 2.5, 0.3), 1e-15);
  SeriesDiagnostics d;
  hyp2f1_series(0.5, 0.5, 1.0, 0.9, {}, &d);
  CHECK(d.terms > 10);
  CHECK_THROWS_AS(hyp2f1_series(0.5, 0.5, 1.0, 1.2), InvalidInput);
  // terminating series are fine anywhere
  CHECK_CLOSE(hyp2f1_series(-2.0, 1.0, 1.0, 3.0), cplx(4.0), 1e-15);
  CHECK_THROWS_AS(hyp2f1_continued(0.5, 0.5, -1.0, 0.2), InvalidInput);
}

TEST_CASE("continuation against reference values") {
  for (const auto& c : oracle::hyp2f1_cases) {
    CAPTURE(c.a);
    CAPTURE(c.b);
    CAPTURE(c.c);
    CAPTURE(c.z);
    CHECK_CLOSE(hyp2f1_continued(c.a, c.b, c.c, c.z), c.value, 5e-13);
  }
}

TEST_CASE("routes agree where they overlap") {
  const auto sp = SpectralParam::make(3, 0.5);
  const cplx a = sp.a(), b = sp.b(), c = sp.c();
  CHECK_CLOSE(hyp2f1_via(Hyp2f1Route::pfaff, a, b, c, -5.0), hyp2f1_via(Hyp2f1Route::inverse_z, a, b, c, -5.0), 1e-12);
  CHECK_CLOSE(hyp2f1_via(Hyp2f1Route::taylor_path, a, b, c, -5.0), hyp2f1_via(Hyp2f1Route::pfaff, a, b, c, -5.0), 1e-12);
  CHECK_CLOSE(hyp2f1_continued(a, b, c, 0.5), hyp2f1_series(a, b, c, 0.5), 1e-14);
  const cplx z(0.4, 0.3);
  CHECK_CLOSE(hyp2f1_via(Hyp2f1Route::one_minus_z, 0.3, 0.9, 1.7, z), hyp2f1_via(Hyp2f1Route::direct, 0.3, 0.9, 1.7, z),
              1e-13);
  CHECK_THROWS_AS(hyp2f1_continued(a, b, c, 2.0), InvalidInput);
  CHECK_THROWS_AS(hyp2f1_continued(a, b, c, cplx(2.0, 1e-13)), InvalidInput);
  CHECK(distance_to_cut(cplx(0.5, 0.0)) == doctest::Approx(0.5));
  CHECK(distance_to_cut(cplx(3.0, -2.0)) == doctest::Approx(2.0));
}

TEST_CASE("route selection picks the smallest modulus") {
  CHECK(select_route(0.3, 0.4, 1.1, 0.2) == Hyp2f1Route::direct);
  CHECK(select_route(0.3, 0.4, 1.1, -0.5) == Hyp2f1Route::pfaff);
  CHECK(select_route(0.3, 0.4, 1.1, 0.95) == Hyp2f1Route::one_minus_z);
  CHECK(select_route(0.3, 0.4, 1.1, -30.0) == Hyp2f1Route::inverse_z);
  CHECK(select_route(0.3, 0.4, 1.1, cplx(0.5, 0.86)) == Hyp2f1Route::taylor_path);
  CHECK(select_route(-2.0, 0.4, 1.1, 7.0) == Hyp2f1Route::terminating);
  CHECK(std::string(route_name(Hyp2f1Route::pfaff)) == "pfaff");
}

TEST_CASE("spectral parameter admissibility") {
  CHECK(SpectralParam::admissible(2, 0.3));
  CHECK(SpectralParam::admissible(3, cplx(0.0, 2.0)));
  CHECK(SpectralParam::admissible(3, 0.0));
  CHECK_FALSE(SpectralParam::admissible(2, 0.5));
  CHECK_FALSE(SpectralParam::admissible(2, cplx(0.0, -1.0)));
  CHECK_FALSE(SpectralParam::admissible(2, cplx(0.1, 0.1)));
  CHECK_FALSE(SpectralParam::admissible(1, 0.0));
  try {
    SpectralParam::make(2, 0.7);
    FAIL("accepted an inadmissible lambda");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("i[0,inf) U (0,rho)") != std::string::npos);
  }
  const auto sp = SpectralParam::make(4, cplx(0.0, 1.0));
  CHECK(sp.rho() == 1.5);
  CHECK(sp.c() == 2.0);
  CHECK(sp.mass_squared() == doctest::Approx(3.25));
}

TEST_CASE("boundary values against reference values") {
  for (const auto& c : oracle::boundary_cases) {
    const auto sp = SpectralParam::make(c.n, c.lambda);
    CAPTURE(c.n);
    CAPTURE(c.lambda);
    CAPTURE(c.x);
    CHECK_CLOSE(hyp2f1_boundary(sp, c.x, BoundarySide::plus_i0), c.plus, 1e-12);
    CHECK_CLOSE(hyp2f1_boundary(sp, c.x, BoundarySide::minus_i0), c.minus, 1e-12);
  }
  const auto sp = SpectralParam::make(2, 0.3);
  CHECK_THROWS_AS(hyp2f1_boundary(sp, 1.0, BoundarySide::plus_i0), InvalidInput);
  CHECK_THROWS_AS(hyp2f1_boundary(sp, 0.5, BoundarySide::plus_i0), InvalidInput);
}

TEST_CASE("Schwarz reflection and jump structure") {
  for (int n : {2, 3, 4, 5})
    for (double x : {1.01, 1.5, 1.75, 2.0, 3.0, 11.0}) {
      const auto sp = SpectralParam::make(n, 0.4 * 0.5 * (n - 1));
      const cplx p = hyp2f1_boundary(sp, x, BoundarySide::plus_i0);
      const cplx m = hyp2f1_boundary(sp, x, BoundarySide::minus_i0);
      CHECK(std::abs(m - std::conj(p)) <= 1e-13 * std::max(1.0, std::abs(p)));
      CHECK(std::abs(cut_jump(sp, x) - cplx(0.0, 2.0 * p.imag())) <= 1e-13 * std::max(1.0, std::abs(p)));
    }
  // n = 2: the jump is 2 pi i F(a, b; 1; 1 - x) / (Gamma(a) Gamma(b))
  const auto sp2 = SpectralParam::make(2, 0.3);
  const cplx expect2 = cplx(0.0, 2.0 * pi) * rgamma(sp2.a()) * rgamma(sp2.b()) *
                       hyp2f1_continued(sp2.a(), sp2.b(), 1.0, -0.5);
  CHECK_CLOSE(cut_jump(sp2, 1.5), expect2, 1e-13);
  // n = 3, lambda = 0.5: c - a = 0, so the jump is 2i (x - 1)^{-1/2}
  const auto sp3 = SpectralParam::make(3, 0.5);
  CHECK_CLOSE(cut_jump(sp3, 1.5), cplx(0.0, 2.0 * std::sqrt(2.0)), 1e-13);
  // near x = 1 the modulus follows the power profile
  const double mod = std::abs(hyp2f1_boundary(sp3, 1.0001, BoundarySide::plus_i0));
  CHECK(mod * std::sqrt(1e-4) == doctest::Approx(std::abs(near_one_coefficient(sp3).coefficient)).epsilon(2e-2));
}

TEST_CASE("real line profile") {
  const auto sp = SpectralParam::make(3, 0.3);
  CHECK(hyp2f1_real_line(sp, 1.0, BoundarySide::plus_i0) == cplx(0.0));
  CHECK_CLOSE(hyp2f1_real_line(sp, 0.4, BoundarySide::plus_i0), family_hyp2f1(sp, 0.4), 1e-15);
  CHECK_CLOSE(hyp2f1_real_line(sp, 1.4, BoundarySide::minus_i0), hyp2f1_boundary(sp, 1.4, BoundarySide::minus_i0), 1e-15);
  const cplx just_below = hyp2f1_real_line(sp, 1.0 - 1e-12, BoundarySide::plus_i0);
  CHECK(just_below.imag() == 0.0);
  CHECK(std::isfinite(just_below.real()));
}

TEST_CASE("near-one coefficients") {
  for (const auto& c : oracle::near_one_cases) {
    const auto co = near_one_coefficient(SpectralParam::make(c.n, c.lambda));
    CHECK(co.mode == (c.n == 2 ? NearOneMode::log : NearOneMode::power));
    CHECK_CLOSE(co.coefficient, c.coefficient, 1e-13);
  }
  CHECK_CLOSE(near_one_coefficient(SpectralParam::make(2, 0.0)).coefficient, cplx(1.0 / pi), 1e-14);
  CHECK_CLOSE(near_one_coefficient(SpectralParam::make(3, 0.0)).coefficient, cplx(pi / 2), 1e-14);
  const auto c4 = near_one_coefficient(SpectralParam::make(4, cplx(0.0, 1.0)));
  CHECK(c4.coefficient.real() > 0.0);
  CHECK(std::abs(c4.coefficient.imag()) < 1e-15);
  CHECK(c4.exponent == -1.0);
  // n = 3, lambda = 0.5: ratio at z = 0.999
  const auto sp = SpectralParam::make(3, 0.5);
  const cplx ratio = family_hyp2f1(sp, 0.999) / std::pow(1e-3, -0.5);
  CHECK(std::abs(ratio / near_one_coefficient(sp).coefficient - 1.0) < 0.05);
}
