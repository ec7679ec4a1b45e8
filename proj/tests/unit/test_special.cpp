#include <doctest.h>

#include "dsk/special.hpp"
#include "helpers.hpp"
#include "oracle_values.hpp"

using namespace dsk;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(cplx(0.7, 2.0), 0) == cplx(1.0));
  CHECK(pochhammer(2.0, 3) == cplx(24.0));
  CHECK(pochhammer(-1.0, 3) == cplx(0.0));
  CHECK_CLOSE(pochhammer(cplx(0.5, 1.0), 4), gamma_fn(cplx(4.5, 1.0)) / gamma_fn(cplx(0.5, 1.0)), 1e-13);
}

TEST_CASE("gamma and digamma against reference values") {
  for (const auto& c : oracle::special_cases) {
    CAPTURE(c.z);
    CHECK_CLOSE(gamma_fn(c.z), c.gamma, 1e-13);
    CHECK_CLOSE(digamma(c.z), c.digamma, 1e-13);
    CHECK_CLOSE(rgamma(c.z) * c.gamma, cplx(1.0), 1e-13);
  }
  CHECK_CLOSE(gamma_fn(1.0), cplx(1.0), 1e-14);
  CHECK_CLOSE(gamma_fn(0.5), cplx(std::sqrt(pi)), 1e-15);
  CHECK_CLOSE(digamma(1.0), cplx(-euler_gamma), 1e-15);
}

TEST_CASE("poles") {
  CHECK(is_nonpositive_integer(0.0));
  CHECK(is_nonpositive_integer(-3.0));
  CHECK_FALSE(is_nonpositive_integer(cplx(-3.0, 1e-3)));
  CHECK_FALSE(is_nonpositive_integer(2.0));
  CHECK_THROWS_AS(gamma_fn(-2.0), PoleError);
  CHECK_THROWS_AS(digamma(0.0), PoleError);
  CHECK(rgamma(-4.0) == cplx(0.0));
  // digamma / gamma at -m is (-1)^{m+1} m!
  CHECK_CLOSE(digamma_over_gamma(0.0), cplx(-1.0), 1e-14);
  CHECK_CLOSE(digamma_over_gamma(-3.0), cplx(6.0), 1e-14);
  CHECK_CLOSE(digamma_over_gamma(cplx(0.3, 0.4)), digamma(cplx(0.3, 0.4)) / gamma_fn(cplx(0.3, 0.4)), 1e-13);
}
