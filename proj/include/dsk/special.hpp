#pragma once

#include "dsk/common.hpp"

namespace dsk {

// Rising factorial d(d+1)...(d+k-1).
cplx pochhammer(cplx d, int k);

bool is_nonpositive_integer(cplx z);

// Throws PoleError at nonpositive integers.
cplx gamma_fn(cplx z);
cplx digamma(cplx z);

// Entire companions: 1/Gamma and digamma/Gamma, finite everywhere.
cplx rgamma(cplx z);
cplx digamma_over_gamma(cplx z);


}  // namespace dsk
