#pragma once

#include "dsk/common.hpp"

namespace dsk {

struct SeriesOptions {
  int max_terms = 10000;
  double tol = 1e-15;
};

struct SeriesDiagnostics {
  int terms = 0;
  double tail_bound = 0.0;
};

// Plain Gauss series, |z| < 1.
cplx hyp2f1_series(cplx a, cplx b, cplx c, cplx z, const SeriesOptions& opt = {},
                   SeriesDiagnostics* diag = nullptr);

enum class Hyp2f1Route { terminating, direct, pfaff, one_minus_z, inverse_z, taylor_path };

const char* route_name(Hyp2f1Route r);

// Distance from z to the ray [1, inf).
double distance_to_cut(cplx z);

inline constexpr double kTolCut = 1e-12;

Hyp2f1Route select_route(cplx a, cplx b, cplx c, cplx z);

// Analytic continuation to C \ [1, inf) along the selected route.
cplx hyp2f1_continued(cplx a, cplx b, cplx c, cplx z);

// Forces a specific route; throws InvalidInput where the route does not converge.
cplx hyp2f1_via(Hyp2f1Route route, cplx a, cplx b, cplx c, cplx z);

// Connection around z = 1 in terms of t = 1 - z, with log(1 - z) supplied by the
// caller. Handles integer c - a - b through the digamma series.
cplx hyp2f1_connection_one_minus_z(cplx a, cplx b, cplx c, cplx t, cplx log_t);

// Connection around infinity in terms of w = 1/z, with log(-z) supplied by the
// caller. Handles integer b - a through the digamma series.
cplx hyp2f1_connection_inverse(cplx a, cplx b, cplx c, cplx w, cplx log_minus_z);

}  // namespace dsk
