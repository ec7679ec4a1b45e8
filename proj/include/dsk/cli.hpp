#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dsk/crown.hpp"

namespace dsk {

// Point specs:
//   ie0, -ie0           +-i e_0
//   H:s, Hbar:s         a_s (+-i e_0)
//   S:x0,x1,...,xn      (i x0, x1, ..., xn) on the sphere
//   dS:s,w1,...,wn      de Sitter chart point (sinh s, cosh s * w)
//   Z:re:im,re:im,...   explicit complex coordinates
CrownPoint parse_point_spec(const std::string& spec, int n);

// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsk
