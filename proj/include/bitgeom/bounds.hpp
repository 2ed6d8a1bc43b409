#pragma once

#include "bitgeom/graphs.hpp"
#include "bitgeom/modulus.hpp"

namespace bitgeom {

// Minimal admissible two-sided constant for the given family at generation
// n: the smallest D >= 1 with D (1 - delta(1/D))^n >= 1 (diamond, laakso) or
// D (1 - delta(1/2D))^n >= 1 (tree), solved by bisection to 1e-9. Requires a
// modulus nondecreasing in its argument; a zero modulus yields 1.
double lower_bound_solve(GraphFamily family, int n, const ModulusProvider& provider);

}  // namespace bitgeom
