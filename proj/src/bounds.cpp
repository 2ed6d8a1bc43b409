#include "bitgeom/bounds.hpp"

#include <cmath>

#include "bitgeom/errors.hpp"

namespace bitgeom {

double lower_bound_solve(GraphFamily family, int n, const ModulusProvider& provider) {
  if (n < 0) throw argument_error("lower_bound_solve requires n >= 0");
  double eps_factor;
  switch (family) {
    case GraphFamily::tree: eps_factor = 0.5; break;
    case GraphFamily::diamond:
    case GraphFamily::laakso: eps_factor = 1.0; break;
    default: throw argument_error("lower_bound_solve applies to tree, diamond, or laakso");
  }
  auto phi = [&](double d) {
    double delta = provider.delta(eps_factor / d);
    return d * std::pow(1.0 - delta, n);
  };
  if (phi(1.0) >= 1.0) return 1.0;
  double lo = 1.0, hi = 2.0;
  while (phi(hi) < 1.0) {
    hi *= 2.0;
    if (hi > 1e12)
      throw structure_error("no admissible constant below 1e12; the modulus is degenerate");
  }
  while (hi - lo > 1e-9) {
    double mid = (lo + hi) / 2.0;
    if (phi(mid) >= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace bitgeom
