#pragma once

#include <cstdint>
#include <string>

#include "bitgeom/operators.hpp"

namespace bitgeom {

// Search output for delta(eps) = 1 - sup of midpoint norms over unit-ball
// pairs separated by at least eps through the operator. The search may miss
// the true supremum, so `delta` is an upper estimate of the true modulus.
struct ModulusEstimate {
  double eps = 0.0;
  double delta = 1.0;
  bool feasible = false;  // a constrained pair was found at all
  Vec x1, x2;             // best pair (empty when infeasible)
  double midpoint_norm = 0.0;
  double separation = 0.0;  // ||(A x1 - A x2) / 2|| at the best pair
};

// Requires eps > 0 and ||A|| <= 1. If no pair satisfies the separation
// constraint (for instance eps > ||A||), returns delta = 1 by convention.
ModulusEstimate modulus_of_convexity(const NormedOperator& A, double eps,
                                     const SearchBudget& budget = {},
                                     std::uint64_t seed = kDefaultSeed);

// Pluggable modulus for the certificate extractors and the lower-bound
// solver. The analytic form is exact for identities on l2 spaces; numerical
// values are upper estimates, so certificates built from them say so.
class ModulusProvider {
 public:
  static ModulusProvider analytic_l2();
  static ModulusProvider constant(double delta);
  static ModulusProvider numerical(const NormedOperator& A, SearchBudget budget = {},
                                   std::uint64_t seed = kDefaultSeed);

  double delta(double eps) const;
  const std::string& label() const { return label_; }

 private:
  enum class Kind { analytic_l2, constant, numerical };
  Kind kind_ = Kind::analytic_l2;
  double constant_ = 0.0;
  const NormedOperator* op_ = nullptr;
  SearchBudget budget_;
  std::uint64_t seed_ = kDefaultSeed;
  std::string label_;
};

}  // namespace bitgeom
