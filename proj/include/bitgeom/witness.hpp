#pragma once

#include <cstdint>
#include <vector>

#include "bitgeom/operators.hpp"
#include "bitgeom/spaces.hpp"
#include "bitgeom/vec.hpp"

namespace bitgeom {

// A finite sequence whose prefix projections are bounded by c and whose
// convex combinations all have norm at least psi.
struct SeparatedBasisWitness {
  std::vector<Vec> vectors;
  double psi = 0.0;
  double c = 1.0;
};

struct SeparationResult {
  double psi = 0.0;          // min over the probability simplex of ||sum w_i y_i||
  std::vector<double> weights;
  int iterations = 0;
  double gap = 0.0;          // final duality gap; psi - optimum <= gap
};

// Minimizes ||sum w_i y_i|| over the probability simplex by Frank-Wolfe with
// exact line search; the problem is convex, and the duality gap certifies a
// relative tolerance of 1e-6.
SeparationResult convex_separation(const std::vector<Vec>& vectors, const NormedSpace& space);

struct BasisConstantEstimate {
  double c = 1.0;
  std::size_t prefix = 0;     // prefix length achieving the reported ratio
  std::vector<double> coeffs;
};

// Best found value of ||sum_{i<=m} a_i y_i|| / ||sum_i a_i y_i|| over proper
// prefixes m and coefficient vectors a: a certified lower bound for the true
// basis constant. Vectors must be linearly independent.
BasisConstantEstimate basis_constant(const std::vector<Vec>& vectors, const NormedSpace& space,
                                     const SearchBudget& budget = {},
                                     std::uint64_t seed = kDefaultSeed);

}  // namespace bitgeom
