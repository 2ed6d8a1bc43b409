#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bitgeom/spaces.hpp"
#include "bitgeom/vec.hpp"
#include "bitgeom/version.hpp"

namespace bitgeom {

struct SearchBudget {
  int restarts = 64;
  int steps = 500;
  int threads = 1;
};

// Dense linear map between finite-dimensional normed spaces. Rows index the
// codomain, columns the domain.
struct NormedOperator {
  std::size_t rows = 0, cols = 0;
  std::vector<double> matrix;  // row-major
  NormedSpace domain, codomain;

  static NormedOperator identity(const NormedSpace& space);
  static NormedOperator from_matrix(std::vector<std::vector<double>> m, NormedSpace domain,
                                    NormedSpace codomain);

  double entry(std::size_t i, std::size_t j) const { return matrix[i * cols + j]; }
  Vec apply(std::span<const double> v) const;

  // Copy scaled so the operator norm upper estimate is at most 1.
  NormedOperator normalized(const SearchBudget& budget = {},
                            std::uint64_t seed = kDefaultSeed) const;
};

struct OperatorNormEstimate {
  double lower = 0.0;  // certified: attained by the witness
  double upper = 0.0;  // heuristic estimate; equals lower when exact
  bool exact = false;
  Vec witness;
};

// Exact closed forms for l1 domains (max column norm) and linf codomains
// (max dual row norm); power iteration for l2 -> l2; projected multi-start
// ascent of ||Av|| over the unit ball otherwise.
OperatorNormEstimate operator_norm(const NormedOperator& A, const SearchBudget& budget = {},
                                   std::uint64_t seed = kDefaultSeed);

}  // namespace bitgeom
