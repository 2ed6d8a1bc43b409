#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "bitgeom/embeddings.hpp"
#include "bitgeom/operators.hpp"

namespace bitgeom {

// Computed two-sided constants of a map through an operator:
//   lip   = max over pairs of ||f(s) - f(t)|| / d(s,t)
//   colip = min over pairs of ||A f(s) - A f(t)|| / d(s,t)
//   D     = lip / colip  (the distortion once f is rescaled to be 1-Lipschitz)
// A collapsing pair (colip = 0) is reported as infinite D with its witness,
// never as an exception.
struct FactorizationReport {
  double lip = 0.0;
  double colip = 0.0;
  double D = 1.0;  // +inf when collapsed
  bool collapsed = false;
  std::pair<std::uint32_t, std::uint32_t> witness_upper{0, 0};  // attains lip
  std::pair<std::uint32_t, std::uint32_t> witness_lower{0, 0};  // attains colip
  bool sampled = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

struct ReportOptions {
  // above this many vertex pairs the scan switches to seeded sampling
  std::size_t exhaustive_pair_cap = 10'000'000;
  std::size_t sample_count = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
};

// Exact scan over all vertex pairs (or a seeded sample above the pair-count
// threshold, flagged in the report). The embedding must map into A's domain.
FactorizationReport factorization_report(const Embedding& f, const NormedOperator& A,
                                         const ReportOptions& opts = {});

// First violation of the two-sided hypothesis
//   d(s,t)/D <= ||A f(s) - A f(t)|| <= ||f(s) - f(t)|| <= d(s,t),
// if any, with a small relative slack for float noise.
struct HypothesisCheck {
  bool ok = true;
  std::pair<std::uint32_t, std::uint32_t> witness{0, 0};
  std::string violated;  // which inequality failed
};

HypothesisCheck check_two_sided(const Embedding& f, const NormedOperator& A, double D,
                                double rel_tol = 1e-9);

}  // namespace bitgeom
