#pragma once

#include <cstdint>
#include <memory>

#include "bitgeom/embeddings.hpp"
#include "bitgeom/report.hpp"

namespace bitgeom {

struct DistortionSearchBudget {
  int restarts = 64;
  int steps = 2000;
  int threads = 1;
};

struct DistortionSearchResult {
  Embedding best;
  FactorizationReport report;  // against the identity on the target space
  std::uint64_t seed = 0;
};

// Multi-start perturbation search plus deterministic pattern polish for
// low-distortion vertex placements into a plain l_p space. Deterministic
// under a fixed seed, independent of the thread count.
DistortionSearchResult distortion_search(std::shared_ptr<const MetricGraph> graph,
                                         const NormedSpace& target,
                                         const DistortionSearchBudget& budget = {},
                                         std::uint64_t seed = kDefaultSeed);

}  // namespace bitgeom
