#include "bitgeom/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bitgeom/errors.hpp"
#include "bitgeom/metrics.hpp"
#include "bitgeom/parallel.hpp"
#include "bitgeom/rng.hpp"

namespace bitgeom {

namespace {

struct Candidate {
  std::vector<double> coords;  // flat, vertex-major
  double distortion = std::numeric_limits<double>::infinity();
};

double placement_distortion(const MetricGraph& g, const DistanceMatrix& dist,
                            const NormedSpace& space, const std::vector<double>& coords) {
  std::size_t n = g.order();
  std::size_t k = space.dim;
  double lip = 0.0;
  double colip = std::numeric_limits<double>::infinity();
  Vec diff(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t c = 0; c < k; ++c) diff[c] = coords[i * k + c] - coords[j * k + c];
      double nn = norm(space, diff);
      if (nn <= 0.0) return std::numeric_limits<double>::infinity();
      double d = static_cast<double>(dist.at(i, j));
      lip = std::max(lip, nn / d);
      colip = std::min(colip, nn / d);
    }
  return lip / colip;
}

// Deterministic coordinate-wise refinement with shrinking steps.
void pattern_polish(const MetricGraph& g, const DistanceMatrix& dist, const NormedSpace& space,
                    Candidate& cand, double scale) {
  std::size_t total = cand.coords.size();
  double step = 0.25 * scale;
  long trials = 0;
  while (step > 1e-7 * scale && trials < 2'000'000) {
    bool improved = false;
    for (std::size_t c = 0; c < total; ++c)
      for (double sgn : {1.0, -1.0}) {
        ++trials;
        double saved = cand.coords[c];
        cand.coords[c] = saved + sgn * step;
        double val = placement_distortion(g, dist, space, cand.coords);
        if (val < cand.distortion) {
          cand.distortion = val;
          improved = true;
          break;
        }
        cand.coords[c] = saved;
      }
    if (!improved) step *= 0.5;
  }
}

}  // namespace

DistortionSearchResult distortion_search(std::shared_ptr<const MetricGraph> graph,
                                         const NormedSpace& target,
                                         const DistortionSearchBudget& budget,
                                         std::uint64_t seed) {
  if (!graph) throw argument_error("distortion_search requires a graph");
  if (!target.is_simple_lp())
    throw argument_error("distortion_search targets plain l_p spaces");
  const MetricGraph& g = *graph;
  if (g.order() < 2) throw argument_error("distortion_search requires at least two vertices");
  const DistanceMatrix& dist = g.distances();
  std::size_t n = g.order();
  std::size_t k = target.dim;

  double diameter = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      diameter = std::max(diameter, static_cast<double>(dist.at(i, j)));

  bool equal_lengths = true;
  std::size_t len = g.vertex(0).size();
  for (const auto& v : g.vertices()) equal_lengths = equal_lengths && v.size() == len;
  bool cube_init_possible = equal_lengths && len <= k && len > 0;

  int restarts = std::max(1, budget.restarts);
  std::vector<Candidate> results(restarts);
  parallel_for(static_cast<std::size_t>(restarts), budget.threads, [&](std::size_t r) {
    Rng rng(seed, r);
    Candidate cand;
    cand.coords.assign(n * k, 0.0);
    if (r == 0) {
      // anchor start: coordinates are distances to the first k vertices
      std::size_t anchors = std::min(k, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < anchors; ++a)
          cand.coords[i * k + a] = static_cast<double>(dist.at(i, a)) +
                                   1e-4 * diameter * rng.gaussian();
    } else if (r == 1 && cube_init_possible) {
      // cube-corner start for same-length bit-string families
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < len; ++c)
          cand.coords[i * k + c] = g.vertex(i).bit(c) ? 1.0 : 0.0;
    } else {
      for (auto& x : cand.coords) x = 0.5 * diameter * rng.gaussian();
    }
    cand.distortion = placement_distortion(g, dist, target, cand.coords);
    if (std::isinf(cand.distortion)) {
      for (auto& x : cand.coords) x += 1e-3 * diameter * rng.gaussian();
      cand.distortion = placement_distortion(g, dist, target, cand.coords);
    }

    int steps = std::max(1, budget.steps);
    double sigma = 0.4 * diameter;
    double decay = std::pow(1e-5 / 0.4, 1.0 / steps);
    std::vector<double> trial;
    for (int t = 0; t < steps; ++t) {
      trial = cand.coords;
      std::size_t v = rng.uniform_index(n);
      for (std::size_t c = 0; c < k; ++c) trial[v * k + c] += sigma * rng.gaussian();
      double val = placement_distortion(g, dist, target, trial);
      if (val < cand.distortion) {
        cand.distortion = val;
        cand.coords.swap(trial);
      }
      sigma *= decay;
    }
    results[r] = std::move(cand);
  });

  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (results[r].distortion < results[best].distortion) best = r;
  Candidate winner = std::move(results[best]);
  pattern_polish(g, dist, target, winner, diameter);

  DistortionSearchResult out;
  out.seed = seed;
  out.best.graph = graph;
  out.best.space = target;
  out.best.images.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.best.images.emplace_back(winner.coords.begin() + static_cast<long>(i * k),
                                 winner.coords.begin() + static_cast<long>((i + 1) * k));
  out.report = factorization_report(out.best, NormedOperator::identity(target));
  return out;
}

}  // namespace bitgeom
