#include "bitgeom/report.hpp"

#include <cmath>

#include "bitgeom/errors.hpp"
#include "bitgeom/metrics.hpp"
#include "bitgeom/rng.hpp"

namespace bitgeom {

FactorizationReport factorization_report(const Embedding& f, const NormedOperator& A,
                                         const ReportOptions& opts) {
  f.validate();
  if (f.space.dim != A.domain.dim)
    throw argument_error("embedding maps into dimension " + std::to_string(f.space.dim) +
                         " but the operator domain has dimension " + std::to_string(A.domain.dim));
  const MetricGraph& g = *f.graph;
  if (g.order() < 2) throw argument_error("factorization_report requires at least two vertices");
  const DistanceMatrix& dist = g.distances();

  FactorizationReport rep;
  rep.lip = 0.0;
  rep.colip = std::numeric_limits<double>::infinity();
  rep.seed = opts.seed;

  std::vector<Vec> through;  // A f(v), precomputed
  through.reserve(g.order());
  for (const auto& img : f.images) through.push_back(A.apply(img));

  auto consider = [&](std::uint32_t i, std::uint32_t j) {
    double d = static_cast<double>(dist.at(i, j));
    double up = norm(f.space, vec_sub(f.images[i], f.images[j])) / d;
    double low = norm(A.codomain, vec_sub(through[i], through[j])) / d;
    if (up > rep.lip) {
      rep.lip = up;
      rep.witness_upper = {i, j};
    }
    if (low < rep.colip) {
      rep.colip = low;
      rep.witness_lower = {i, j};
    }
  };

  std::size_t n = g.order();
  std::size_t pairs = n * (n - 1) / 2;
  if (pairs <= opts.exhaustive_pair_cap) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) consider(i, j);
  } else {
    rep.sampled = true;
    rep.samples = opts.sample_count;
    Rng rng(opts.seed, 0);
    for (std::size_t k = 0; k < opts.sample_count; ++k) {
      auto i = static_cast<std::uint32_t>(rng.uniform_index(n));
      auto j = static_cast<std::uint32_t>(rng.uniform_index(n));
      if (i == j) continue;
      consider(std::min(i, j), std::max(i, j));
    }
  }

  if (rep.colip <= 0.0) {
    rep.collapsed = true;
    rep.colip = 0.0;
    rep.D = std::numeric_limits<double>::infinity();
  } else {
    rep.D = rep.lip / rep.colip;
  }
  return rep;
}

HypothesisCheck check_two_sided(const Embedding& f, const NormedOperator& A, double D,
                                double rel_tol) {
  f.validate();
  const MetricGraph& g = *f.graph;
  const DistanceMatrix& dist = g.distances();
  std::vector<Vec> through;
  through.reserve(g.order());
  for (const auto& img : f.images) through.push_back(A.apply(img));

  HypothesisCheck chk;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    for (std::uint32_t j = i + 1; j < g.order(); ++j) {
      double d = static_cast<double>(dist.at(i, j));
      double fn = norm(f.space, vec_sub(f.images[i], f.images[j]));
      double an = norm(A.codomain, vec_sub(through[i], through[j]));
      if (fn > d * (1.0 + rel_tol)) {
        chk.ok = false;
        chk.witness = {i, j};
        chk.violated = "||f(s)-f(t)|| <= d(s,t)";
        return chk;
      }
      if (an > fn * (1.0 + rel_tol) + 1e-15) {
        chk.ok = false;
        chk.witness = {i, j};
        chk.violated = "||Af(s)-Af(t)|| <= ||f(s)-f(t)||";
        return chk;
      }
      if (an * D < d * (1.0 - rel_tol)) {
        chk.ok = false;
        chk.witness = {i, j};
        chk.violated = "d(s,t)/D <= ||Af(s)-Af(t)||";
        return chk;
      }
    }
  return chk;
}

}  // namespace bitgeom
