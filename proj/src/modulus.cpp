#include "bitgeom/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bitgeom/errors.hpp"
#include "bitgeom/parallel.hpp"
#include "bitgeom/rng.hpp"

namespace bitgeom {

namespace {

struct PairState {
  Vec x1, x2;
  double obj = -1.0;  // midpoint norm; -1 marks infeasible/unset
};

double separation(const NormedOperator& A, const Vec& x1, const Vec& x2) {
  Vec d = A.apply(x1);
  Vec d2 = A.apply(x2);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (d[i] - d2[i]) / 2.0;
  return norm(A.codomain, d);
}

double midpoint_norm(const NormedOperator& A, const Vec& x1, const Vec& x2) {
  Vec m(x1.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = (x1[i] + x2[i]) / 2.0;
  return norm(A.domain, m);
}

// Deterministic coordinate refinement with shrinking steps; keeps the pair
// feasible at every accepted move.
void pattern_refine(const NormedOperator& A, double eps, PairState& s) {
  std::size_t n = s.x1.size();
  double step = 0.25;
  long trials = 0;
  while (step > 1e-7 && trials < 400000) {
    bool improved = false;
    for (int which = 0; which < 2; ++which) {
      for (std::size_t j = 0; j < n; ++j) {
        for (double sgn : {1.0, -1.0}) {
          ++trials;
          Vec c1 = s.x1, c2 = s.x2;
          (which == 0 ? c1 : c2)[j] += sgn * step;
          project_to_ball(A.domain, c1);
          project_to_ball(A.domain, c2);
          double obj = midpoint_norm(A, c1, c2);
          if (obj > s.obj && separation(A, c1, c2) >= eps) {
            s.obj = obj;
            s.x1 = std::move(c1);
            s.x2 = std::move(c2);
            improved = true;
            break;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
}

}  // namespace

ModulusEstimate modulus_of_convexity(const NormedOperator& A, double eps,
                                     const SearchBudget& budget, std::uint64_t seed) {
  if (!(eps > 0.0)) throw argument_error("modulus_of_convexity requires eps > 0");
  ModulusEstimate out;
  out.eps = eps;

  std::size_t n = A.cols;
  auto opn = operator_norm(A, {16, 200, 1}, seed + 101);
  Vec vmax = opn.witness;
  if (vmax.size() != n) vmax.assign(n, 0.0);
  project_to_ball(A.domain, vmax);
  Vec vmax_neg = vec_scaled(vmax, -1.0);

  // the widest pair available; if even this one misses eps the constraint
  // set is empty as far as the search can tell
  if (separation(A, vmax, vmax_neg) < eps) {
    out.delta = 1.0;
    out.feasible = false;
    return out;
  }

  // deterministic coordinate-pair starts, then random ones
  std::vector<std::pair<Vec, Vec>> fixed_starts;
  fixed_starts.emplace_back(vmax, vmax_neg);
  for (std::size_t i = 0; i < n && fixed_starts.size() < 24; ++i)
    for (std::size_t j = i + 1; j < n && fixed_starts.size() < 24; ++j) {
      Vec a(n, 0.0), b(n, 0.0);
      a[i] = 1.0;
      b[j] = 1.0;
      fixed_starts.emplace_back(a, b);
      b[j] = -1.0;
      fixed_starts.emplace_back(a, b);
    }

  int restarts = std::max(1, budget.restarts);
  std::vector<PairState> results(restarts);
  parallel_for(static_cast<std::size_t>(restarts), budget.threads, [&](std::size_t r) {
    Rng rng(seed, r);
    PairState s;
    if (r < fixed_starts.size()) {
      s.x1 = fixed_starts[r].first;
      s.x2 = fixed_starts[r].second;
    } else {
      s.x1.resize(n);
      s.x2.resize(n);
      for (auto& x : s.x1) x = rng.gaussian();
      for (auto& x : s.x2) x = rng.gaussian();
      project_to_ball(A.domain, s.x1);
      project_to_ball(A.domain, s.x2);
    }
    // feasibility repair: blend toward the widest pair until separated
    if (separation(A, s.x1, s.x2) < eps) {
      bool ok = false;
      for (int k = 1; k <= 16; ++k) {
        double lam = k / 16.0;
        Vec c1 = vec_add(vec_scaled(s.x1, 1.0 - lam), vec_scaled(vmax, lam));
        Vec c2 = vec_add(vec_scaled(s.x2, 1.0 - lam), vec_scaled(vmax_neg, lam));
        project_to_ball(A.domain, c1);
        project_to_ball(A.domain, c2);
        if (separation(A, c1, c2) >= eps) {
          s.x1 = std::move(c1);
          s.x2 = std::move(c2);
          ok = true;
          break;
        }
      }
      if (!ok) return;  // leave obj = -1
    }
    s.obj = midpoint_norm(A, s.x1, s.x2);

    int steps = std::max(1, budget.steps);
    double sigma = 0.3;
    double decay = std::pow(1e-4 / 0.3, 1.0 / steps);
    for (int t = 0; t < steps; ++t) {
      Vec c1 = s.x1, c2 = s.x2;
      int mode = static_cast<int>(rng.uniform_index(4));
      if (mode < 2) {
        Vec& target = mode == 0 ? c1 : c2;
        for (auto& x : target) x += sigma * rng.gaussian();
      } else if (mode == 2) {
        for (auto& x : c1) x += sigma * rng.gaussian();
        for (auto& x : c2) x += sigma * rng.gaussian();
      } else {
        // radial push toward the sphere
        double n1 = norm(A.domain, c1), n2 = norm(A.domain, c2);
        if (n1 > 1e-12)
          for (auto& x : c1) x /= n1;
        if (n2 > 1e-12)
          for (auto& x : c2) x /= n2;
      }
      project_to_ball(A.domain, c1);
      project_to_ball(A.domain, c2);
      double obj = midpoint_norm(A, c1, c2);
      if (obj > s.obj && separation(A, c1, c2) >= eps) {
        s.obj = obj;
        s.x1 = std::move(c1);
        s.x2 = std::move(c2);
      }
      sigma *= decay;
    }
    pattern_refine(A, eps, s);
    results[r] = std::move(s);
  });

  int best = -1;
  for (int r = 0; r < restarts; ++r)
    if (results[r].obj > (best < 0 ? -1.0 : results[best].obj)) best = r;
  if (best < 0) {
    out.delta = 1.0;
    out.feasible = false;
    return out;
  }
  const PairState& s = results[best];
  out.feasible = true;
  out.midpoint_norm = s.obj;
  out.delta = std::max(0.0, 1.0 - s.obj);
  out.x1 = s.x1;
  out.x2 = s.x2;
  out.separation = separation(A, s.x1, s.x2);
  return out;
}

ModulusProvider ModulusProvider::analytic_l2() {
  ModulusProvider p;
  p.kind_ = Kind::analytic_l2;
  p.label_ = "l2-analytic";
  return p;
}

ModulusProvider ModulusProvider::constant(double delta) {
  ModulusProvider p;
  p.kind_ = Kind::constant;
  p.constant_ = delta;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "constant:%g", delta);
  p.label_ = buf;
  return p;
}

ModulusProvider ModulusProvider::numerical(const NormedOperator& A, SearchBudget budget,
                                           std::uint64_t seed) {
  ModulusProvider p;
  p.kind_ = Kind::numerical;
  p.op_ = &A;
  p.budget_ = budget;
  p.seed_ = seed;
  p.label_ = "numerical";
  return p;
}

double ModulusProvider::delta(double eps) const {
  switch (kind_) {
    case Kind::analytic_l2:
      if (eps <= 0.0) return 0.0;
      if (eps >= 1.0) return 1.0;
      return 1.0 - std::sqrt(1.0 - eps * eps);
    case Kind::constant:
      return constant_;
    case Kind::numerical:
      return modulus_of_convexity(*op_, eps, budget_, seed_).delta;
  }
  return 0.0;
}

}  // namespace bitgeom
