#include "bitgeom/witness.hpp"

#include <algorithm>
#include <cmath>

#include "bitgeom/errors.hpp"
#include "bitgeom/parallel.hpp"
#include "bitgeom/rng.hpp"

namespace bitgeom {

namespace {

Vec combine(const std::vector<Vec>& vectors, const std::vector<double>& w) {
  Vec out(vectors[0].size(), 0.0);
  for (std::size_t i = 0; i < vectors.size(); ++i) vec_axpy(out, w[i], vectors[i]);
  return out;
}

// golden-section minimization of a convex function on [0, 1]
double line_search(const std::function<double(double)>& f) {
  const double inv_phi = 0.6180339887498949;
  double a = 0.0, b = 1.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 90; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double mid = (a + b) / 2.0;
  // endpoints sometimes win on piecewise-linear norms
  double f0 = f(0.0), f1 = f(1.0), fm = f(mid);
  if (f0 <= f1 && f0 <= fm) return 0.0;
  if (f1 <= fm) return 1.0;
  return mid;
}

}  // namespace

SeparationResult convex_separation(const std::vector<Vec>& vectors, const NormedSpace& space) {
  if (vectors.empty()) throw argument_error("convex_separation requires at least one vector");
  for (const auto& v : vectors)
    if (v.size() != space.dim)
      throw argument_error("convex_separation: vector dimension " + std::to_string(v.size()) +
                           " does not match the space dimension " + std::to_string(space.dim));
  std::size_t k = vectors.size();
  SeparationResult res;
  res.weights.assign(k, 1.0 / static_cast<double>(k));

  const int max_iter = 20000;
  const double rel_tol = 1e-6;
  for (int it = 0; it < max_iter; ++it) {
    Vec w = combine(vectors, res.weights);
    double value = norm(space, w);
    res.psi = value;
    res.iterations = it;
    if (value <= 1e-15) {
      res.gap = 0.0;
      return res;
    }
    Vec g = norming_functional(space, w);
    // linearized coordinates <g, y_j>
    std::vector<double> lin(k);
    for (std::size_t j = 0; j < k; ++j) lin[j] = vec_dot(g, vectors[j]);
    std::size_t jstar = 0;
    for (std::size_t j = 1; j < k; ++j)
      if (lin[j] < lin[jstar]) jstar = j;
    double current = 0.0;
    for (std::size_t j = 0; j < k; ++j) current += lin[j] * res.weights[j];
    res.gap = current - lin[jstar];
    if (res.gap <= rel_tol * std::max(value, 1e-30)) return res;

    const Vec& vertex = vectors[jstar];
    auto along = [&](double gamma) {
      Vec z(w.size());
      for (std::size_t i = 0; i < w.size(); ++i)
        z[i] = (1.0 - gamma) * w[i] + gamma * vertex[i];
      return norm(space, z);
    };
    double gamma = line_search(along);
    if (gamma <= 0.0) gamma = 2.0 / (it + 2.0);  // fallback keeps progress
    for (std::size_t j = 0; j < k; ++j) res.weights[j] *= 1.0 - gamma;
    res.weights[jstar] += gamma;
  }
  return res;
}

namespace {

// numerical rank check via modified Gram-Schmidt on the raw coordinates
bool linearly_independent(const std::vector<Vec>& vectors) {
  std::vector<Vec> basis;
  for (const auto& v : vectors) {
    Vec r = v;
    for (const auto& b : basis) vec_axpy(r, -vec_dot(r, b), b);
    double n = std::sqrt(vec_dot(r, r));
    double orig = std::sqrt(vec_dot(v, v));
    if (n <= 1e-10 * std::max(1.0, orig)) return false;
    for (auto& x : r) x /= n;
    basis.push_back(std::move(r));
  }
  return true;
}

}  // namespace

BasisConstantEstimate basis_constant(const std::vector<Vec>& vectors, const NormedSpace& space,
                                     const SearchBudget& budget, std::uint64_t seed) {
  if (vectors.empty()) throw argument_error("basis_constant requires at least one vector");
  for (const auto& v : vectors)
    if (v.size() != space.dim)
      throw argument_error("basis_constant: vector dimension mismatch");
  if (!linearly_independent(vectors))
    throw argument_error("basis_constant requires linearly independent vectors");

  std::size_t k = vectors.size();
  BasisConstantEstimate best;
  best.c = 1.0;
  best.prefix = k;
  best.coeffs.assign(k, 0.0);
  if (!best.coeffs.empty()) best.coeffs[0] = 1.0;
  if (k == 1) return best;  // no proper prefix projections

  auto ratio = [&](std::size_t m, const std::vector<double>& a) {
    Vec full(space.dim, 0.0), head(space.dim, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      vec_axpy(full, a[i], vectors[i]);
      if (i < m) vec_axpy(head, a[i], vectors[i]);
    }
    double denom = norm(space, full);
    if (denom <= 1e-14) return -1.0;
    return norm(space, head) / denom;
  };

  int restarts = std::max(1, budget.restarts);
  std::vector<BasisConstantEstimate> results(restarts);
  parallel_for(static_cast<std::size_t>(restarts), budget.threads, [&](std::size_t r) {
    Rng rng(seed, r);
    BasisConstantEstimate local;
    local.c = 0.0;
    for (std::size_t m = 1; m < k; ++m) {
      std::vector<double> a(k);
      if (r == 0) {
        // deterministic start: unit mass on the prefix boundary
        std::fill(a.begin(), a.end(), 0.0);
        a[m - 1] = 1.0;
        if (m < k) a[m] = -0.5;
      } else {
        for (auto& x : a) x = rng.gaussian();
      }
      double cur = ratio(m, a);
      if (cur < 0) {
        std::fill(a.begin(), a.end(), 0.0);
        a[0] = 1.0;
        cur = ratio(m, a);
      }
      double sigma = 0.5;
      int steps = std::max(1, budget.steps);
      double decay = std::pow(1e-4 / 0.5, 1.0 / steps);
      for (int t = 0; t < steps; ++t) {
        std::vector<double> cand = a;
        for (auto& x : cand) x += sigma * rng.gaussian();
        double val = ratio(m, cand);
        if (val > cur) {
          cur = val;
          a = std::move(cand);
        }
        sigma *= decay;
      }
      // deterministic polish
      double step = 0.1;
      while (step > 1e-8) {
        bool improved = false;
        for (std::size_t j = 0; j < k; ++j)
          for (double sgn : {1.0, -1.0}) {
            std::vector<double> cand = a;
            cand[j] += sgn * step;
            double val = ratio(m, cand);
            if (val > cur) {
              cur = val;
              a = std::move(cand);
              improved = true;
              break;
            }
          }
        if (!improved) step *= 0.5;
      }
      if (cur > local.c) {
        local.c = cur;
        local.prefix = m;
        local.coeffs = a;
      }
    }
    results[r] = std::move(local);
  });
  for (const auto& res : results)
    if (res.c > best.c) best = res;
  if (best.c < 1.0) {
    // the ratio 1 is always attained by coefficients supported on the prefix
    best.c = 1.0;
    best.prefix = k - 1;
    best.coeffs.assign(k, 0.0);
    best.coeffs[0] = 1.0;
  }
  return best;
}

}  // namespace bitgeom
