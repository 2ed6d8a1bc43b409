#include "bitgeom/operators.hpp"

#include <cmath>

#include "bitgeom/errors.hpp"
#include "bitgeom/parallel.hpp"
#include "bitgeom/rng.hpp"

namespace bitgeom {

NormedOperator NormedOperator::identity(const NormedSpace& space) {
  NormedOperator op;
  op.rows = op.cols = space.dim;
  op.domain = op.codomain = space;
  op.matrix.assign(space.dim * space.dim, 0.0);
  for (std::size_t i = 0; i < space.dim; ++i) op.matrix[i * space.dim + i] = 1.0;
  return op;
}

NormedOperator NormedOperator::from_matrix(std::vector<std::vector<double>> m,
                                           NormedSpace domain, NormedSpace codomain) {
  if (m.size() != codomain.dim)
    throw argument_error("matrix has " + std::to_string(m.size()) +
                         " rows but the codomain has dimension " +
                         std::to_string(codomain.dim));
  NormedOperator op;
  op.rows = codomain.dim;
  op.cols = domain.dim;
  op.domain = std::move(domain);
  op.codomain = std::move(codomain);
  op.matrix.reserve(op.rows * op.cols);
  for (const auto& row : m) {
    if (row.size() != op.cols)
      throw argument_error("matrix row has " + std::to_string(row.size()) +
                           " entries but the domain has dimension " + std::to_string(op.cols));
    op.matrix.insert(op.matrix.end(), row.begin(), row.end());
  }
  return op;
}

Vec NormedOperator::apply(std::span<const double> v) const {
  if (v.size() != cols)
    throw argument_error("operator expects dimension " + std::to_string(cols) + ", got " +
                         std::to_string(v.size()));
  Vec out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    const double* row = matrix.data() + i * cols;
    for (std::size_t j = 0; j < cols; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

NormedOperator NormedOperator::normalized(const SearchBudget& budget, std::uint64_t seed) const {
  auto est = operator_norm(*this, budget, seed);
  if (est.upper <= 1.0) return *this;
  NormedOperator out = *this;
  for (double& x : out.matrix) x /= est.upper;
  return out;
}

namespace {

bool is_plain_lp(const NormedSpace& s, double p) {
  return s.kind == NormedSpace::Kind::lp && s.p == p;
}

double dual_p(double p) {
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

OperatorNormEstimate exact_estimate(double value, Vec witness) {
  OperatorNormEstimate e;
  e.lower = e.upper = value;
  e.exact = true;
  e.witness = std::move(witness);
  return e;
}

// largest singular value via power iteration on A^T A
OperatorNormEstimate l2_power_iteration(const NormedOperator& A) {
  std::size_t n = A.cols;
  Vec v(n, 0.0);
  Rng rng(7, 0);
  for (auto& x : v) x = rng.gaussian();
  double nv = norm(NormedSpace::l2(n), v);
  if (nv == 0.0) v[0] = 1.0;
  double value = 0.0;
  for (int it = 0; it < 2000; ++it) {
    Vec av = A.apply(v);
    // w = A^T (A v)
    Vec w(n, 0.0);
    for (std::size_t i = 0; i < A.rows; ++i) {
      const double* row = A.matrix.data() + i * A.cols;
      for (std::size_t j = 0; j < n; ++j) w[j] += row[j] * av[i];
    }
    double nw = norm(NormedSpace::l2(n), w);
    if (nw <= 1e-307) {
      return exact_estimate(0.0, Vec(n, 0.0));
    }
    for (std::size_t j = 0; j < n; ++j) v[j] = w[j] / nw;
    double next = std::sqrt(nw);
    if (it > 16 && std::fabs(next - value) <= 1e-15 * std::max(1.0, next)) {
      value = next;
      break;
    }
    value = next;
  }
  // the final iterate is an evaluated witness, so the lower bound is certified
  double nv2 = norm(NormedSpace::l2(n), v);
  double attained = nv2 > 0 ? norm(NormedSpace::l2(A.rows), A.apply(v)) / nv2 : 0.0;
  OperatorNormEstimate e;
  e.lower = attained;
  e.upper = std::max(value, attained);
  e.exact = false;
  e.witness = v;
  return e;
}

}  // namespace

OperatorNormEstimate operator_norm(const NormedOperator& A, const SearchBudget& budget,
                                   std::uint64_t seed) {
  bool zero = true;
  for (double x : A.matrix)
    if (x != 0.0) {
      zero = false;
      break;
    }
  if (zero) return exact_estimate(0.0, Vec(A.cols, 0.0));

  // l1 domain: the norm is attained at a coordinate vector
  if (is_plain_lp(A.domain, 1.0)) {
    double best = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < A.cols; ++j) {
      Vec col(A.rows);
      for (std::size_t i = 0; i < A.rows; ++i) col[i] = A.entry(i, j);
      double v = norm(A.codomain, col);
      if (v > best) {
        best = v;
        best_j = j;
      }
    }
    Vec w(A.cols, 0.0);
    w[best_j] = 1.0;
    return exact_estimate(best, std::move(w));
  }

  // linf codomain with an l_p domain: max dual norm of a row; the witness is
  // the sign/power pattern norming that row
  if (std::isinf(A.codomain.p) && A.codomain.kind == NormedSpace::Kind::lp &&
      A.domain.kind == NormedSpace::Kind::lp) {
    double q = dual_p(A.domain.p);
    double best = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < A.rows; ++i) {
      Vec row(A.cols);
      for (std::size_t j = 0; j < A.cols; ++j) row[j] = A.entry(i, j);
      double v = norm(NormedSpace::lp(q, A.cols), row);
      if (v > best) {
        best = v;
        best_i = i;
      }
    }
    // norming vector for the row under the domain norm
    Vec row(A.cols);
    for (std::size_t j = 0; j < A.cols; ++j) row[j] = A.entry(best_i, j);
    Vec w = norming_functional(NormedSpace::lp(q, A.cols), row);
    double wn = norm(A.domain, w);
    if (wn > 0)
      for (double& x : w) x /= wn;
    return exact_estimate(best, std::move(w));
  }

  if (is_plain_lp(A.domain, 2.0) && is_plain_lp(A.codomain, 2.0)) return l2_power_iteration(A);

  // general case: multi-start projected ascent of ||Av|| over the unit ball
  int restarts = std::max(1, budget.restarts);
  std::vector<std::pair<double, Vec>> results(restarts);
  parallel_for(static_cast<std::size_t>(restarts), budget.threads, [&](std::size_t r) {
    Rng rng(seed, r);
    Vec v(A.cols);
    if (r < A.cols) {
      v.assign(A.cols, 0.0);
      v[r] = 1.0;  // coordinate starts first
    } else {
      for (auto& x : v) x = rng.gaussian();
    }
    project_to_ball(A.domain, v);
    double cur = norm(A.codomain, A.apply(v));
    double sigma = 0.5;
    for (int step = 0; step < std::max(1, budget.steps); ++step) {
      Vec cand = v;
      for (auto& x : cand) x += sigma * rng.gaussian();
      project_to_ball(A.domain, cand);
      double val = norm(A.codomain, A.apply(cand));
      if (val > cur) {
        cur = val;
        v = std::move(cand);
      }
      sigma *= 0.985;
    }
    results[r] = {cur, std::move(v)};
  });
  OperatorNormEstimate e;
  for (const auto& [val, w] : results)
    if (val > e.lower) {
      e.lower = val;
      e.witness = w;
    }
  e.upper = e.lower;
  e.exact = false;
  return e;
}

}  // namespace bitgeom
