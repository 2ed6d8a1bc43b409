#include "bitgeom/metrics.hpp"

#include <queue>

#include "bitgeom/errors.hpp"
#include "bitgeom/parallel.hpp"

namespace bitgeom {

namespace {

std::vector<std::int32_t> bfs_adj(const std::vector<std::vector<std::uint32_t>>& adj,
                                  std::uint32_t source) {
  std::vector<std::int32_t> dist(adj.size(), -1);
  std::queue<std::uint32_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

void require_reachable(const MetricGraph& g, const std::vector<std::int32_t>& dist,
                       std::uint32_t source) {
  for (std::size_t j = 0; j < dist.size(); ++j)
    if (dist[j] < 0)
      throw structure_error("graph is disconnected: no path from '" +
                            g.vertex(source).str() + "' to '" + g.vertex(j).str() + "'");
}

}  // namespace

std::vector<std::int32_t> bfs_from(const MetricGraph& g, std::uint32_t source) {
  auto dist = bfs_adj(g.adjacency(), source);
  require_reachable(g, dist, source);
  return dist;
}

DistanceMatrix bfs_distances(const MetricGraph& g, std::size_t order_cap, int threads) {
  std::size_t n = g.order();
  if (n > order_cap)
    throw resource_error("full distance matrix refused for " + std::to_string(n) +
                             " vertices > cap=" + std::to_string(order_cap) +
                             " (raise with --matrix-cap or use per-source queries)",
                         "matrix", "--matrix-cap");
  auto adj = g.adjacency();
  DistanceMatrix m;
  m.order = n;
  m.entries.assign(n * n, 0);
  // per-source runs are independent; each writes only its own row
  parallel_for(n, threads, [&](std::size_t src) {
    auto dist = bfs_adj(adj, static_cast<std::uint32_t>(src));
    require_reachable(g, dist, static_cast<std::uint32_t>(src));
    for (std::size_t j = 0; j < n; ++j) m.at(src, j) = dist[j];
  });
  return m;
}

std::int64_t tree_distance(const BitString& s, const BitString& t) {
  std::size_t lcp = common_prefix_length(s, t);
  return static_cast<std::int64_t>(s.size()) + static_cast<std::int64_t>(t.size()) -
         2 * static_cast<std::int64_t>(lcp);
}

std::string MetricViolation::describe() const {
  switch (axiom) {
    case MetricAxiom::square: return "matrix is not square";
    case MetricAxiom::nonnegative:
      return "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case MetricAxiom::zero_diagonal:
      return "nonzero diagonal at (" + std::to_string(i) + "," + std::to_string(i) + ")";
    case MetricAxiom::symmetry:
      return "asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case MetricAxiom::triangle:
      return "triangle violation d(" + std::to_string(i) + "," + std::to_string(k) +
             ") > d(" + std::to_string(i) + "," + std::to_string(j) + ") + d(" +
             std::to_string(j) + "," + std::to_string(k) + ")";
  }
  return "unknown";
}

MetricCheck check_metric(const DistanceMatrix& m, std::size_t max_witnesses) {
  if (m.entries.size() != m.order * m.order)
    throw argument_error("check_metric requires a square matrix");
  MetricCheck rep;
  auto add = [&](MetricViolation v) {
    ++rep.total_violations;
    rep.valid = false;
    if (rep.violations.size() < max_witnesses) rep.violations.push_back(v);
  };
  std::size_t n = m.order;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.at(i, i) != 0) add({MetricAxiom::zero_diagonal, i, i, 0});
    for (std::size_t j = 0; j < n; ++j) {
      if (m.at(i, j) < 0) add({MetricAxiom::nonnegative, i, j, 0});
      if (j > i && m.at(i, j) != m.at(j, i)) add({MetricAxiom::symmetry, i, j, 0});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (static_cast<std::int64_t>(m.at(i, k)) >
            static_cast<std::int64_t>(m.at(i, j)) + static_cast<std::int64_t>(m.at(j, k)))
          add({MetricAxiom::triangle, i, j, k});
      }
    }
  return rep;
}

std::string distance_matrix_csv(const MetricGraph& g, const DistanceMatrix& m) {
  std::string out;
  for (std::size_t j = 0; j < g.order(); ++j) {
    if (j) out += ',';
    out += g.vertex(j).str();
  }
  out += '\n';
  for (std::size_t i = 0; i < m.order; ++i) {
    for (std::size_t j = 0; j < m.order; ++j) {
      if (j) out += ',';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace bitgeom
