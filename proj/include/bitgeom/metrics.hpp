#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bitgeom/graphs.hpp"

namespace bitgeom {

// Exact symmetric hop-count matrix. Entries are integers, never floats.
struct DistanceMatrix {
  std::size_t order = 0;
  std::vector<std::int32_t> entries;  // row-major, order x order

  std::int32_t at(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
  std::int32_t& at(std::size_t i, std::size_t j) { return entries[i * order + j]; }
};

inline constexpr std::size_t kFullMatrixCap = 20000;

// Single-source hop counts; structure_error naming an unreachable vertex if
// the graph is disconnected.
std::vector<std::int32_t> bfs_from(const MetricGraph& g, std::uint32_t source);

// All-pairs hop counts. Graphs above `order_cap` vertices must use per-source
// queries instead.
DistanceMatrix bfs_distances(const MetricGraph& g, std::size_t order_cap = kFullMatrixCap,
                             int threads = 1);

// Closed form for the tree metric: |s| + |t| - 2 * |longest common prefix|.
std::int64_t tree_distance(const BitString& s, const BitString& t);

enum class MetricAxiom { square, nonnegative, zero_diagonal, symmetry, triangle };

struct MetricViolation {
  MetricAxiom axiom;
  std::size_t i = 0, j = 0, k = 0;  // witness indices (k used for triangle)
  std::string describe() const;
};

struct MetricCheck {
  bool valid = true;
  std::vector<MetricViolation> violations;  // one witness per violated instance, capped
  std::size_t total_violations = 0;
};

// Lists violated axioms with witness triples; empty report means the matrix
// is a metric. Witness collection stops after `max_witnesses`.
MetricCheck check_metric(const DistanceMatrix& m, std::size_t max_witnesses = 100);

// Header row of vertex strings, then integer entries.
std::string distance_matrix_csv(const MetricGraph& g, const DistanceMatrix& m);

}  // namespace bitgeom
