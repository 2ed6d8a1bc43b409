#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "bitgeom/embeddings.hpp"
#include "bitgeom/partition.hpp"

namespace bitgeom {

// Sorted (coordinate, value) pairs; the image of a depth-d node touches at
// most d coordinates, so deep trees are handled without dense tables.
using SparseVec = std::vector<std::pair<std::size_t, double>>;

double sparse_l1_distance(const SparseVec& a, const SparseVec& b);

// Blocks are disjoint coordinate ranges of one big l1 space, each carrying
// the canonical one-coordinate-per-node tree embedding of its depth-2^level
// tree. Every block piece sends the root to 0, the block projection constant
// is 1, and the pieces share the two-sided constant D = 1.
class GluedPlan {
 public:
  explicit GluedPlan(LevelPartition partition);

  const LevelPartition& partition() const { return partition_; }
  std::size_t total_dim() const { return total_dim_; }
  double kappa() const { return 1.0; }
  double block_constant() const { return 1.0; }

  std::size_t block_offset(std::size_t block_index) const;  // 1-based
  std::size_t block_dim(std::size_t block_index) const;

  // Image of one block piece: the canonical tree embedding of the block's
  // depth-2^level tree at node `piece`, shifted into the block's coordinates.
  SparseVec block_image(std::size_t block_index, const BitString& piece) const;

  // f(s) = sum of block piece images along the decomposition; f(root) = 0.
  SparseVec evaluate(const BitString& s) const;

  // Convenience: f(s) - f(t) in the l1 norm.
  double pair_distance(const BitString& s, const BitString& t) const;

 private:
  LevelPartition partition_;
  std::vector<std::size_t> offsets_;  // per block, 0-based storage
  std::size_t total_dim_ = 0;
};

inline constexpr std::size_t kGluedMaterializeCap = 50'000'000;  // table entries

// Materializes the glued map on the tree truncated at the partition's max
// level (depth 2^{max_level+1} - 2). Refuses tables above the cap; deep
// verification should use GluedPlan::evaluate instead.
Embedding baudier_glued_embedding(const GluedPlan& plan,
                                  std::size_t materialize_cap = kGluedMaterializeCap);

}  // namespace bitgeom
