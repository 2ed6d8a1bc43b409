#pragma once

#include <cstdint>
#include <vector>

#include "bitgeom/bitstring.hpp"

namespace bitgeom {

inline constexpr int kDefaultPartitionCap = 4;

// r_n = 2^n - 1; level n of the tree is { s : r_n <= |s| < r_{n+1} }.
inline std::uint64_t level_boundary(int n) { return (std::uint64_t{1} << n) - 1; }

struct PartitionBlock {
  std::size_t index = 0;  // 1-based; level-n blocks occupy (q_{n-1}, q_n]
  int level = 0;
  BitString anchor;  // length r_level - 1; members strictly extend it
};

// Blocks of indices (q_{n-1}, q_n] partition level n of the tree. Block
// members are fully determined by the anchor, so they are enumerated on
// demand rather than stored: u -> anchor + u identifies the block with the
// nonempty nodes of the depth-2^n binary tree.
class LevelPartition {
 public:
  LevelPartition(int max_level, std::vector<std::size_t> q, std::vector<PartitionBlock> blocks)
      : max_level_(max_level), q_(std::move(q)), blocks_(std::move(blocks)) {}

  int max_level() const { return max_level_; }
  const std::vector<std::size_t>& q() const { return q_; }
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }

  const PartitionBlock& block(std::size_t index) const;  // 1-based

  // Index of the block containing `s`; requires 1 <= level_of(s) <= max_level.
  std::size_t block_of(const BitString& s) const;

  // Members of a block, shortest first: anchor extended by every nonempty
  // node of the depth-2^level tree. Size 2^{2^level + 1} - 2.
  std::vector<BitString> block_members(std::size_t index) const;

 private:
  int max_level_;
  std::vector<std::size_t> q_;  // q_0 = 0 < q_1 < ... < q_max
  std::vector<PartitionBlock> blocks_;
};

// Anchors at level n are the maximal members of level n-1 (all strings of
// length r_n - 1) in lexicographic order. The empty sequence carries no
// block; indices start at 1 with the whole of level 1 as the first block.
LevelPartition baudier_partition(int max_level, int cap = kDefaultPartitionCap);

struct DecomposedPiece {
  BitString piece;
  std::size_t block;  // 1-based block index
};

// Splits s at cumulative lengths r_{i+1} - 1, so every piece except possibly
// the last has length 2^i; pairs each piece with the block containing the
// cumulative prefix. Requires s nonempty and level_of(s) <= max_level.
std::vector<DecomposedPiece> decompose(const BitString& s, const LevelPartition& p);

}  // namespace bitgeom
