#include "bitgeom/partition.hpp"

#include <string>

#include "bitgeom/errors.hpp"

namespace bitgeom {

const PartitionBlock& LevelPartition::block(std::size_t index) const {
  if (index == 0 || index > blocks_.size())
    throw argument_error("block index " + std::to_string(index) + " out of range");
  return blocks_[index - 1];
}

std::size_t LevelPartition::block_of(const BitString& s) const {
  int lvl = level_of(s);
  if (lvl < 1) throw argument_error("the empty sequence carries no block");
  if (lvl > max_level_)
    throw argument_error("node at level " + std::to_string(lvl) +
                         " is beyond the partition max level " + std::to_string(max_level_));
  // anchor = prefix of length r_lvl - 1; blocks at this level are in
  // lexicographic anchor order, so the offset is the anchor's binary value
  BitString anchor = s.prefix(static_cast<std::size_t>(level_boundary(lvl)) - 1);
  return q_[static_cast<std::size_t>(lvl) - 1] + anchor.value() + 1;
}

std::vector<BitString> LevelPartition::block_members(std::size_t index) const {
  const PartitionBlock& b = block(index);
  std::uint64_t depth = std::uint64_t{1} << b.level;  // members extend the anchor by 1..2^level
  std::vector<BitString> members;
  members.reserve((std::uint64_t{2} << depth) - 2);
  for (std::uint64_t len = 1; len <= depth; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
      members.push_back(concat(b.anchor, BitString::from_value(v, len)));
  return members;
}

LevelPartition baudier_partition(int max_level, int cap) {
  if (max_level < 1) throw argument_error("partition max level must be >= 1");
  if (max_level > cap)
    throw resource_error("partition level cap exceeded: max_level=" + std::to_string(max_level) +
                             " > cap=" + std::to_string(cap) + " (raise with --partition-cap)",
                         "partition", "--partition-cap");
  std::vector<std::size_t> q = {0};
  std::vector<PartitionBlock> blocks;
  for (int n = 1; n <= max_level; ++n) {
    std::uint64_t anchor_len = level_boundary(n) - 1;
    std::uint64_t count = std::uint64_t{1} << anchor_len;
    std::size_t base = q.back();
    for (std::uint64_t v = 0; v < count; ++v)
      blocks.push_back({base + v + 1, n, BitString::from_value(v, anchor_len)});
    q.push_back(base + count);
  }
  return LevelPartition(max_level, std::move(q), std::move(blocks));
}

std::vector<DecomposedPiece> decompose(const BitString& s, const LevelPartition& p) {
  if (s.empty())
    throw argument_error("decompose requires a nonempty node (the glued map sends the root to 0)");
  int n = level_of(s);
  if (n > p.max_level())
    throw argument_error("node at level " + std::to_string(n) +
                         " is beyond the partition max level " + std::to_string(p.max_level()));
  std::vector<DecomposedPiece> pieces;
  std::size_t cut = 0;
  for (int i = 1; i <= n; ++i) {
    std::size_t next = i < n ? static_cast<std::size_t>(level_boundary(i + 1)) - 1 : s.size();
    BitString prefix = s.prefix(next);
    pieces.push_back({BitString::parse(s.str().substr(cut, next - cut)), p.block_of(prefix)});
    cut = next;
  }
  return pieces;
}

}  // namespace bitgeom
