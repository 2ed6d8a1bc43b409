#include "bitgeom/glued.hpp"

#include <algorithm>
#include <cmath>

#include "bitgeom/errors.hpp"

namespace bitgeom {

double sparse_l1_distance(const SparseVec& a, const SparseVec& b) {
  double s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      s += std::fabs(a[i++].second);
    else if (b[j].first < a[i].first)
      s += std::fabs(b[j++].second);
    else {
      s += std::fabs(a[i].second - b[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) s += std::fabs(a[i].second);
  for (; j < b.size(); ++j) s += std::fabs(b[j].second);
  return s;
}

namespace {

// nonempty nodes of the depth-d tree in shorter-first order:
// rank(u) = 2^{|u|} - 2 + value(u)
std::size_t node_rank(const BitString& u) {
  return (std::size_t{1} << u.size()) - 2 + u.value();
}

std::size_t tree_nonroot_count(int depth_log) {
  // nodes of length 1..2^depth_log
  std::uint64_t depth = std::uint64_t{1} << depth_log;
  return (std::size_t{2} << depth) - 2;
}

}  // namespace

GluedPlan::GluedPlan(LevelPartition partition) : partition_(std::move(partition)) {
  offsets_.reserve(partition_.blocks().size());
  for (const auto& b : partition_.blocks()) {
    offsets_.push_back(total_dim_);
    total_dim_ += tree_nonroot_count(b.level);
  }
}

std::size_t GluedPlan::block_offset(std::size_t block_index) const {
  partition_.block(block_index);  // range check
  return offsets_[block_index - 1];
}

std::size_t GluedPlan::block_dim(std::size_t block_index) const {
  return tree_nonroot_count(partition_.block(block_index).level);
}

SparseVec GluedPlan::block_image(std::size_t block_index, const BitString& piece) const {
  const PartitionBlock& b = partition_.block(block_index);
  std::uint64_t depth = std::uint64_t{1} << b.level;
  if (piece.empty() || piece.size() > depth)
    throw argument_error("block piece length " + std::to_string(piece.size()) +
                         " is outside 1..2^" + std::to_string(b.level));
  SparseVec img;
  img.reserve(piece.size());
  std::size_t off = offsets_[block_index - 1];
  for (std::size_t len = 1; len <= piece.size(); ++len)
    img.emplace_back(off + node_rank(piece.prefix(len)), 1.0);
  std::sort(img.begin(), img.end());
  return img;
}

SparseVec GluedPlan::evaluate(const BitString& s) const {
  if (s.empty()) return {};  // the root maps to 0
  auto pieces = decompose(s, partition_);
  SparseVec out;
  out.reserve(s.size());
  for (const auto& [piece, block] : pieces) {
    SparseVec part = block_image(block, piece);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());  // block supports are disjoint
  return out;
}

double GluedPlan::pair_distance(const BitString& s, const BitString& t) const {
  return sparse_l1_distance(evaluate(s), evaluate(t));
}

Embedding baudier_glued_embedding(const GluedPlan& plan, std::size_t materialize_cap) {
  int depth = static_cast<int>(level_boundary(plan.partition().max_level() + 1)) - 1;
  std::size_t order = (std::size_t{2} << depth) - 1;
  std::size_t entries = order * plan.total_dim();
  if (entries > materialize_cap)
    throw resource_error(
        "glued embedding table of " + std::to_string(entries) +
            " entries exceeds cap=" + std::to_string(materialize_cap) +
            " (raise with --baudier-cap or evaluate pairs lazily)",
        "baudier-materialize", "--baudier-cap");
  auto tree = std::make_shared<const MetricGraph>(build_binary_tree(depth));
  Embedding f;
  f.graph = tree;
  f.space = NormedSpace::l1(plan.total_dim());
  f.images.assign(tree->order(), Vec(plan.total_dim(), 0.0));
  for (std::size_t i = 0; i < tree->order(); ++i)
    for (const auto& [coord, val] : plan.evaluate(tree->vertex(i)))
      f.images[i][coord] = val;
  return f;
}

}  // namespace bitgeom
