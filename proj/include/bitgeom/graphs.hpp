#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitgeom/bitstring.hpp"

namespace bitgeom {

struct DistanceMatrix;

enum class GraphFamily { tree, diamond, laakso, custom };

const char* family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);

// Construction caps. Vertex strings grow exponentially with the generation
// index even where vertex counts stay moderate, so refusal is explicit.
struct GraphCaps {
  int tree_depth = 20;
  int diamond = 7;
  int laakso = 4;
};

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Immutable after construction. Vertices are kept in canonical order
// (shorter-first then lexicographic; plain lexicographic when all lengths
// agree) and edges as index pairs i < j sorted lexicographically, so
// serialization is bit-stable.
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(GraphFamily family, int n, std::vector<BitString> vertices, EdgeList edges);

  GraphFamily family() const { return family_; }
  int generation() const { return n_; }
  const std::vector<BitString>& vertices() const { return vertices_; }
  const EdgeList& edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }

  bool contains(const BitString& v) const;
  std::uint32_t index_of(const BitString& v) const;  // argument_error if absent
  const BitString& vertex(std::size_t i) const { return vertices_[i]; }

  std::vector<std::vector<std::uint32_t>> adjacency() const;

  // Exact hop-count matrix, computed on first use and cached. The first call
  // should happen before the graph is shared across threads.
  const DistanceMatrix& distances() const;

 private:
  GraphFamily family_ = GraphFamily::custom;
  int n_ = 0;
  std::vector<BitString> vertices_;
  EdgeList edges_;
  std::unordered_map<std::string, std::uint32_t> index_;
  mutable std::shared_ptr<const DistanceMatrix> dist_cache_;
};

// All 0/1 sequences of length <= n with parent-child edges.
MetricGraph build_binary_tree(int n, int depth_cap = GraphCaps{}.tree_depth);

// Exactly the pairs at Hamming distance 1. Requires equal lengths and no
// duplicates.
EdgeList hamming_edges(const std::vector<BitString>& vertices);

// Recursive diamond family inside {0,1}^{2^n}; edges are the induced Hamming
// edges on the vertex set.
MetricGraph build_diamond(int n, int cap = GraphCaps{}.diamond);

// Recursive Laakso family inside {0,1}^{4^n}; edges come from the six-vertex
// gadget rows, not from induced Hamming adjacency.
MetricGraph build_laakso(int n, int cap = GraphCaps{}.laakso);

// Diagnostic: induced Hamming edges on the Laakso vertex set that are not
// gadget edges. Whether this is empty for n >= 2 is checked empirically.
EdgeList laakso_extra_hamming_edges(const MetricGraph& g);

// Validates indices, self-loops, duplicates and (optionally) connectivity.
MetricGraph make_custom_graph(std::vector<BitString> vertices, EdgeList edges,
                              bool require_connected = true);

}  // namespace bitgeom
