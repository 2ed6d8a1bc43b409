#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bitgeom/graphs.hpp"
#include "bitgeom/spaces.hpp"
#include "bitgeom/vec.hpp"

namespace bitgeom {

// A finite map from graph vertices to vectors, materialized as a table in
// vertex order.
struct Embedding {
  std::shared_ptr<const MetricGraph> graph;
  NormedSpace space;
  std::vector<Vec> images;  // one per vertex, graph order

  const Vec& at_index(std::size_t i) const { return images[i]; }
  const Vec& at(const BitString& v) const { return images[graph->index_of(v)]; }

  void validate() const;  // every vertex has an image of the right dimension
};

// f(k_1,...,k_L) = sum of basis[i] over coordinates with bit 1. Requires a
// same-length vertex family (diamond or Laakso), |basis| = L, and every
// basis vector in the unit ball.
Embedding js_vertex_embedding(std::shared_ptr<const MetricGraph> graph,
                              const std::vector<Vec>& basis, const NormedSpace& space);

// f(s) = sum of node_vectors[u] over nonempty prefixes u of s; f(root) = 0.
// Requires a vector for every nonempty node, all in the unit ball.
Embedding bourgain_tree_embedding(std::shared_ptr<const MetricGraph> tree,
                                  const std::map<BitString, Vec>& node_vectors,
                                  const NormedSpace& space);

// Canonical choice: one l1 coordinate per nonempty node, in shorter-first
// node order. Distortion is exactly 1.
Embedding bourgain_l1_embedding(std::shared_ptr<const MetricGraph> tree);

// Largest lip constant of f against graph distance: max over pairs of
// ||f(s)-f(t)|| / d(s,t).
double lipschitz_constant(const Embedding& f);

// Copy scaled by 1/lip so the map is 1-Lipschitz.
Embedding normalized_to_lipschitz(const Embedding& f);

}  // namespace bitgeom
