#include "bitgeom/embeddings.hpp"

#include <algorithm>

#include "bitgeom/errors.hpp"
#include "bitgeom/metrics.hpp"

namespace bitgeom {

void Embedding::validate() const {
  if (!graph) throw structure_error("embedding has no graph");
  if (images.size() != graph->order())
    throw structure_error("embedding covers " + std::to_string(images.size()) +
                          " vertices but the graph has " + std::to_string(graph->order()));
  for (const auto& v : images)
    if (v.size() != space.dim)
      throw structure_error("embedding image dimension " + std::to_string(v.size()) +
                            " does not match the space dimension " + std::to_string(space.dim));
}

Embedding js_vertex_embedding(std::shared_ptr<const MetricGraph> graph,
                              const std::vector<Vec>& basis, const NormedSpace& space) {
  if (!graph || graph->order() == 0) throw argument_error("js_vertex_embedding: empty graph");
  std::size_t len = graph->vertex(0).size();
  for (const auto& v : graph->vertices())
    if (v.size() != len)
      throw argument_error("js_vertex_embedding requires equal-length vertices");
  if (basis.size() != len)
    throw argument_error("js_vertex_embedding: " + std::to_string(basis.size()) +
                         " basis vectors for coordinate length " + std::to_string(len));
  for (const auto& x : basis) {
    if (x.size() != space.dim) throw argument_error("js_vertex_embedding: basis dimension mismatch");
    if (norm(space, x) > 1.0 + 1e-12)
      throw argument_error("js_vertex_embedding: basis vectors must lie in the unit ball");
  }
  Embedding f;
  f.graph = std::move(graph);
  f.space = space;
  f.images.reserve(f.graph->order());
  for (const auto& v : f.graph->vertices()) {
    Vec img(space.dim, 0.0);
    for (std::size_t i = 0; i < len; ++i)
      if (v.bit(i)) vec_axpy(img, 1.0, basis[i]);
    f.images.push_back(std::move(img));
  }
  return f;
}

Embedding bourgain_tree_embedding(std::shared_ptr<const MetricGraph> tree,
                                  const std::map<BitString, Vec>& node_vectors,
                                  const NormedSpace& space) {
  if (!tree || tree->family() != GraphFamily::tree)
    throw argument_error("bourgain_tree_embedding requires a tree graph");
  for (const auto& [node, vec] : node_vectors) {
    if (vec.size() != space.dim)
      throw argument_error("bourgain_tree_embedding: node vector dimension mismatch");
    if (norm(space, vec) > 1.0 + 1e-12)
      throw argument_error("bourgain_tree_embedding: node vectors must lie in the unit ball");
    (void)node;
  }
  Embedding f;
  f.graph = std::move(tree);
  f.space = space;
  f.images.assign(f.graph->order(), Vec(space.dim, 0.0));
  // vertices are in shorter-first order, so the parent image is ready when
  // the child is processed
  for (std::size_t i = 0; i < f.graph->order(); ++i) {
    const BitString& s = f.graph->vertex(i);
    if (s.empty()) continue;  // root maps to 0
    auto it = node_vectors.find(s);
    if (it == node_vectors.end())
      throw argument_error("bourgain_tree_embedding: missing vector for node '" + s.str() + "'");
    Vec img = f.at(s.parent());
    vec_axpy(img, 1.0, it->second);
    f.images[i] = std::move(img);
  }
  return f;
}

Embedding bourgain_l1_embedding(std::shared_ptr<const MetricGraph> tree) {
  if (!tree || tree->family() != GraphFamily::tree)
    throw argument_error("bourgain_l1_embedding requires a tree graph");
  std::size_t nonroot = tree->order() - 1;
  NormedSpace space = NormedSpace::l1(nonroot);
  std::map<BitString, Vec> node_vectors;
  // vertex order puts the root first; nonempty node i gets coordinate i-1
  for (std::size_t i = 1; i < tree->order(); ++i) {
    Vec e(nonroot, 0.0);
    e[i - 1] = 1.0;
    node_vectors.emplace(tree->vertex(i), std::move(e));
  }
  return bourgain_tree_embedding(std::move(tree), node_vectors, space);
}

double lipschitz_constant(const Embedding& f) {
  f.validate();
  const DistanceMatrix& d = f.graph->distances();
  double lip = 0.0;
  for (std::size_t i = 0; i < f.graph->order(); ++i)
    for (std::size_t j = i + 1; j < f.graph->order(); ++j) {
      Vec diff = vec_sub(f.images[i], f.images[j]);
      lip = std::max(lip, norm(f.space, diff) / static_cast<double>(d.at(i, j)));
    }
  return lip;
}

Embedding normalized_to_lipschitz(const Embedding& f) {
  double lip = lipschitz_constant(f);
  Embedding out = f;
  if (lip > 0)
    for (auto& img : out.images)
      for (auto& x : img) x /= lip;
  return out;
}

}  // namespace bitgeom
