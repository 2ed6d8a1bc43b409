#include "bitgeom/graphs.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

#include "bitgeom/errors.hpp"
#include "bitgeom/metrics.hpp"

namespace bitgeom {

const char* family_name(GraphFamily f) {
  switch (f) {
    case GraphFamily::tree: return "tree";
    case GraphFamily::diamond: return "diamond";
    case GraphFamily::laakso: return "laakso";
    case GraphFamily::custom: return "custom";
  }
  return "custom";
}

GraphFamily family_from_name(const std::string& name) {
  if (name == "tree") return GraphFamily::tree;
  if (name == "diamond") return GraphFamily::diamond;
  if (name == "laakso") return GraphFamily::laakso;
  if (name == "custom") return GraphFamily::custom;
  throw argument_error("unknown graph family '" + name + "'");
}

MetricGraph::MetricGraph(GraphFamily family, int n, std::vector<BitString> vertices,
                         EdgeList edges)
    : family_(family), n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  index_.reserve(vertices_.size());
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) {
    auto [it, fresh] = index_.emplace(vertices_[i].str(), i);
    (void)it;
    if (!fresh) throw structure_error("duplicate vertex '" + vertices_[i].str() + "'");
  }
  for (auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size())
      throw structure_error("edge references a vertex index out of range");
    if (a == b) throw structure_error("self-loop at vertex index " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool MetricGraph::contains(const BitString& v) const {
  return index_.find(v.str()) != index_.end();
}

std::uint32_t MetricGraph::index_of(const BitString& v) const {
  auto it = index_.find(v.str());
  if (it == index_.end())
    throw argument_error("vertex '" + v.str() + "' is not in the graph");
  return it->second;
}

std::vector<std::vector<std::uint32_t>> MetricGraph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(vertices_.size());
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

const DistanceMatrix& MetricGraph::distances() const {
  if (!dist_cache_)
    dist_cache_ = std::make_shared<const DistanceMatrix>(bfs_distances(*this));
  return *dist_cache_;
}

namespace {

bool is_connected(std::size_t order, const EdgeList& edges) {
  if (order == 0) return true;
  std::vector<std::vector<std::uint32_t>> adj(order);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(order, 0);
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t visited = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        q.push(w);
      }
  }
  return visited == order;
}

}  // namespace

MetricGraph build_binary_tree(int n, int depth_cap) {
  if (n < 0) throw argument_error("tree depth must be >= 0");
  if (n > depth_cap)
    throw resource_error("tree depth cap exceeded: n=" + std::to_string(n) +
                             " > cap=" + std::to_string(depth_cap) +
                             " (raise with --tree-cap)",
                         "tree-depth", "--tree-cap");
  std::vector<BitString> vertices;
  vertices.reserve((std::size_t{2} << n) - 1);
  for (int len = 0; len <= n; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
      vertices.push_back(BitString::from_value(v, static_cast<std::size_t>(len)));

  // In shorter-first order, index(s) = 2^{|s|} - 1 + value(s); parents always
  // precede children.
  EdgeList edges;
  edges.reserve(vertices.size() - 1);
  for (int len = 1; len <= n; ++len) {
    std::uint32_t level_base = static_cast<std::uint32_t>((std::uint64_t{1} << len) - 1);
    std::uint32_t parent_base = static_cast<std::uint32_t>((std::uint64_t{1} << (len - 1)) - 1);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
      edges.emplace_back(parent_base + static_cast<std::uint32_t>(v >> 1),
                         level_base + static_cast<std::uint32_t>(v));
  }
  return MetricGraph(GraphFamily::tree, n, std::move(vertices), std::move(edges));
}

EdgeList hamming_edges(const std::vector<BitString>& vertices) {
  if (vertices.empty()) return {};
  std::size_t len = vertices[0].size();
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() != len)
      throw argument_error("hamming_edges requires equal-length vertices");
    if (!index.emplace(vertices[i].str(), i).second)
      throw argument_error("hamming_edges requires distinct vertices");
  }
  EdgeList edges;
  std::string buf;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    buf = vertices[i].str();
    for (std::size_t pos = 0; pos < len; ++pos) {
      char saved = buf[pos];
      buf[pos] = saved == '0' ? '1' : '0';
      auto it = index.find(buf);
      if (it != index.end() && it->second > i) edges.emplace_back(i, it->second);
      buf[pos] = saved;
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

MetricGraph build_diamond(int n, int cap) {
  if (n < 0) throw argument_error("diamond index must be >= 0");
  if (n > cap)
    throw resource_error("diamond cap exceeded: n=" + std::to_string(n) +
                             " > cap=" + std::to_string(cap) + " (raise with --diamond-cap)",
                         "diamond", "--diamond-cap");
  std::vector<std::string> current = {"0", "1"};
  for (int k = 0; k < n; ++k) {
    // doubled images, then every string Hamming-adjacent to one of them
    std::set<std::string> next;
    for (const auto& s : current) {
      std::string d;
      d.reserve(s.size() * 2);
      for (char c : s) {
        d.push_back(c);
        d.push_back(c);
      }
      next.insert(d);
      for (std::size_t pos = 0; pos < d.size(); ++pos) {
        std::string flip = d;
        flip[pos] = flip[pos] == '0' ? '1' : '0';
        next.insert(std::move(flip));
      }
    }
    current.assign(next.begin(), next.end());
  }
  std::vector<BitString> vertices;
  vertices.reserve(current.size());
  for (auto& s : current) vertices.push_back(BitString::parse(s));
  std::sort(vertices.begin(), vertices.end());
  EdgeList edges = hamming_edges(vertices);
  return MetricGraph(GraphFamily::diamond, n, std::move(vertices), std::move(edges));
}

namespace {

// The six gadget rows that replace one edge, as patterns for the refined
// block; vertical neighbors in this table are the gadget edges.
struct LaaksoGadget {
  std::string rows[6];
};

LaaksoGadget laakso_gadget(const std::string& qu, const std::string& qv) {
  static const char* kBlocks[6] = {"1111", "1101", "1100", "0101", "0100", "0000"};
  LaaksoGadget g;
  for (int i = 0; i < 6; ++i) g.rows[i] = qu + kBlocks[i] + qv;
  return g;
}

std::string quad_str(const std::string& s) {
  std::string out;
  out.reserve(s.size() * 4);
  for (char c : s) out.append(4, c);
  return out;
}

}  // namespace

MetricGraph build_laakso(int n, int cap) {
  if (n < 0) throw argument_error("laakso index must be >= 0");
  if (n > cap)
    throw resource_error("laakso cap exceeded: n=" + std::to_string(n) +
                             " > cap=" + std::to_string(cap) + " (raise with --laakso-cap)",
                         "laakso", "--laakso-cap");
  std::vector<std::string> verts = {"0", "1"};
  std::vector<std::pair<std::string, std::string>> edges = {{"0", "1"}};
  for (int k = 0; k < n; ++k) {
    std::set<std::string> next_verts;
    std::vector<std::pair<std::string, std::string>> next_edges;
    for (const auto& v : verts) next_verts.insert(quad_str(v));
    for (const auto& [a, b] : edges) {
      std::size_t j = 0;
      while (j < a.size() && a[j] == b[j]) ++j;
      // orient so `lo` carries 0 at the differing coordinate
      const std::string& lo = a[j] == '0' ? a : b;
      std::string qu = quad_str(lo.substr(0, j));
      std::string qv = quad_str(lo.substr(j + 1));
      LaaksoGadget gad = laakso_gadget(qu, qv);
      for (const auto& row : gad.rows) next_verts.insert(row);
      // adjacency: each vertex to the vertices immediately above or below
      next_edges.emplace_back(gad.rows[0], gad.rows[1]);
      next_edges.emplace_back(gad.rows[1], gad.rows[2]);
      next_edges.emplace_back(gad.rows[1], gad.rows[3]);
      next_edges.emplace_back(gad.rows[2], gad.rows[4]);
      next_edges.emplace_back(gad.rows[3], gad.rows[4]);
      next_edges.emplace_back(gad.rows[4], gad.rows[5]);
    }
    verts.assign(next_verts.begin(), next_verts.end());
    edges = std::move(next_edges);
  }
  std::vector<BitString> vertices;
  vertices.reserve(verts.size());
  for (auto& s : verts) vertices.push_back(BitString::parse(s));
  std::sort(vertices.begin(), vertices.end());
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].str(), i);
  EdgeList edge_idx;
  edge_idx.reserve(edges.size());
  for (const auto& [a, b] : edges) edge_idx.emplace_back(index.at(a), index.at(b));
  return MetricGraph(GraphFamily::laakso, n, std::move(vertices), std::move(edge_idx));
}

EdgeList laakso_extra_hamming_edges(const MetricGraph& g) {
  EdgeList induced = hamming_edges(g.vertices());
  EdgeList extra;
  std::set<std::pair<std::uint32_t, std::uint32_t>> have(g.edges().begin(), g.edges().end());
  for (const auto& e : induced)
    if (!have.count(e)) extra.push_back(e);
  return extra;
}

MetricGraph make_custom_graph(std::vector<BitString> vertices, EdgeList edges,
                              bool require_connected) {
  MetricGraph g(GraphFamily::custom, 0, std::move(vertices), std::move(edges));
  if (require_connected && !is_connected(g.order(), g.edges()))
    throw structure_error("graph is not connected");
  return g;
}

}  // namespace bitgeom
