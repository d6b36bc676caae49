#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "satgraph/errors.hpp"
#include "satgraph/vertex_set.hpp"

namespace satgraph {

/// Unordered vertex pair, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Graphs are values: all operations build new graphs and never mutate their
/// inputs, so shared instances are safe across threads. Mutation is confined
/// to the factory functions below, which maintain symmetry and irreflexivity.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n))) {}

  int order() const { return n_; }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
  }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return neighbors(v).count(); }

  int min_degree() const {
    int best = n_ > 0 ? degree(0) : 0;
    for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  /// Least-index vertex of minimum degree; -1 on the empty graph.
  Vertex min_degree_vertex() const {
    Vertex arg = -1;
    int best = kCapacity() + 1;
    for (Vertex v = 0; v < n_; ++v) {
      int d = degree(v);
      if (d < best) {
        best = d;
        arg = v;
      }
    }
    return arg;
  }

  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges as ascending (u, v) pairs with u < v, lexicographic.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
           v = adj_[static_cast<std::size_t>(u)].next(v))
        out.emplace_back(u, v);
    return out;
  }

  static constexpr int kCapacity() { return VertexSet::kCapacity; }

  bool operator==(const Graph&) const = default;

  friend Graph complete(int k);
  friend Graph independent(int k);
  friend Graph disjoint_union(const Graph& a, const Graph& b);
  friend Graph join(const Graph& a, const Graph& b);
  friend Graph with_edge(const Graph& g, Vertex u, Vertex v);
  friend Graph without_edge(const Graph& g, Vertex u, Vertex v);
  friend Graph from_edge_list(int n, const std::vector<Edge>& edges);
  friend Graph permuted(const Graph& g, const std::vector<int>& perm);
  friend Graph decode_graph6(const std::string& text);

 private:
  static int check_order(int n) {
    if (n < 0) throw ArgumentError("graph order must be non-negative");
    if (n > kCapacity())
      throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                          std::to_string(kCapacity()));
    return n;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
  }

  void link(Vertex u, Vertex v) {
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
  }

  void unlink(Vertex u, Vertex v) {
    adj_[static_cast<std::size_t>(u)].remove(v);
    adj_[static_cast<std::size_t>(v)].remove(u);
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// K_k: the complete graph on k vertices.
inline Graph complete(int k) {
  Graph g(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) g.link(u, v);
  return g;
}

/// I_k: k isolated vertices.
inline Graph independent(int k) { return Graph(k); }

/// Vertices of b are re-indexed by +a.order(); no cross edges.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > Graph::kCapacity())
    throw CapacityError("disjoint union of " + std::to_string(a.order()) + " + " +
                        std::to_string(b.order()) + " vertices exceeds capacity");
  Graph g(a.order() + b.order());
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = a.adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
         v = a.adj_[static_cast<std::size_t>(u)].next(v))
      g.link(u, v);
  int off = a.order();
  for (Vertex u = 0; u < b.order(); ++u)
    for (Vertex v = b.adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
         v = b.adj_[static_cast<std::size_t>(u)].next(v))
      g.link(u + off, v + off);
  return g;
}

/// Disjoint union plus all a.order() * b.order() cross edges.
inline Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) g.link(u, v + a.order());
  return g;
}

/// Copy of g with edge uv present; idempotent when the edge already exists.
inline Graph with_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw ArgumentError("loop edge (" + std::to_string(u) + ") rejected");
  Graph out = g;
  out.link(u, v);
  return out;
}

/// Copy of g with edge uv absent.
inline Graph without_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw ArgumentError("loop edge (" + std::to_string(u) + ") rejected");
  Graph out = g;
  out.unlink(u, v);
  return out;
}

inline Graph from_edge_list(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw ArgumentError("loop edge (" + std::to_string(u) + ") rejected");
    g.link(u, v);
  }
  return g;
}

/// Relabels g: vertex v becomes perm[v]. perm must be a permutation of 0..n-1.
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw ArgumentError("permutation length does not match graph order");
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = g.adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
         v = g.adj_[static_cast<std::size_t>(u)].next(v))
      out.link(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

/// All unordered pairs u < v with uv not an edge, in lexicographic order.
inline std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.neighbors(u).contains(v)) out.emplace_back(u, v);
  return out;
}

}  // namespace satgraph
