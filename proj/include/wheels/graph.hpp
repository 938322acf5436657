#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wheels/bitset.hpp"

namespace wheels {

using Vertex = int;

enum class EdgeColor { plain, black, red };

inline const char* to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::black: return "black";
    case EdgeColor::red: return "red";
    default: return "plain";
  }
}

inline std::optional<EdgeColor> parse_edge_color(const std::string& s) {
  if (s == "plain") return EdgeColor::plain;
  if (s == "black") return EdgeColor::black;
  if (s == "red") return EdgeColor::red;
  return std::nullopt;
}

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised when a vertex selection or edge reference does not belong to a graph.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and bit rows
/// for the intersection-heavy scans. Every edge carries a color and every
/// vertex an optional label string.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(nbrs_.size()); }
  std::size_t size() const { return edge_count_; }

  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
  const Bitset& row(Vertex v) const { return rows_[v]; }

  /// Closed neighborhood N[v] as a bitset.
  Bitset closed_row(Vertex v) const {
    Bitset r = rows_[v];
    r.set(static_cast<std::size_t>(v));
    return r;
  }

  EdgeColor color(Vertex u, Vertex v) const {
    const auto& nb = nbrs_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) throw GraphError("color: not an edge");
    return colors_[u][static_cast<std::size_t>(it - nb.begin())];
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// All edges in increasing (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : nbrs_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  Bitset empty_set() const { return Bitset(static_cast<std::size_t>(order())); }
  Bitset full_set() const { return Bitset(static_cast<std::size_t>(order()), true); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nbrs_ == b.nbrs_ && a.colors_ == b.colors_ && a.labels_ == b.labels_;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::vector<EdgeColor>> colors_;
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area for graphs. Rejects loops and parallel edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0) : labels_(static_cast<std::size_t>(n)) {}

  explicit GraphBuilder(const Graph& g) : labels_(g.labels()) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v : g.neighbors(u))
        if (u < v) edges_.emplace(Edge(u, v), g.color(u, v));
  }

  int order() const { return static_cast<int>(labels_.size()); }

  Vertex add_vertex(std::string label = {}) {
    labels_.push_back(std::move(label));
    return order() - 1;
  }

  void set_label(Vertex v, std::string label) {
    check(v);
    labels_[static_cast<std::size_t>(v)] = std::move(label);
  }

  void add_edge(Vertex u, Vertex v, EdgeColor c = EdgeColor::plain) {
    check(u);
    check(v);
    if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
    if (!edges_.emplace(Edge(u, v), c).second)
      throw GraphError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  }

  bool has_edge(Vertex u, Vertex v) const { return edges_.contains(Edge(u, v)); }

  EdgeColor remove_edge(Vertex u, Vertex v) {
    auto it = edges_.find(Edge(u, v));
    if (it == edges_.end())
      throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    EdgeColor c = it->second;
    edges_.erase(it);
    return c;
  }

  Graph build() const {
    Graph g;
    const auto n = labels_.size();
    g.nbrs_.assign(n, {});
    g.colors_.assign(n, {});
    g.rows_.assign(n, Bitset(n));
    g.labels_ = labels_;
    // std::map iterates in (u, v) order, so neighbor lists come out sorted.
    for (const auto& [e, c] : edges_) {
      g.nbrs_[e.u].push_back(e.v);
      g.colors_[e.u].push_back(c);
      g.rows_[e.u].set(static_cast<std::size_t>(e.v));
      g.rows_[e.v].set(static_cast<std::size_t>(e.u));
    }
    for (const auto& [e, c] : edges_) {
      auto& nb = g.nbrs_[e.v];
      auto& cl = g.colors_[e.v];
      auto pos = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), e.u) - nb.begin());
      nb.insert(nb.begin() + static_cast<std::ptrdiff_t>(pos), e.u);
      cl.insert(cl.begin() + static_cast<std::ptrdiff_t>(pos), c);
    }
    g.edge_count_ = edges_.size();
    return g;
  }

 private:
  void check(Vertex v) const {
    if (v < 0 || v >= order()) throw GraphError("unknown vertex " + std::to_string(v));
  }

  std::vector<std::string> labels_;
  std::map<Edge, EdgeColor> edges_;
};

/// Convenience constructor for plain graphs.
inline Graph make_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

/// Same vertex set, complementary adjacency, all edges plain. Labels are kept.
inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex v = 0; v < g.order(); ++v) b.set_label(v, g.label(v));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

/// Subgraph induced by `s`. Vertex i of the result is the i-th smallest
/// element of `s`; labels and colors are carried over.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GraphError("induced_subgraph: repeated vertex in selection");
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!g.has_vertex(sorted[i]))
      throw GraphError("induced_subgraph: unknown vertex " + std::to_string(sorted[i]));
    index[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Vertex u = sorted[i];
    b.set_label(static_cast<Vertex>(i), g.label(u));
    for (Vertex v : g.neighbors(u))
      if (v > u && index[static_cast<std::size_t>(v)] >= 0)
        b.add_edge(static_cast<Vertex>(i), index[static_cast<std::size_t>(v)], g.color(u, v));
  }
  return b.build();
}

inline Graph induced_subgraph(const Graph& g, const Bitset& s) {
  std::vector<Vertex> vs;
  s.for_each([&](std::size_t v) { vs.push_back(static_cast<Vertex>(v)); });
  return induced_subgraph(g, vs);
}

/// Label given to the index-th (1-based) vertex inserted into edge u-v.
inline std::string subdivision_label(const std::string& u, const std::string& v, int index) {
  return "sub(" + u + "," + v + "," + std::to_string(index) + ")";
}

/// Replaces edge e by a path with `times` fresh internal vertices, appended
/// after the existing ones in order from e.u to e.v. The new edges inherit
/// the color of e. Red edges are not subdivisible.
inline Graph subdivide_edge(const Graph& g, Edge e, int times) {
  if (times < 0) throw std::invalid_argument("subdivide_edge: negative count");
  if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.adjacent(e.u, e.v))
    throw GraphError("subdivide_edge: not an edge");
  EdgeColor c = g.color(e.u, e.v);
  if (c == EdgeColor::red) throw GraphError("subdivide_edge: red edges are not subdivisible");
  if (times == 0) return g;
  GraphBuilder b(g);
  b.remove_edge(e.u, e.v);
  Vertex prev = e.u;
  for (int i = 1; i <= times; ++i) {
    Vertex w = b.add_vertex(subdivision_label(g.label(e.u), g.label(e.v), i));
    b.add_edge(prev, w, c);
    prev = w;
  }
  b.add_edge(prev, e.v, c);
  return b.build();
}

/// Vertices having at least three neighbors of degree at least three.
inline std::vector<Vertex> hubs(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    int heavy = 0;
    for (Vertex u : g.neighbors(v))
      if (g.degree(u) >= 3) ++heavy;
    if (heavy >= 3) out.push_back(v);
  }
  return out;
}

/// 0/1 coloring with every edge bichromatic.
using TwoColoring = std::vector<int>;

/// BFS 2-coloring, roots taken in increasing vertex order and colored 0.
inline std::optional<TwoColoring> bipartition(const Graph& g) {
  TwoColoring color(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  for (Vertex r = 0; r < g.order(); ++r) {
    if (color[static_cast<std::size_t>(r)] != -1) continue;
    color[static_cast<std::size_t>(r)] = 0;
    q.push(r);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        auto& cv = color[static_cast<std::size_t>(v)];
        if (cv == -1) {
          cv = 1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (cv == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_valid_coloring(const Graph& g, const TwoColoring& c) {
  if (c.size() != static_cast<std::size_t>(g.order())) return false;
  for (const Edge& e : g.edges())
    if (c[static_cast<std::size_t>(e.u)] == c[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

/// True iff `seq` is a chordless cycle of length at least `min_len` in g.
/// With min_len == 3 triangles are accepted.
inline bool is_chordless_cycle(const Graph& g, std::span<const Vertex> seq, int min_len) {
  const auto len = seq.size();
  if (len < 3 || len < static_cast<std::size_t>(min_len)) return false;
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : seq)
    if (!g.has_vertex(v)) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  }
  return true;
}

inline bool is_hole(const Graph& g, std::span<const Vertex> seq) {
  return is_chordless_cycle(g, seq, 4);
}

/// True iff `seq` is an induced (chordless) path in g.
inline bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : seq)
    if (!g.has_vertex(v)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
  return true;
}

}  // namespace wheels
