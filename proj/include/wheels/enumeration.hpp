#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "wheels/graph.hpp"

// Small-graph enumeration up to isomorphism. Graphs on at most 11 vertices
// are encoded as the upper triangle of their adjacency matrix in a uint64;
// the canonical code is the largest code over the leaves of an
// individualization-refinement search.

namespace wheels {

inline constexpr int kMaxCodedOrder = 11;

/// Bit (i,j), i < j, of the triangle code: rows in order, position
/// i*n - i*(i+1)/2 + (j - i - 1).
inline int pair_bit(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

inline std::uint64_t adjacency_code(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
        code |= std::uint64_t{1} << (n * (n - 1) / 2 - 1 - pair_bit(n, i, j));
  return code;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (code >> (n * (n - 1) / 2 - 1 - pair_bit(n, i, j)) & 1) edges.emplace_back(i, j);
  return make_graph(n, edges);
}

namespace detail {

using Partition = std::vector<std::vector<Vertex>>;

/// Refines an ordered partition until equitable. Cells split by the count of
/// neighbors in every cell; sub-cells are ordered by that signature, so the
/// result depends only on the isomorphism type of (g, partition).
inline Partition refine(const Graph& g, Partition p) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> cell_of(n);
  for (;;) {
    for (std::size_t c = 0; c < p.size(); ++c)
      for (Vertex v : p[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    Partition next;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<Vertex>> split;
      for (Vertex v : cell) {
        std::vector<int> sig(p.size(), 0);
        for (Vertex u : g.neighbors(v)) ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
        split[sig].push_back(v);
      }
      for (auto& [sig, vs] : split) next.push_back(std::move(vs));
    }
    if (next.size() == p.size()) return next;
    p = std::move(next);
  }
}

inline void canonical_search(const Graph& g, const Partition& p, std::uint64_t& best) {
  auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
  if (target == p.end()) {
    std::vector<Vertex> order;
    for (const auto& c : p) order.push_back(c.front());
    best = std::max(best, adjacency_code(g, order));
    return;
  }
  const auto at = static_cast<std::size_t>(target - p.begin());
  for (Vertex v : *target) {
    Partition q;
    q.insert(q.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(at));
    q.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex u : *target)
      if (u != v) rest.push_back(u);
    q.push_back(std::move(rest));
    q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(at) + 1, p.end());
    canonical_search(g, refine(g, std::move(q)), best);
  }
}

}  // namespace detail

/// Isomorphism-invariant code: equal iff the graphs are isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxCodedOrder) throw GraphError("canonical_code: at most 11 vertices");
  if (g.order() <= 1) return 0;
  detail::Partition p(1);
  for (Vertex v = 0; v < g.order(); ++v) p[0].push_back(v);
  std::uint64_t best = 0;
  detail::canonical_search(g, detail::refine(g, std::move(p)), best);
  return best;
}

/// One representative per isomorphism class on exactly n vertices, as
/// canonical codes in increasing order. Built by adding a vertex with every
/// possible neighborhood to each class on n-1 vertices.
inline std::vector<std::uint64_t> graph_codes_of_order(int n) {
  if (n < 0 || n > 10) throw GraphError("graph_codes_of_order: n must be in [0, 10]");
  std::vector<std::uint64_t> level{0};
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph base = graph_from_code(k, code);
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        GraphBuilder b(base);
        Vertex w = b.add_vertex();
        for (int u = 0; u < k; ++u)
          if (mask >> u & 1) b.add_edge(u, w);
        next.insert(canonical_code(b.build()));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

inline std::vector<Graph> graphs_of_order(int n) {
  std::vector<Graph> out;
  for (std::uint64_t c : graph_codes_of_order(n)) out.push_back(graph_from_code(n, c));
  return out;
}

/// Hammer-Simeone degree test.
inline bool is_split_graph(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  int m = 0;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d[static_cast<std::size_t>(i)] >= i) m = i + 1;
  long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
  for (int i = 0; i < static_cast<int>(d.size()); ++i) (i < m ? lhs : rhs) += d[static_cast<std::size_t>(i)];
  return lhs == rhs;
}

/// K_{p,q} with p, q >= 1.
inline bool is_complete_bipartite(const Graph& g) {
  if (g.order() < 2) return false;
  auto col = bipartition(g);
  if (!col) return false;
  long long p = std::count(col->begin(), col->end(), 0);
  long long q = g.order() - p;
  return p >= 1 && q >= 1 && static_cast<long long>(g.size()) == p * q;
}

}  // namespace wheels
