#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wheels/detectors.hpp"
#include "wheels/graph.hpp"
#include "wheels/witness.hpp"

// Deciding whether a graph or its complement contains a wheel.
//
// Pipeline: look for a hole of length >= 5 on either side; such a hole plus
// any outside vertex forces a wheel on one of the two sides, and a graph that
// is itself a long cycle is answered directly. Otherwise every wheel on
// either side has a 4-vertex rim, so it is enough to look for complements
// of 5-vertex wheels (K2 + P3 and K2 + co-P3), which takes O(n^4).

namespace wheels {

enum class Side { graph, complement };

inline const char* to_string(Side s) { return s == Side::graph ? "graph" : "complement"; }
inline Side flip(Side s) { return s == Side::graph ? Side::complement : Side::graph; }

/// A wheel together with the side (input graph or its complement) on which
/// it is valid.
struct SidedWitness {
  Side side = Side::graph;
  ConfigWitness witness;
};

enum class TripleKind { complete, edgeless, p3, co_p3 };

inline const char* to_string(TripleKind k) {
  switch (k) {
    case TripleKind::complete: return "complete";
    case TripleKind::edgeless: return "edgeless";
    case TripleKind::p3: return "P3";
    case TripleKind::co_p3: return "co-P3";
  }
  return "?";
}

/// Result of the P3 / co-P3 test. For P3 the triple is (end, middle, end);
/// for co-P3 it is (v, w, u) with vw the only edge.
struct TripleClassification {
  TripleKind kind = TripleKind::edgeless;
  std::array<Vertex, 3> triple{-1, -1, -1};

  bool found() const { return kind == TripleKind::p3 || kind == TripleKind::co_p3; }
};

/// Classifies the subgraph induced by `s`: complete, edgeless, or else a
/// triple inducing P3 or its complement.
///
/// If some component C has an edge vw and another component contains u,
/// then {v, w, u} is a co-P3. If the only non-trivial component is all of
/// s and s is not a clique, the first three vertices of a shortest path
/// between two non-adjacent vertices form a P3.
inline TripleClassification classify_p3(const Graph& g, const Bitset& s) {
  TripleClassification r;
  std::size_t v = s.size();
  for (std::size_t x = s.first(); x < s.size(); x = s.next(x + 1)) {
    if (g.row(static_cast<Vertex>(x)).intersects(s)) {
      v = x;
      break;
    }
  }
  if (v == s.size()) {
    r.kind = TripleKind::edgeless;
    return r;
  }
  Bitset comp = search::reachable(g, static_cast<Vertex>(v), s);
  comp.set(v);
  Bitset others = s - comp;
  if (others.any()) {
    const std::size_t w = (g.row(static_cast<Vertex>(v)) & s).first();
    r.kind = TripleKind::co_p3;
    r.triple = {static_cast<Vertex>(v), static_cast<Vertex>(w), static_cast<Vertex>(others.first())};
    return r;
  }
  // Connected: look for a non-adjacent pair.
  for (std::size_t x = s.first(); x < s.size(); x = s.next(x + 1)) {
    Bitset far = s - g.closed_row(static_cast<Vertex>(x));
    if (far.none()) continue;
    const std::size_t y = far.first();
    std::vector<Vertex> parent(s.size(), -1);
    std::vector<Vertex> queue{static_cast<Vertex>(x)};
    Bitset seen(s.size());
    seen.set(x);
    for (std::size_t qi = 0; qi < queue.size() && !seen.test(y); ++qi) {
      Bitset nxt = (g.row(queue[qi]) & s) - seen;
      nxt.for_each([&](std::size_t u) {
        seen.set(u);
        parent[u] = queue[qi];
        queue.push_back(static_cast<Vertex>(u));
      });
    }
    std::vector<Vertex> path;
    for (auto u = static_cast<Vertex>(y); u != -1; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
    // path runs y .. x; its last three vertices are x, its successor, and the next one.
    const std::size_t L = path.size();
    r.kind = TripleKind::p3;
    r.triple = {path[L - 1], path[L - 2], path[L - 3]};
    return r;
  }
  r.kind = TripleKind::complete;
  return r;
}

inline TripleClassification p3_or_co_p3(const Graph& g) { return classify_p3(g, g.full_set()); }

namespace detail {

/// Orders five vertices as a wheel (4-vertex rim + center) under the given
/// adjacency predicate, or returns nullopt if they do not induce one.
template <class Adj>
std::optional<ConfigWitness> five_vertex_wheel(const std::array<Vertex, 5>& vs, Adj&& adj) {
  for (std::size_t ci = 0; ci < 5; ++ci) {
    std::vector<Vertex> rest;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != ci) rest.push_back(vs[i]);
    std::sort(rest.begin(), rest.end());
    int seen = 0;
    for (Vertex r : rest)
      if (adj(vs[ci], r)) ++seen;
    if (seen < 3) continue;
    // rest must induce C4: each vertex adjacent to exactly two others.
    bool cycle = true;
    for (Vertex x : rest) {
      int d = 0;
      for (Vertex y : rest)
        if (x != y && adj(x, y)) ++d;
      if (d != 2) cycle = false;
    }
    if (!cycle) continue;
    Vertex r0 = rest[0], opposite = -1;
    std::vector<Vertex> sides;
    for (std::size_t i = 1; i < 4; ++i) {
      if (adj(r0, rest[i]))
        sides.push_back(rest[i]);
      else
        opposite = rest[i];
    }
    return make_wheel_witness({r0, sides[0], opposite, sides[1]}, vs[ci]);
  }
  return std::nullopt;
}

}  // namespace detail

/// Finds an induced complement of a 5-vertex wheel in g, i.e. an edge vw
/// plus a P3 or co-P3 among the vertices adjacent to neither v nor w. The
/// returned witness is a wheel valid in complement(g).
inline std::optional<ConfigWitness> co_wheel5_scan(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (w < v) continue;
      Bitset s = g.full_set() - g.closed_row(v);
      s -= g.closed_row(w);
      if (s.count() < 3) continue;
      TripleClassification t = classify_p3(g, s);
      if (!t.found()) continue;
      std::array<Vertex, 5> vs{v, w, t.triple[0], t.triple[1], t.triple[2]};
      auto co_adj = [&](Vertex x, Vertex y) { return x != y && !g.adjacent(x, y); };
      auto wheel = detail::five_vertex_wheel(vs, co_adj);
      if (!wheel) throw std::logic_error("co_wheel5_scan: five vertices do not induce a co-wheel");
      return wheel;
    }
  }
  return std::nullopt;
}

/// Given a hole h of length >= 5 and a vertex w off it, returns a wheel in
/// g or in its complement.
///
///  - |h| = 5: C5 is self-complementary, so w sees at least three rim
///    vertices on one side (complement rim h0 h2 h4 h1 h3).
///  - |h| >= 6: if w has three neighbors on h, (h, w) is a wheel in g.
///    Otherwise five consecutive rim vertices v2..v6 contain at most one
///    neighbor of w, and {w, v2, v3, v5, v6} is a wheel in the complement
///    with rim v2 v5 v3 v6. The window starts right after w's first rim
///    neighbor, or at h0 when w has none.
inline SidedWitness wheel_from_long_hole(const Graph& g, const HoleWitness& h, Vertex w) {
  if (auto e = hole_violation(g, h, 5)) throw std::invalid_argument("wheel_from_long_hole: " + *e);
  if (!g.has_vertex(w) || h.contains(w)) throw std::invalid_argument("wheel_from_long_hole: w must lie off the hole");
  const auto& c = h.cycle;
  const std::size_t L = c.size();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < L; ++i)
    if (g.adjacent(w, c[i])) idx.push_back(i);
  if (idx.size() >= 3) return {Side::graph, make_wheel_witness(c, w)};
  if (L == 5) return {Side::complement, make_wheel_witness({c[0], c[2], c[4], c[1], c[3]}, w)};
  const std::size_t start = idx.empty() ? 0 : (idx.front() + 1) % L;
  auto at = [&](std::size_t off) { return c[(start + off) % L]; };
  // at(0..4) are v2..v6.
  return {Side::complement, make_wheel_witness({at(0), at(3), at(1), at(4)}, w)};
}

/// Whether C_n or its complement contains a wheel. C5 and C6 do not (C6's
/// complement is the triangular prism). For n >= 8 any induced P7
/// v1..v7 gives the wheel {v1, v2, v4, v5, v7} in the complement. For
/// n = 7 the complement holds a wheel on an induced P3 + K2 of the cycle;
/// the constant was confirmed by exhaustive search over C7 and its complement.
inline bool hole_graph_answer(int n) {
  if (n < 5) throw std::invalid_argument("hole_graph_answer: cycle length must be at least 5");
  constexpr bool kSevenCycle = true;
  if (n == 7) return kSevenCycle;
  return n >= 8;
}

namespace detail {

/// Wheel witness for a graph that is a single cycle of length >= 7, found
/// in the complement of that graph.
inline ConfigWitness cycle_graph_cowheel(const Graph& g, const HoleWitness& h) {
  // Canonical orientation: start at the smallest vertex, walk toward its
  // smaller neighbor.
  std::vector<Vertex> c = h.cycle;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  std::array<Vertex, 5> vs = c.size() == 7 ? std::array<Vertex, 5>{c[0], c[1], c[2], c[4], c[5]}
                                           : std::array<Vertex, 5>{c[0], c[1], c[3], c[4], c[6]};
  auto co_adj = [&](Vertex x, Vertex y) { return x != y && !g.adjacent(x, y); };
  auto w = five_vertex_wheel(vs, co_adj);
  if (!w) throw std::logic_error("cycle_graph_cowheel: construction failed");
  return *w;
}

}  // namespace detail

/// Decides whether g or complement(g) contains a wheel; returns a witness
/// valid on the reported side. Within each stage the graph side is tried
/// before the complement.
inline std::optional<SidedWitness> wheel_in_g_or_complement(const Graph& g) {
  const Graph co = complement(g);
  auto finish = [&](SidedWitness r) {
    const Graph& side = r.side == Side::graph ? g : co;
    if (auto e = witness_violation(side, r.witness))
      throw std::logic_error("wheel_in_g_or_complement: invalid witness: " + *e);
    return r;
  };
  for (Side s : {Side::graph, Side::complement}) {
    const Graph& sg = s == Side::graph ? g : co;
    auto h = find_hole_ge5(sg);
    if (!h) continue;
    if (h->length() < static_cast<std::size_t>(sg.order())) {
      Vertex w = 0;
      while (h->contains(w)) ++w;
      SidedWitness r = wheel_from_long_hole(sg, *h, w);
      if (s == Side::complement) r.side = flip(r.side);
      return finish(r);
    }
    // sg is itself a cycle.
    if (!hole_graph_answer(sg.order())) return std::nullopt;
    return finish({flip(s), detail::cycle_graph_cowheel(sg, *h)});
  }
  if (auto w = co_wheel5_scan(co)) return finish({Side::graph, *w});
  if (auto w = co_wheel5_scan(g)) return finish({Side::complement, *w});
  return std::nullopt;
}

namespace detail {

/// If the vertex set `vs` (size >= 4) induces a chordless cycle of length
/// >= max(k,3) plus a center with >= l neighbors on it, returns that wheel.
inline std::optional<ConfigWitness> kl_wheel_on_set(const Graph& g, const std::vector<Vertex>& vs, int k, int l) {
  for (std::size_t ci = 0; ci < vs.size(); ++ci) {
    std::vector<Vertex> rest;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (i != ci) rest.push_back(vs[i]);
    if (rest.size() < static_cast<std::size_t>(std::max(k, 3))) return std::nullopt;
    int seen = 0;
    for (Vertex r : rest)
      if (g.adjacent(vs[ci], r)) ++seen;
    if (seen < l) continue;
    bool two_regular = true;
    for (Vertex x : rest) {
      int d = 0;
      for (Vertex y : rest)
        if (x != y && g.adjacent(x, y)) ++d;
      if (d != 2) two_regular = false;
    }
    if (!two_regular) continue;
    std::vector<Vertex> rim{rest[0]};
    Vertex prev = -1;
    while (rim.size() < rest.size()) {
      Vertex cur = rim.back(), nxt = -1;
      for (Vertex y : rest)
        if (y != cur && y != prev && g.adjacent(cur, y)) {
          nxt = y;
          break;
        }
      if (nxt == rest[0] || nxt == -1) break;
      prev = cur;
      rim.push_back(nxt);
    }
    if (rim.size() != rest.size()) continue;  // disjoint union of cycles
    return make_wheel_witness(rim, vs[ci], k, l);
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether g or its complement contains a (k,l)-wheel for k <= 4
/// by examining every vertex subset of size at most eight on both sides.
/// This is complete because a (k,l)-wheel on nine or more vertices has a
/// rim containing an induced P7, whose complement holds a 5-vertex
/// (4,4)-wheel.
inline std::optional<SidedWitness> small_k_pibar(const Graph& g, int k, int l) {
  if (k < 3 || k > 4) throw std::invalid_argument("small_k_pibar: k must be 3 or 4");
  if (l < 0 || l > k) throw std::invalid_argument("small_k_pibar: l must lie in [0, k]");
  const Graph co = complement(g);
  const int n = g.order();
  for (Side s : {Side::graph, Side::complement}) {
    const Graph& sg = s == Side::graph ? g : co;
    for (int size = k + 1; size <= std::min(8, n); ++size) {
      std::vector<Vertex> pick;
      std::optional<ConfigWitness> found;
      auto rec = [&](auto&& self, Vertex from) -> bool {
        if (static_cast<int>(pick.size()) == size) {
          found = detail::kl_wheel_on_set(sg, pick, k, l);
          return found.has_value();
        }
        for (Vertex v = from; v <= n - (size - static_cast<int>(pick.size())); ++v) {
          pick.push_back(v);
          if (self(self, v + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (rec(rec, 0)) {
        if (auto e = witness_violation(sg, *found)) throw std::logic_error("small_k_pibar: " + *e);
        return SidedWitness{s, *found};
      }
    }
  }
  return std::nullopt;
}

}  // namespace wheels
