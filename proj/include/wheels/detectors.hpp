#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wheels/graph.hpp"
#include "wheels/induced_paths.hpp"
#include "wheels/witness.hpp"

// Exact detectors for holes, (k,l)-wheels and the Truemper configurations.
//
// These are backtracking searches over induced paths with reachability
// pruning. They are exact and deterministic (candidates are explored in
// increasing vertex order) but exponential in the worst case, so callers
// that need a time bound must impose it themselves.

namespace wheels {

namespace detail {

inline Bitset vertices_from(const Graph& g, Vertex s) {
  Bitset r = g.full_set();
  for (Vertex v = 0; v < s && v < g.order(); ++v) r.reset(static_cast<std::size_t>(v));
  return r;
}

inline HoleWitness checked_hole(const Graph& g, std::vector<Vertex> cycle, int min_len) {
  HoleWitness h{std::move(cycle)};
  if (auto e = hole_violation(g, h, min_len)) throw std::logic_error("detector produced invalid hole: " + *e);
  return h;
}

inline ConfigWitness checked(const Graph& g, ConfigWitness w) {
  if (auto e = witness_violation(g, w))
    throw std::logic_error(std::string("detector produced invalid ") + to_string(w.kind) + ": " + *e);
  return w;
}

}  // namespace detail

/// A hole of length at least k, or nullopt if none exists.
inline std::optional<HoleWitness> find_hole(const Graph& g, int min_len = 4) {
  if (min_len < 4) throw std::invalid_argument("find_hole: minimum length must be at least 4");
  std::vector<Vertex> found;
  auto accept = [&](const std::vector<Vertex>& c) {
    found = c;
    return true;
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    if (search::for_each_chordless_cycle_through(g, detail::vertices_from(g, s), s, min_len, search::always_viable,
                                                 accept))
      return detail::checked_hole(g, found, min_len);
  }
  return std::nullopt;
}

/// A hole of length at least k containing both a and b.
inline std::optional<HoleWitness> find_hole_through(const Graph& g, Vertex a, Vertex b, int min_len = 4) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw std::invalid_argument("find_hole_through: unknown vertex");
  if (a == b) throw std::invalid_argument("find_hole_through: a and b must differ");
  if (min_len < 4) throw std::invalid_argument("find_hole_through: minimum length must be at least 4");
  const auto bi = static_cast<std::size_t>(b);
  auto viable = [&](const std::vector<Vertex>& path, const Bitset& reach) {
    return reach.test(bi) || std::find(path.begin(), path.end(), b) != path.end();
  };
  std::vector<Vertex> found;
  auto accept = [&](const std::vector<Vertex>& c) {
    if (std::find(c.begin(), c.end(), b) == c.end()) return false;
    found = c;
    return true;
  };
  if (search::for_each_chordless_cycle_through(g, g.full_set(), a, min_len, viable, accept))
    return detail::checked_hole(g, found, min_len);
  return std::nullopt;
}

/// A hole of length at least 5, in polynomial time.
///
/// A hole of length >= 5 exists iff there is an induced path a-b-c-d such
/// that a and d are joined by a path whose interior avoids N[b] and N[c].
/// For each ordered edge (b, c) the components of G - (N[b] u N[c]) are
/// computed once; a candidate pair (a, d) works iff a and d are non-adjacent
/// and both attach to a common component. The shortest a-d path through
/// that component is induced, so it closes a hole with b and c.
inline std::optional<HoleWitness> find_hole_ge5(const Graph& g) {
  const int n = g.order();
  const auto N = static_cast<std::size_t>(n);
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c : g.neighbors(b)) {
      Bitset nbc = g.closed_row(b) | g.closed_row(c);
      Bitset rest = g.full_set() - nbc;
      if (rest.none()) continue;
      Bitset as = g.row(b) - g.closed_row(c);  // candidates for a
      Bitset ds = g.row(c) - g.closed_row(b);  // candidates for d
      if (as.none() || ds.none()) continue;
      Bitset todo = rest;
      while (todo.any()) {
        auto root = static_cast<Vertex>(todo.first());
        Bitset comp = search::reachable(g, root, rest);
        comp.set(static_cast<std::size_t>(root));
        todo -= comp;
        Bitset attach_a(N), attach_d(N);
        as.for_each([&](std::size_t a) {
          if (g.row(static_cast<Vertex>(a)).intersects(comp)) attach_a.set(a);
        });
        if (attach_a.none()) continue;
        ds.for_each([&](std::size_t d) {
          if (g.row(static_cast<Vertex>(d)).intersects(comp)) attach_d.set(d);
        });
        for (std::size_t a = attach_a.first(); a < N; a = attach_a.next(a + 1)) {
          Bitset ok_d = attach_d - g.row(static_cast<Vertex>(a));
          if (ok_d.none()) continue;
          const std::size_t d = ok_d.first();
          // BFS from a to d inside comp + {a, d}.
          Bitset allowed = comp;
          allowed.set(d);
          std::vector<Vertex> parent(N, -1);
          std::vector<Vertex> queue{static_cast<Vertex>(a)};
          Bitset seen(N);
          seen.set(a);
          for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            Bitset nxt = (g.row(u) & allowed) - seen;
            nxt.for_each([&](std::size_t v) {
              seen.set(v);
              parent[v] = u;
              queue.push_back(static_cast<Vertex>(v));
            });
            if (seen.test(d)) break;
          }
          std::vector<Vertex> cycle{b, c};
          for (Vertex v = static_cast<Vertex>(d); v != -1; v = parent[static_cast<std::size_t>(v)])
            cycle.push_back(v);
          return detail::checked_hole(g, cycle, 5);
        }
      }
    }
  }
  return std::nullopt;
}

/// A chordless cycle of length >= k (the rim) plus a vertex off the rim
/// with at least l neighbors on it.
///
/// For k = 3 triangles are accepted as rims, following the literal
/// definition; every result for k >= 4 has a hole as its rim. For l >= 3 the
/// center must be a hub, so only hubs are tried as centers.
inline std::optional<ConfigWitness> detect_kl_wheel(const Graph& g, int k, int l) {
  if (k < 3) throw std::invalid_argument("detect_kl_wheel: k must be at least 3");
  if (l < 0 || l > k) throw std::invalid_argument("detect_kl_wheel: l must lie in [0, k]");
  std::vector<Vertex> centers;
  if (l >= 3) {
    centers = hubs(g);
  } else {
    for (Vertex v = 0; v < g.order(); ++v) centers.push_back(v);
  }
  std::vector<Vertex> rim;
  for (Vertex c : centers) {
    const Bitset& nc = g.row(c);
    auto count_nc = [&](const std::vector<Vertex>& vs) {
      std::size_t cnt = 0;
      for (Vertex v : vs)
        if (nc.test(static_cast<std::size_t>(v))) ++cnt;
      return cnt;
    };
    auto accept = [&](const std::vector<Vertex>& cycle) {
      if (count_nc(cycle) < static_cast<std::size_t>(l)) return false;
      rim = cycle;
      return true;
    };
    Bitset base = g.full_set();
    base.reset(static_cast<std::size_t>(c));
    if (l >= 1) {
      // The rim's smallest neighbor of c is u.
      Bitset region = base;
      for (Vertex u : g.neighbors(c)) {
        auto viable = [&](const std::vector<Vertex>& path, const Bitset& reach) {
          return 1 + count_nc(path) + reach.count_and(nc) >= static_cast<std::size_t>(l);
        };
        if (search::for_each_chordless_cycle_through(g, region, u, k, viable, accept))
          return detail::checked(g, make_wheel_witness(rim, c, k, l));
        region.reset(static_cast<std::size_t>(u));
      }
    } else {
      for (Vertex s = 0; s < g.order(); ++s) {
        if (s == c) continue;
        Bitset region = base & detail::vertices_from(g, s);
        if (search::for_each_chordless_cycle_through(g, region, s, k, search::always_viable, accept))
          return detail::checked(g, make_wheel_witness(rim, c, k, l));
      }
    }
  }
  return std::nullopt;
}

inline std::optional<ConfigWitness> detect_wheel(const Graph& g) { return detect_kl_wheel(g, 4, 3); }

namespace detail {

inline Bitset closed_union(const Graph& g, std::span<const Vertex> vs) {
  Bitset r = g.empty_set();
  for (Vertex v : vs) r |= g.closed_row(v);
  return r;
}

inline std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

/// Searches three paths sequentially. `region_for(i, chosen)` gives the
/// region for path i given the already chosen paths; the final triple is
/// handed to `finish`, which returns true to stop.
template <class RegionFor, class Finish>
bool three_paths(const Graph& g, const std::array<Vertex, 3>& from, const std::array<Vertex, 3>& to,
                 RegionFor&& region_for, Finish&& finish) {
  std::array<std::vector<Vertex>, 3> chosen;
  auto level = [&](auto&& self, int i) -> bool {
    if (i == 3) return finish(chosen);
    Bitset region = region_for(i, chosen);
    return search::for_each_induced_path(g, region, from[static_cast<std::size_t>(i)],
                                         to[static_cast<std::size_t>(i)], search::always_viable,
                                         [&](const std::vector<Vertex>& p) {
                                           chosen[static_cast<std::size_t>(i)] = p;
                                           return self(self, i + 1);
                                         });
  };
  return level(level, 0);
}

}  // namespace detail

/// Three internally disjoint induced a-b paths of length >= 2 with pairwise
/// anticomplete interiors.
inline std::optional<ConfigWitness> detect_theta(const Graph& g) {
  ConfigWitness w;
  w.kind = ConfigKind::theta;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (g.adjacent(a, b) || g.degree(b) < 3) continue;
      auto region_for = [&](int i, const std::array<std::vector<Vertex>, 3>& ch) {
        Bitset r = g.full_set();
        for (int j = 0; j < i; ++j) {
          const auto& p = ch[static_cast<std::size_t>(j)];
          r -= detail::closed_union(g, std::span<const Vertex>(p).subspan(1, p.size() - 2));
        }
        if (i > 0) {
          // Order paths by their first interior vertex.
          Vertex prev_first = ch[static_cast<std::size_t>(i - 1)][1];
          for (Vertex u : g.neighbors(a))
            if (u <= prev_first) r.reset(static_cast<std::size_t>(u));
        }
        r.set(static_cast<std::size_t>(a));
        r.set(static_cast<std::size_t>(b));
        return r;
      };
      auto finish = [&](const std::array<std::vector<Vertex>, 3>& ch) {
        w.paths = ch;
        return !theta_violation(g, w);
      };
      if (detail::three_paths(g, {a, a, a}, {b, b, b}, region_for, finish)) return detail::checked(g, w);
    }
  }
  return std::nullopt;
}

/// Apex a joined by three induced paths to the corners of a triangle, at
/// most one of them of length 1, otherwise anticomplete.
inline std::optional<ConfigWitness> detect_pyramid(const Graph& g) {
  ConfigWitness w;
  w.kind = ConfigKind::pyramid;
  for (const auto& t : detail::triangles(g)) {
    for (Vertex a = 0; a < g.order(); ++a) {
      if (a == t[0] || a == t[1] || a == t[2]) continue;
      int direct = 0;
      for (Vertex v : t)
        if (g.adjacent(a, v)) ++direct;
      if (direct > 1 || g.degree(a) < 3) continue;
      auto region_for = [&](int i, const std::array<std::vector<Vertex>, 3>& ch) {
        Bitset r = g.full_set();
        for (int j = 0; j < 3; ++j)
          if (j != i) r -= g.closed_row(t[static_cast<std::size_t>(j)]);
        for (int j = 0; j < i; ++j) {
          const auto& p = ch[static_cast<std::size_t>(j)];
          r -= detail::closed_union(g, std::span<const Vertex>(p).subspan(1));
        }
        r.set(static_cast<std::size_t>(a));
        r.set(static_cast<std::size_t>(t[static_cast<std::size_t>(i)]));
        return r;
      };
      auto finish = [&](const std::array<std::vector<Vertex>, 3>& ch) {
        w.paths = ch;
        return !pyramid_violation(g, w);
      };
      if (detail::three_paths(g, {a, a, a}, t, region_for, finish)) return detail::checked(g, w);
    }
  }
  return std::nullopt;
}

/// Two vertex-disjoint triangles joined by three disjoint induced paths with
/// no other edges between them.
inline std::optional<ConfigWitness> detect_prism(const Graph& g) {
  ConfigWitness w;
  w.kind = ConfigKind::prism;
  auto tris = detail::triangles(g);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& A = tris[i];
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      std::array<Vertex, 3> B = tris[j];
      bool disjoint = true;
      for (Vertex x : A)
        for (Vertex y : B)
          if (x == y) disjoint = false;
      if (!disjoint) continue;
      std::sort(B.begin(), B.end());
      do {
        bool cross = false;
        for (std::size_t p = 0; p < 3; ++p)
          for (std::size_t q = 0; q < 3; ++q)
            if (p != q && g.adjacent(A[p], B[q])) cross = true;
        if (cross) continue;
        auto region_for = [&](int pi, const std::array<std::vector<Vertex>, 3>& ch) {
          const auto ip = static_cast<std::size_t>(pi);
          Bitset r = g.full_set();
          for (std::size_t q = 0; q < 3; ++q)
            if (q != ip) {
              r -= g.closed_row(A[q]);
              r -= g.closed_row(B[q]);
            }
          for (std::size_t q = 0; q < ip; ++q) r -= detail::closed_union(g, ch[q]);
          r.set(static_cast<std::size_t>(A[ip]));
          r.set(static_cast<std::size_t>(B[ip]));
          return r;
        };
        auto finish = [&](const std::array<std::vector<Vertex>, 3>& ch) {
          w.paths = ch;
          return !prism_violation(g, w);
        };
        if (detail::three_paths(g, A, B, region_for, finish)) return detail::checked(g, w);
      } while (std::next_permutation(B.begin(), B.end()));
    }
  }
  return std::nullopt;
}

/// First Truemper configuration found, trying theta, pyramid, prism, wheel
/// in that order. nullopt iff the graph is universally signable.
inline std::optional<ConfigWitness> detect_any_truemper(const Graph& g) {
  if (auto w = detect_theta(g)) return w;
  if (auto w = detect_pyramid(g)) return w;
  if (auto w = detect_prism(g)) return w;
  return detect_wheel(g);
}

}  // namespace wheels
