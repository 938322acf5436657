#pragma once

#include <algorithm>
#include <vector>

#include "wheels/bitset.hpp"
#include "wheels/graph.hpp"

namespace wheels::search {

/// Vertices reachable from `start` through `avail` (start itself excluded
/// unless it is reachable through a cycle in avail).
inline Bitset reachable(const Graph& g, Vertex start, const Bitset& avail) {
  Bitset seen(avail.size());
  Bitset frontier = g.row(start) & avail;
  while (frontier.any()) {
    seen |= frontier;
    Bitset next(avail.size());
    frontier.for_each([&](std::size_t v) { next |= g.row(static_cast<Vertex>(v)); });
    next &= avail;
    next -= seen;
    frontier = std::move(next);
  }
  return seen;
}

/// Vertices that lie on some simple path from `from` to `to` whose interior
/// is in `avail` (endpoints excluded unless they are in avail). These are
/// the blocks on the block-cut tree path between the two. Empty if `to` is
/// not reachable.
inline Bitset usable_between(const Graph& g, Vertex from, Vertex to, const Bitset& avail) {
  const auto N = avail.size();
  if (!avail.test(static_cast<std::size_t>(to))) return Bitset(N);
  Bitset in = avail;
  in.set(static_cast<std::size_t>(from));
  in.set(static_cast<std::size_t>(to));
  std::vector<int> disc(N, -1), low(N, 0);
  std::vector<Vertex> vstack;
  std::vector<std::vector<Vertex>> blocks;
  struct Frame {
    Vertex u, parent;
    std::size_t next;
  };
  std::vector<Frame> frames{{from, -1, 0}};
  int timer = 0;
  disc[static_cast<std::size_t>(from)] = low[static_cast<std::size_t>(from)] = timer++;
  vstack.push_back(from);
  while (!frames.empty()) {
    Frame& f = frames.back();
    auto nb = g.neighbors(f.u);
    if (f.next < nb.size()) {
      const Vertex w = nb[f.next++];
      const auto wi = static_cast<std::size_t>(w);
      if (!in.test(wi)) continue;
      if (disc[wi] == -1) {
        disc[wi] = low[wi] = timer++;
        vstack.push_back(w);
        frames.push_back({w, f.u, 0});
      } else if (w != f.parent) {
        low[static_cast<std::size_t>(f.u)] = std::min(low[static_cast<std::size_t>(f.u)], disc[wi]);
      }
      continue;
    }
    const Vertex w = f.u;
    frames.pop_back();
    if (frames.empty()) break;
    const Vertex u = frames.back().u;
    const auto ui = static_cast<std::size_t>(u), wi = static_cast<std::size_t>(w);
    low[ui] = std::min(low[ui], low[wi]);
    if (low[wi] >= disc[ui]) {
      blocks.emplace_back();
      Vertex x;
      do {
        x = vstack.back();
        vstack.pop_back();
        blocks.back().push_back(x);
      } while (x != w);
      blocks.back().push_back(u);
    }
  }
  Bitset out(N);
  if (disc[static_cast<std::size_t>(to)] == -1) return out;
  // Path in the vertex-block incidence tree from `from` to `to`.
  std::vector<std::vector<int>> blocks_of(N);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b]) blocks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
  std::vector<int> via_block(N, -1);  // block through which a vertex was reached
  std::vector<Vertex> block_parent(blocks.size(), -1);
  std::vector<bool> block_seen(blocks.size(), false);
  std::vector<Vertex> q{from};
  via_block[static_cast<std::size_t>(from)] = -2;
  for (std::size_t qi = 0; qi < q.size() && via_block[static_cast<std::size_t>(to)] == -1; ++qi) {
    const Vertex v = q[qi];
    for (int b : blocks_of[static_cast<std::size_t>(v)]) {
      if (block_seen[static_cast<std::size_t>(b)]) continue;
      block_seen[static_cast<std::size_t>(b)] = true;
      block_parent[static_cast<std::size_t>(b)] = v;
      for (Vertex w : blocks[static_cast<std::size_t>(b)])
        if (via_block[static_cast<std::size_t>(w)] == -1) {
          via_block[static_cast<std::size_t>(w)] = b;
          q.push_back(w);
        }
    }
  }
  for (Vertex v = to; v != from;) {
    const int b = via_block[static_cast<std::size_t>(v)];
    for (Vertex w : blocks[static_cast<std::size_t>(b)]) out.set(static_cast<std::size_t>(w));
    v = block_parent[static_cast<std::size_t>(b)];
  }
  out &= avail;
  out.set(static_cast<std::size_t>(to));
  return out;
}

/// Backtracking enumeration of induced paths from `from` to `to` inside
/// `region`, in increasing vertex order at every branch.
///
/// After each branching extension the search computes the set of vertices
/// still usable by the continuation (on a simple path from the current end
/// to `to` avoiding the closed neighborhoods of all earlier path vertices)
/// and drops the branch if `to` is not in it or if `viable(path, reach)` is
/// false.
/// `accept(path)` is called on every complete path; returning true stops the
/// enumeration and makes the function return true.
template <class Viable, class Accept>
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, const Bitset& region, Vertex to, Viable& viable, Accept& accept)
      : g_(g), region_(region), to_(to), viable_(viable), accept_(accept) {}

  bool run(Vertex from) {
    if (!region_.test(static_cast<std::size_t>(from)) || !region_.test(static_cast<std::size_t>(to_)) ||
        from == to_)
      return false;
    path_.assign(1, from);
    if (g_.adjacent(from, to_)) {
      path_.push_back(to_);
      return accept_(static_cast<const std::vector<Vertex>&>(path_));
    }
    return extend(Bitset(region_.size()), region_);
  }

 private:
  // `parent_reach` is a superset of what the continuation can still use. A
  // forced step (one candidate) reuses it instead of recomputing; long
  // subdivided chains make that the common case.
  bool extend(const Bitset& blocked, const Bitset& parent_reach) {
    const Vertex x = path_.back();
    Bitset next_blocked = blocked | g_.closed_row(x);
    if (g_.adjacent(x, to_)) {
      path_.push_back(to_);
      bool stop = accept_(static_cast<const std::vector<Vertex>&>(path_));
      path_.pop_back();
      return stop;
    }
    Bitset candidates = g_.row(x) & region_;
    candidates -= blocked;
    const bool forced = candidates.count() == 1;
    Bitset avail = region_ - next_blocked;
    for (std::size_t c = candidates.first(); c < candidates.size(); c = candidates.next(c + 1)) {
      const auto y = static_cast<Vertex>(c);
      Bitset reach = forced ? parent_reach - next_blocked : usable_between(g_, y, to_, avail);
      if (!reach.test(static_cast<std::size_t>(to_))) continue;
      path_.push_back(y);
      bool stop = false;
      if (viable_(static_cast<const std::vector<Vertex>&>(path_), static_cast<const Bitset&>(reach)))
        stop = extend(next_blocked, reach);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  const Bitset& region_;
  Vertex to_;
  Viable& viable_;
  Accept& accept_;
  std::vector<Vertex> path_;
};

template <class Viable, class Accept>
bool for_each_induced_path(const Graph& g, const Bitset& region, Vertex from, Vertex to, Viable&& viable,
                           Accept&& accept) {
  InducedPathSearch<std::remove_reference_t<Viable>, std::remove_reference_t<Accept>> s(g, region, to, viable,
                                                                                        accept);
  return s.run(from);
}

/// Enumerates chordless cycles of length >= min_len (>= 3) that pass
/// through `s` and otherwise use only vertices of `region`. Cycles are
/// reported as s followed by an induced path between two neighbors x < y of
/// s; `viable(path, reach)` sees that path without s.
template <class Viable, class Accept>
bool for_each_chordless_cycle_through(const Graph& g, const Bitset& region, Vertex s, int min_len,
                                      Viable&& viable, Accept&& accept) {
  Bitset nb = g.row(s) & region;
  std::vector<Vertex> cycle;
  for (std::size_t xi = nb.first(); xi < nb.size(); xi = nb.next(xi + 1)) {
    for (std::size_t yi = nb.next(xi + 1); yi < nb.size(); yi = nb.next(yi + 1)) {
      const auto x = static_cast<Vertex>(xi);
      const auto y = static_cast<Vertex>(yi);
      if (g.adjacent(x, y)) {
        if (min_len <= 3) {
          cycle = {s, x, y};
          if (accept(static_cast<const std::vector<Vertex>&>(cycle))) return true;
        }
        continue;
      }
      Bitset sub = region - g.closed_row(s);
      sub.set(xi);
      sub.set(yi);
      auto length_viable = [&](const std::vector<Vertex>& path, const Bitset& reach) {
        // s + path + whatever is still reachable (the target is in reach).
        if (1 + path.size() + reach.count() < static_cast<std::size_t>(min_len)) return false;
        return viable(path, reach);
      };
      auto close = [&](const std::vector<Vertex>& path) {
        if (1 + path.size() < static_cast<std::size_t>(min_len)) return false;
        cycle.assign(1, s);
        cycle.insert(cycle.end(), path.begin(), path.end());
        return static_cast<bool>(accept(static_cast<const std::vector<Vertex>&>(cycle)));
      };
      if (for_each_induced_path(g, sub, x, y, length_viable, close)) return true;
    }
  }
  return false;
}

inline constexpr auto always_viable = [](const std::vector<Vertex>&, const Bitset&) { return true; };

}  // namespace wheels::search
