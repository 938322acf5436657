#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wheels/cnf.hpp"
#include "wheels/graph.hpp"
#include "wheels/graph_io.hpp"
#include "wheels/witness.hpp"

// 3-SAT to graph reduction.
//
// build_gf assembles the gadget graph G_f: per variable four black chordless
// paths a_i..b_i / a'_i..b'_i with red squares at even positions, per clause
// a K_{2,3} on c_j, d_j, v_j^1..3, red links from each v_j^p to the odd
// position 2j-1 of its variable's paths, and black chaining edges through
// the terminals a and b. f is satisfiable iff G_f (or any graph obtained by
// subdividing black edges) has an induced cycle through a and b;
// assignment_to_cycle and cycle_to_assignment are the two certificate maps.

namespace wheels {

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Vertex labels

/// Structured name of a reduction vertex.
struct VertexLabel {
  enum class Role { a, b, a_i, b_i, a_prime, b_prime, t, f, t_prime, f_prime, c, d, v, x, y, z, sub };

  Role role = Role::a;
  int i = 0;  // variable index, or clause index for c/d/v, or z index
  int j = 0;  // path position for t/f
  int p = 0;  // literal position for v
  std::string sub_u, sub_v;
  int index = 0;

  std::string str() const {
    auto s = [](int x) { return std::to_string(x); };
    switch (role) {
      case Role::a: return "a";
      case Role::b: return "b";
      case Role::a_i: return "a_" + s(i);
      case Role::b_i: return "b_" + s(i);
      case Role::a_prime: return "a'_" + s(i);
      case Role::b_prime: return "b'_" + s(i);
      case Role::t: return "t_{" + s(i) + "," + s(j) + "}";
      case Role::f: return "f_{" + s(i) + "," + s(j) + "}";
      case Role::t_prime: return "t'_{" + s(i) + "," + s(j) + "}";
      case Role::f_prime: return "f'_{" + s(i) + "," + s(j) + "}";
      case Role::c: return "c_" + s(i);
      case Role::d: return "d_" + s(i);
      case Role::v: return "v_" + s(i) + "^" + s(p);
      case Role::x: return "x";
      case Role::y: return "y";
      case Role::z: return "z_" + s(i);
      case Role::sub: return subdivision_label(sub_u, sub_v, index);
    }
    return {};
  }

  static std::optional<VertexLabel> parse(const std::string& text) {
    static const std::regex simple(R"(^([abcdz]|a'|b')_(\d+)$)");
    static const std::regex path(R"(^([tf]'?)_\{(\d+),(\d+)\}$)");
    static const std::regex vlit(R"(^v_(\d+)\^(\d+)$)");
    VertexLabel l;
    std::smatch m;
    if (text == "a" || text == "b" || text == "x" || text == "y") {
      l.role = text == "a" ? Role::a : text == "b" ? Role::b : text == "x" ? Role::x : Role::y;
      return l;
    }
    if (std::regex_match(text, m, simple)) {
      static const std::map<std::string, Role> roles = {{"a", Role::a_i},      {"b", Role::b_i},
                                                         {"a'", Role::a_prime}, {"b'", Role::b_prime},
                                                         {"c", Role::c},        {"d", Role::d},
                                                         {"z", Role::z}};
      l.role = roles.at(m[1]);
      l.i = std::stoi(m[2]);
      return l;
    }
    if (std::regex_match(text, m, path)) {
      static const std::map<std::string, Role> roles = {
          {"t", Role::t}, {"f", Role::f}, {"t'", Role::t_prime}, {"f'", Role::f_prime}};
      l.role = roles.at(m[1]);
      l.i = std::stoi(m[2]);
      l.j = std::stoi(m[3]);
      return l;
    }
    if (std::regex_match(text, m, vlit)) {
      l.role = Role::v;
      l.i = std::stoi(m[1]);
      l.p = std::stoi(m[2]);
      return l;
    }
    if (text.starts_with("sub(") && text.ends_with(")")) {
      // Split at top-level commas; nested labels carry their own brackets.
      std::vector<std::string> parts(1);
      int depth = 0;
      for (std::size_t k = 4; k + 1 < text.size(); ++k) {
        char ch = text[k];
        if (ch == '(' || ch == '{') ++depth;
        if (ch == ')' || ch == '}') --depth;
        if (ch == ',' && depth == 0)
          parts.emplace_back();
        else
          parts.back().push_back(ch);
      }
      if (parts.size() != 3 || depth != 0) return std::nullopt;
      try {
        l.role = Role::sub;
        l.sub_u = parts[0];
        l.sub_v = parts[1];
        l.index = std::stoi(parts[2]);
      } catch (const std::logic_error&) {
        return std::nullopt;
      }
      return l;
    }
    return std::nullopt;
  }
};

// ---------------------------------------------------------------------------
// Artifact

enum class Stage { gf, f_graph, hardened, wheel_instance };

inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::gf: return "gf";
    case Stage::f_graph: return "f-graph";
    case Stage::hardened: return "hardened";
    case Stage::wheel_instance: return "wheel-instance";
  }
  return "?";
}

inline std::optional<Stage> parse_stage(const std::string& s) {
  for (auto st : {Stage::gf, Stage::f_graph, Stage::hardened, Stage::wheel_instance})
    if (s == to_string(st)) return st;
  return std::nullopt;
}

/// Subdivision counts keyed by edges of G_f (G_f vertex ids are preserved by
/// every subdivision step).
using SubdivisionPlan = std::map<Edge, int>;

/// A reduction instance: the graph plus everything needed to read it back
/// as a statement about the formula.
struct ReductionArtifact {
  Graph graph;
  CnfFormula formula;
  Stage stage = Stage::gf;
  Vertex a = -1, b = -1;  // terminals; absent (-1) on wheel instances
  Vertex x = -1, y = -1;  // wheel-instance hub and its partner
  int harden_k = 0;       // minimum length of cycles through a after hardening
  int wheel_k = 0, wheel_l = 0;
  SubdivisionPlan plan;

  Vertex vertex(const std::string& label) const {
    index();
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw ReductionError("no vertex labelled " + label);
    return it->second;
  }

  std::optional<Vertex> find(const std::string& label) const {
    index();
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
  }

  Vertex vertex(const VertexLabel& l) const { return vertex(l.str()); }

  /// Subdivision vertices inserted into the G_f-level edge u-v, ordered from
  /// u to v. Empty if the edge is present unsubdivided.
  std::vector<Vertex> chain(Vertex u, Vertex v) const {
    std::vector<Vertex> out;
    const auto& lu = graph.label(u);
    const auto& lv = graph.label(v);
    for (int i = 1;; ++i) {
      auto w = find(subdivision_label(lu, lv, i));
      if (!w) break;
      out.push_back(*w);
    }
    if (!out.empty()) return out;
    for (int i = 1;; ++i) {
      auto w = find(subdivision_label(lv, lu, i));
      if (!w) break;
      out.push_back(*w);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const ReductionArtifact& l, const ReductionArtifact& r) {
    return l.graph == r.graph && l.formula == r.formula && l.stage == r.stage && l.a == r.a && l.b == r.b &&
           l.x == r.x && l.y == r.y && l.harden_k == r.harden_k && l.wheel_k == r.wheel_k &&
           l.wheel_l == r.wheel_l && l.plan == r.plan;
  }

 private:
  void index() const {
    if (indexed_size_ == graph.order() && !by_label_.empty()) return;
    by_label_.clear();
    for (Vertex v = 0; v < graph.order(); ++v)
      if (!graph.label(v).empty()) by_label_.emplace(graph.label(v), v);
    indexed_size_ = graph.order();
  }

  mutable std::unordered_map<std::string, Vertex> by_label_;
  mutable int indexed_size_ = -1;
};

// ---------------------------------------------------------------------------
// G_f

namespace label {
using R = VertexLabel::Role;
inline std::string of(R r, int i = 0, int j = 0) {
  VertexLabel l;
  l.role = r;
  l.i = i;
  l.j = j;
  return l.str();
}
inline std::string v(int j, int p) {
  VertexLabel l;
  l.role = R::v;
  l.i = j;
  l.p = p;
  return l.str();
}
}  // namespace label

/// Closed-form sizes of G_f.
struct GfCounts {
  long long vertices, black_edges, red_edges;
};

inline GfCounts gf_counts(int n, int m) {
  const long long N = n, M = m;
  return {N * (8 * M + 8) + 5 * M + 2,
          N * (8 * M + 8) + 6 * M + 2 * (N - 1) + 1 + (M - 1) + 4,
          4 * N * (M + 1) + 6 * M};
}

inline ReductionArtifact build_gf(const CnfFormula& f) {
  f.validate();
  const int n = f.n(), m = f.m();
  using R = VertexLabel::Role;
  GraphBuilder g;
  // Vertex ids are assigned in this order: per variable a_i b_i a'_i b'_i
  // and the four paths, then per clause c_j d_j v_j^1..3, then a, b.
  struct Gadget {
    Vertex ai, bi, aip, bip;
    std::vector<Vertex> t, fv, tp, fp;
  };
  std::vector<Gadget> var(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    auto& G = var[static_cast<std::size_t>(i)];
    G.ai = g.add_vertex(label::of(R::a_i, i));
    G.bi = g.add_vertex(label::of(R::b_i, i));
    G.aip = g.add_vertex(label::of(R::a_prime, i));
    G.bip = g.add_vertex(label::of(R::b_prime, i));
    for (auto [vec, role] : {std::pair{&G.t, R::t}, {&G.fv, R::f}, {&G.tp, R::t_prime}, {&G.fp, R::f_prime}})
      for (int j = 0; j <= 2 * m; ++j) vec->push_back(g.add_vertex(label::of(role, i, j)));
  }
  struct ClauseGadget {
    Vertex c, d;
    std::array<Vertex, 3> v;
  };
  std::vector<ClauseGadget> cl(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m; ++j) {
    auto& C = cl[static_cast<std::size_t>(j)];
    C.c = g.add_vertex(label::of(R::c, j));
    C.d = g.add_vertex(label::of(R::d, j));
    for (int p = 1; p <= 3; ++p) C.v[static_cast<std::size_t>(p - 1)] = g.add_vertex(label::v(j, p));
  }
  const Vertex a = g.add_vertex("a");
  const Vertex b = g.add_vertex("b");

  const auto black = EdgeColor::black;
  const auto red = EdgeColor::red;
  for (int i = 1; i <= n; ++i) {
    const auto& G = var[static_cast<std::size_t>(i)];
    auto path = [&](Vertex from, const std::vector<Vertex>& mid, Vertex to) {
      g.add_edge(from, mid.front(), black);
      for (std::size_t k = 0; k + 1 < mid.size(); ++k) g.add_edge(mid[k], mid[k + 1], black);
      g.add_edge(mid.back(), to, black);
    };
    path(G.ai, G.t, G.bi);
    path(G.ai, G.fv, G.bi);
    path(G.aip, G.tp, G.bip);
    path(G.aip, G.fp, G.bip);
    for (int j = 0; j <= m; ++j) {
      const auto e = static_cast<std::size_t>(2 * j);
      g.add_edge(G.t[e], G.fv[e], red);
      g.add_edge(G.fv[e], G.tp[e], red);
      g.add_edge(G.tp[e], G.fp[e], red);
      g.add_edge(G.fp[e], G.t[e], red);
    }
  }
  for (int j = 1; j <= m; ++j) {
    const auto& C = cl[static_cast<std::size_t>(j)];
    for (Vertex v : C.v) {
      g.add_edge(C.c, v, black);
      g.add_edge(C.d, v, black);
    }
    for (int p = 0; p < 3; ++p) {
      const Literal& lit = f.clauses[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(p)];
      const auto& G = var[static_cast<std::size_t>(lit.var)];
      const auto pos = static_cast<std::size_t>(2 * j - 1);
      const Vertex v = C.v[static_cast<std::size_t>(p)];
      if (lit.positive) {
        g.add_edge(v, G.fv[pos], red);
        g.add_edge(v, G.fp[pos], red);
      } else {
        g.add_edge(v, G.t[pos], red);
        g.add_edge(v, G.tp[pos], red);
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    g.add_edge(var[static_cast<std::size_t>(i)].bi, var[static_cast<std::size_t>(i) + 1].ai, black);
    g.add_edge(var[static_cast<std::size_t>(i)].bip, var[static_cast<std::size_t>(i) + 1].aip, black);
  }
  g.add_edge(var[static_cast<std::size_t>(n)].bip, cl[1].c, black);
  for (int j = 1; j < m; ++j) g.add_edge(cl[static_cast<std::size_t>(j)].d, cl[static_cast<std::size_t>(j) + 1].c, black);
  g.add_edge(a, var[1].ai, black);
  g.add_edge(a, var[1].aip, black);
  g.add_edge(b, cl[static_cast<std::size_t>(m)].d, black);
  g.add_edge(b, var[static_cast<std::size_t>(n)].bi, black);

  ReductionArtifact art;
  art.graph = g.build();
  art.formula = f;
  art.stage = Stage::gf;
  art.a = a;
  art.b = b;
  return art;
}

/// Subdivides black edges of a G_f or f-graph instance. Every listed edge
/// gets `count` fresh vertices labelled sub(u,v,index).
inline ReductionArtifact make_f_graph(const ReductionArtifact& art, const SubdivisionPlan& plan) {
  if (art.stage != Stage::gf && art.stage != Stage::f_graph)
    throw ReductionError("make_f_graph: input must be G_f or an f-graph");
  GraphBuilder b(art.graph);
  for (const auto& [e, count] : plan) {
    if (!art.graph.has_vertex(e.u) || !art.graph.has_vertex(e.v) || !art.graph.adjacent(e.u, e.v))
      throw ReductionError("make_f_graph: plan names a non-edge");
    if (count < 0) throw ReductionError("make_f_graph: negative subdivision count");
    const EdgeColor c = art.graph.color(e.u, e.v);
    if (c == EdgeColor::red) throw ReductionError("make_f_graph: red edges are not subdivisible");
    if (count == 0) continue;
    b.remove_edge(e.u, e.v);
    Vertex prev = e.u;
    for (int i = 1; i <= count; ++i) {
      Vertex w = b.add_vertex(subdivision_label(art.graph.label(e.u), art.graph.label(e.v), i));
      b.add_edge(prev, w, c);
      prev = w;
    }
    b.add_edge(prev, e.v, c);
  }
  ReductionArtifact out = art;
  out.graph = b.build();
  out.stage = Stage::f_graph;
  for (const auto& [e, count] : plan)
    if (count > 0) out.plan[e] += count;
  return out;
}

// ---------------------------------------------------------------------------
// Hardening

/// Shape of a component of the subgraph induced by degree >= 3 vertices.
enum class HeavyShape { isolated, p3, c4, other };

inline std::vector<HeavyShape> heavy_component_shapes(const Graph& g) {
  std::vector<Vertex> heavy;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) heavy.push_back(v);
  Graph h = induced_subgraph(g, heavy);
  std::vector<HeavyShape> out;
  std::vector<bool> seen(static_cast<std::size_t>(h.order()), false);
  for (Vertex r = 0; r < h.order(); ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    std::vector<Vertex> comp{r};
    seen[static_cast<std::size_t>(r)] = true;
    for (std::size_t qi = 0; qi < comp.size(); ++qi)
      for (Vertex u : h.neighbors(comp[qi]))
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          comp.push_back(u);
        }
    std::size_t deg_sum = 0;
    int max_deg = 0;
    for (Vertex u : comp) {
      deg_sum += static_cast<std::size_t>(h.degree(u));
      max_deg = std::max(max_deg, h.degree(u));
    }
    const std::size_t edges = deg_sum / 2;
    if (comp.size() == 1)
      out.push_back(HeavyShape::isolated);
    else if (comp.size() == 3 && edges == 2)
      out.push_back(HeavyShape::p3);
    else if (comp.size() == 4 && edges == 4 && max_deg == 2)
      out.push_back(HeavyShape::c4);
    else
      out.push_back(HeavyShape::other);
  }
  return out;
}

/// Postcondition report for hardened and lifted instances.
struct InstanceCheck {
  bool bipartite = false;
  std::vector<Vertex> hubs;
  int deg_a = -1, deg_b = -1;
  bool shapes_ok = false;  // degree>=3 components are C4 / P3 / isolated
};

inline InstanceCheck inspect_instance(const ReductionArtifact& art) {
  InstanceCheck c;
  c.bipartite = bipartition(art.graph).has_value();
  c.hubs = hubs(art.graph);
  if (art.a >= 0) c.deg_a = art.graph.degree(art.a);
  if (art.b >= 0) c.deg_b = art.graph.degree(art.b);
  auto shapes = heavy_component_shapes(art.graph);
  c.shapes_ok = std::none_of(shapes.begin(), shapes.end(), [](HeavyShape s) { return s == HeavyShape::other; });
  return c;
}

/// Turns a fresh G_f into a bipartite instance with degree-2 terminals in
/// which every cycle through a has length >= k:
///  1. a-a_1 is subdivided max(k, 1) times, every other black edge once;
///  2. the components of the degree >= 3 subgraph (built from red edges
///     only at this point) are 2-colored, smallest vertex first, each
///     rooted at color 0;
///  3. every maximal path of black edges between two such vertices whose
///     length parity disagrees with its end colors gets one more
///     subdivision on its first edge (walked from the smaller end).
/// Every vertex of G_f carries at most two red edges unless a clause repeats
/// a literal three times; under that condition the result is also hub-free.
inline ReductionArtifact harden(const ReductionArtifact& art, int k) {
  if (art.stage != Stage::gf) throw ReductionError("harden: input must be a freshly built G_f");
  if (k < 0) throw ReductionError("harden: k must be non-negative");
  const Graph& g = art.graph;
  const int n = g.order();
  SubdivisionPlan plan;
  for (const Edge& e : g.edges())
    if (g.color(e.u, e.v) == EdgeColor::black) plan[e] = 1;
  const Vertex a1 = art.vertex(label::of(VertexLabel::Role::a_i, 1));
  plan[Edge(art.a, a1)] = std::max(k, 1);

  auto branch = [&](Vertex v) { return g.degree(v) >= 3; };

  // Color the red-edge components among branch vertices.
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (Vertex r = 0; r < n; ++r) {
    if (!branch(r) || color[static_cast<std::size_t>(r)] != -1) continue;
    color[static_cast<std::size_t>(r)] = 0;
    std::vector<Vertex> q{r};
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      Vertex u = q[qi];
      for (Vertex w : g.neighbors(u)) {
        if (!branch(w) || g.color(u, w) == EdgeColor::black) continue;
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          q.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          throw std::logic_error("harden: degree>=3 subgraph is not bipartite");
        }
      }
    }
  }

  std::set<Edge> walked;
  for (Vertex u = 0; u < n; ++u) {
    if (!branch(u)) continue;
    for (Vertex w : g.neighbors(u)) {
      if (g.color(u, w) != EdgeColor::black || walked.contains(Edge(u, w))) continue;
      std::vector<Edge> path{Edge(u, w)};
      Vertex prev = u, cur = w;
      while (!branch(cur)) {
        auto nb = g.neighbors(cur);
        Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        path.emplace_back(cur, nxt);
        prev = cur;
        cur = nxt;
      }
      long long length = 0;
      for (const Edge& e : path) {
        walked.insert(e);
        length += plan[e] + 1;
      }
      const bool differ = color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(cur)];
      if ((length % 2 == 1) != differ) plan[path.front()] += 1;
    }
  }

  ReductionArtifact out = make_f_graph(art, plan);
  out.stage = Stage::hardened;
  out.harden_k = k;
  if (!bipartition(out.graph)) throw std::logic_error("harden: result is not bipartite");
  if (out.graph.degree(out.a) != 2 || out.graph.degree(out.b) != 2)
    throw std::logic_error("harden: terminals must have degree 2");
  return out;
}

// ---------------------------------------------------------------------------
// Lifting to (k,l)-wheel instances

/// Replaces the terminals of a hardened instance by the hub gadget: a path
/// z_1..z_{2l-3} joining a's two neighbors, a vertex x adjacent to the odd
/// z's, and a vertex y adjacent to x and to b's two neighbors. Each of the
/// four attachment edges is subdivided 0-2 times, the minimum that keeps
/// the graph bipartite (at least once when the attachment point has degree
/// >= 3). The result contains a (k,l)-wheel iff the input has a hole through
/// a and b; every such wheel is centered at x.
inline ReductionArtifact lift_to_wheel_instance(const ReductionArtifact& art, int k, int l) {
  if (art.stage != Stage::hardened) throw ReductionError("lift_to_wheel_instance: input must be hardened");
  if (l < 3) throw ReductionError("lift_to_wheel_instance: only l >= 3 is supported");
  if (k < 3 || k > art.harden_k)
    throw ReductionError("lift_to_wheel_instance: need 3 <= k <= hardening parameter");
  const Graph& g = art.graph;
  auto coloring = bipartition(g);
  if (!coloring) throw ReductionError("lift_to_wheel_instance: input is not bipartite");
  const auto& col = *coloring;
  auto na = g.neighbors(art.a);
  auto nb = g.neighbors(art.b);
  if (na.size() != 2 || nb.size() != 2) throw ReductionError("lift_to_wheel_instance: terminals need degree 2");
  const Vertex a1 = na[0], a2 = na[1], b1 = nb[0], b2 = nb[1];

  std::vector<Vertex> remap(static_cast<std::size_t>(g.order()), -1);
  GraphBuilder out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != art.a && v != art.b) remap[static_cast<std::size_t>(v)] = out.add_vertex(g.label(v));
  for (const Edge& e : g.edges()) {
    Vertex u = remap[static_cast<std::size_t>(e.u)], v = remap[static_cast<std::size_t>(e.v)];
    if (u >= 0 && v >= 0) out.add_edge(u, v, g.color(e.u, e.v));
  }
  const int zlen = 2 * l - 3;
  std::vector<Vertex> z;
  for (int i = 1; i <= zlen; ++i) z.push_back(out.add_vertex(label::of(VertexLabel::Role::z, i)));
  for (int i = 0; i + 1 < zlen; ++i) out.add_edge(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(i) + 1], EdgeColor::black);
  const Vertex x = out.add_vertex("x");
  const Vertex y = out.add_vertex("y");
  for (int i = 0; i < zlen; i += 2) out.add_edge(x, z[static_cast<std::size_t>(i)], EdgeColor::black);
  out.add_edge(x, y, EdgeColor::black);

  // With z_1 colored c: z_odd and y get c, z_even and x get 1 - c.
  struct Attach {
    Vertex gadget;  // new vertex id
    std::string name;
    Vertex target;  // old id in g
  };
  const std::string zf = label::of(VertexLabel::Role::z, 1), zl = label::of(VertexLabel::Role::z, zlen);
  const std::array<Attach, 4> attach{{{z.front(), zf, a1}, {z.back(), zl, a2}, {y, "y", b1}, {y, "y", b2}}};
  auto count_for = [&](int c, const Attach& at) {
    const int need_odd_path = c != col[static_cast<std::size_t>(at.target)];  // colors differ
    const int parity = need_odd_path ? 0 : 1;  // subdivisions s with s+1 odd iff colors differ
    const int min_s = g.degree(at.target) >= 3 ? 1 : 0;
    for (int s = 0; s <= 2; ++s)
      if (s % 2 == parity && s >= min_s) return s;
    return 2;
  };
  int best_c = 0, best_total = 1 << 30;
  for (int c = 0; c <= 1; ++c) {
    int total = 0;
    for (const auto& at : attach) total += count_for(c, at);
    if (total < best_total) {
      best_total = total;
      best_c = c;
    }
  }
  for (const auto& at : attach) {
    const int s = count_for(best_c, at);
    const Vertex tgt = remap[static_cast<std::size_t>(at.target)];
    Vertex prev = at.gadget;
    for (int i = 1; i <= s; ++i) {
      Vertex w = out.add_vertex(subdivision_label(at.name, g.label(at.target), i));
      out.add_edge(prev, w, EdgeColor::black);
      prev = w;
    }
    out.add_edge(prev, tgt, EdgeColor::black);
  }

  ReductionArtifact res;
  res.graph = out.build();
  res.formula = art.formula;
  res.stage = Stage::wheel_instance;
  res.x = x;
  res.y = y;
  res.harden_k = art.harden_k;
  res.wheel_k = k;
  res.wheel_l = l;
  res.plan = art.plan;
  if (!bipartition(res.graph)) throw std::logic_error("lift_to_wheel_instance: result is not bipartite");
  return res;
}

// ---------------------------------------------------------------------------
// Certificates

namespace detail {

inline void require_terminals(const ReductionArtifact& art) {
  if (art.a < 0 || art.b < 0) throw ReductionError("instance has no terminals a, b");
}

/// Original G_f vertices along the cycle selected by a satisfying assignment.
inline std::vector<Vertex> skeleton_cycle(const ReductionArtifact& art, const Assignment& xi) {
  using R = VertexLabel::Role;
  const int n = art.formula.n(), m = art.formula.m();
  std::vector<Vertex> seq{art.a};
  for (int i = 1; i <= n; ++i) {
    seq.push_back(art.vertex(label::of(R::a_i, i)));
    const R role = xi[i] ? R::t : R::f;
    for (int j = 0; j <= 2 * m; ++j) seq.push_back(art.vertex(label::of(role, i, j)));
    seq.push_back(art.vertex(label::of(R::b_i, i)));
  }
  seq.push_back(art.b);
  for (int j = m; j >= 1; --j) {
    const Clause& cl = art.formula.clauses[static_cast<std::size_t>(j - 1)];
    int p = 0;
    while (xi[cl[static_cast<std::size_t>(p)].var] != cl[static_cast<std::size_t>(p)].positive) ++p;
    seq.push_back(art.vertex(label::of(R::d, j)));
    seq.push_back(art.vertex(label::v(j, p + 1)));
    seq.push_back(art.vertex(label::of(R::c, j)));
  }
  for (int i = n; i >= 1; --i) {
    seq.push_back(art.vertex(label::of(R::b_prime, i)));
    const R role = xi[i] ? R::t_prime : R::f_prime;
    for (int j = 2 * m; j >= 0; --j) seq.push_back(art.vertex(label::of(role, i, j)));
    seq.push_back(art.vertex(label::of(R::a_prime, i)));
  }
  return seq;
}

}  // namespace detail

/// Builds the induced cycle through a and b selected by a satisfying
/// assignment: all a_i b_i a'_i b'_i, the t-paths of true variables and the
/// f-paths of false ones, and per clause c_j, d_j and the first true v_j^p,
/// with the subdivision vertices of every used edge.
inline HoleWitness assignment_to_cycle(const ReductionArtifact& art, const Assignment& xi) {
  detail::require_terminals(art);
  if (xi.size() != static_cast<std::size_t>(art.formula.n()))
    throw InputError("assignment has " + std::to_string(xi.size()) + " values, formula has " +
                     std::to_string(art.formula.n()) + " variables");
  if (!satisfies(art.formula, xi)) throw InputError("assignment does not satisfy formula");
  const auto skeleton = detail::skeleton_cycle(art, xi);
  HoleWitness h;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    const Vertex u = skeleton[i], v = skeleton[(i + 1) % skeleton.size()];
    h.cycle.push_back(u);
    if (art.graph.adjacent(u, v)) continue;
    auto ch = art.chain(u, v);
    if (ch.empty()) throw std::logic_error("assignment_to_cycle: no edge or chain between consecutive vertices");
    h.cycle.insert(h.cycle.end(), ch.begin(), ch.end());
  }
  if (auto e = hole_violation(art.graph, h)) throw std::logic_error("assignment_to_cycle: " + *e);
  return h;
}

/// Reads the assignment off an induced cycle through a and b: x_i is true
/// iff the cycle uses t_{i,0}. Checks on the way that the cycle has the
/// forced structure (per variable gadget exactly one full t- or f-side,
/// per clause c_j, d_j and at least one v_j^p, no red edge), and that the
/// result satisfies the formula.
///
/// One exception: once the c/d edges are subdivided, a clause repeating a
/// literal lets the cycle step v_j^p - f_{i,2j-1} - v_j^q (or through the
/// t-side for a negated literal). Such bridge vertices are skipped when
/// counting gadget sides, and their red edges are allowed.
inline Assignment cycle_to_assignment(const ReductionArtifact& art, const HoleWitness& z) {
  using R = VertexLabel::Role;
  detail::require_terminals(art);
  if (auto e = hole_violation(art.graph, z)) throw InputError("not an induced cycle: " + *e);
  if (!z.contains(art.a) || !z.contains(art.b)) throw InputError("cycle misses a terminal");
  const std::size_t len = z.cycle.size();
  auto role_of = [&](Vertex v) {
    auto l = VertexLabel::parse(art.graph.label(v));
    return l ? l->role : R::sub;
  };
  // Nearest non-subdivision vertex along the cycle in direction dir.
  auto skeleton_step = [&](std::size_t i, int dir) {
    for (std::size_t k = 1; k < len; ++k) {
      Vertex w = z.cycle[(i + (dir > 0 ? k : len - k)) % len];
      if (role_of(w) != R::sub) return w;
    }
    return z.cycle[i];
  };
  Bitset in = art.graph.empty_set(), bridge = art.graph.empty_set();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = z.cycle[i];
    in.set(static_cast<std::size_t>(v));
    const R r = role_of(v);
    if ((r == R::t || r == R::f || r == R::t_prime || r == R::f_prime) && role_of(skeleton_step(i, 1)) == R::v &&
        role_of(skeleton_step(i, -1)) == R::v)
      bridge.set(static_cast<std::size_t>(v));
  }
  auto has = [&](const std::string& l) {
    auto v = static_cast<std::size_t>(art.vertex(l));
    return in.test(v) && !bridge.test(v);
  };
  const int n = art.formula.n(), m = art.formula.m();
  Assignment xi;
  for (int i = 1; i <= n; ++i) {
    for (R r : {R::a_i, R::b_i, R::a_prime, R::b_prime})
      if (!has(label::of(r, i)))
        throw std::logic_error("cycle misses " + label::of(r, i) + " (forced by the gadget structure)");
    int t_count = 0, f_count = 0;
    for (int j = 0; j <= 2 * m; ++j) {
      t_count += has(label::of(R::t, i, j)) + has(label::of(R::t_prime, i, j));
      f_count += has(label::of(R::f, i, j)) + has(label::of(R::f_prime, i, j));
    }
    const int side = 2 * (2 * m + 1);
    if (!((t_count == side && f_count == 0) || (f_count == side && t_count == 0)))
      throw std::logic_error("gadget of x_" + std::to_string(i) + " is not traversed along one full side");
    xi.values.push_back(t_count == side);
  }
  for (std::size_t i = 0; i < len; ++i) {
    Vertex u = z.cycle[i], v = z.cycle[(i + 1) % len];
    if (art.graph.color(u, v) == EdgeColor::red && !bridge.test(static_cast<std::size_t>(u)) &&
        !bridge.test(static_cast<std::size_t>(v)))
      throw std::logic_error("cycle uses a red edge");
  }
  for (int j = 1; j <= m; ++j) {
    if (!has(label::of(R::c, j)) || !has(label::of(R::d, j)))
      throw std::logic_error("cycle misses c_" + std::to_string(j) + " or d_" + std::to_string(j));
    int vs = 0;
    for (int p = 1; p <= 3; ++p) vs += has(label::v(j, p));
    if (vs == 0) throw std::logic_error("cycle uses no v_" + std::to_string(j) + "^p");
  }
  if (!satisfies(art.formula, xi)) throw std::logic_error("recovered assignment does not satisfy the formula");
  return xi;
}

// ---------------------------------------------------------------------------
// Instance files

/// Recovers the formula from labels and red edges: v_j^p linked to
/// f_{i,2j-1} is the literal x_i, linked to t_{i,2j-1} it is the negation.
inline CnfFormula recover_formula(const Graph& g) {
  using R = VertexLabel::Role;
  int n = 0, m = 0;
  std::map<std::pair<int, int>, Literal> lits;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto l = VertexLabel::parse(g.label(v));
    if (!l) continue;
    if (l->role == R::a_i) n = std::max(n, l->i);
    if (l->role == R::c) m = std::max(m, l->i);
    if (l->role != R::v) continue;
    std::optional<Literal> lit;
    for (Vertex u : g.neighbors(v)) {
      if (g.color(u, v) != EdgeColor::red) continue;
      auto lu = VertexLabel::parse(g.label(u));
      if (!lu || (lu->role != R::t && lu->role != R::f) || lu->j != 2 * l->i - 1) continue;
      lit = Literal{lu->i, lu->role == R::f};
    }
    if (!lit) throw ReductionError("cannot recover literal of " + g.label(v));
    lits[{l->i, l->p}] = *lit;
  }
  CnfFormula f;
  f.num_vars = n;
  for (int j = 1; j <= m; ++j) {
    Clause c;
    for (int p = 1; p <= 3; ++p) {
      auto it = lits.find({j, p});
      if (it == lits.end()) throw ReductionError("missing v_" + std::to_string(j) + "^" + std::to_string(p));
      c[static_cast<std::size_t>(p - 1)] = it->second;
    }
    f.clauses.push_back(c);
  }
  f.validate();
  return f;
}

/// Edge-list format with `terminal a|b <v>` and `param <key> ...` header
/// lines.
inline void write_instance(std::ostream& out, const ReductionArtifact& art) {
  write_edge_list(out, art.graph, [&](std::ostream& o) {
    if (art.a >= 0) o << "terminal a " << art.a << '\n';
    if (art.b >= 0) o << "terminal b " << art.b << '\n';
    o << "param stage " << to_string(art.stage) << '\n';
    o << "param n " << art.formula.n() << '\n';
    o << "param m " << art.formula.m() << '\n';
    if (art.harden_k) o << "param harden_k " << art.harden_k << '\n';
    if (art.wheel_k) o << "param wheel_k " << art.wheel_k << '\n';
    if (art.wheel_l) o << "param wheel_l " << art.wheel_l << '\n';
    if (art.x >= 0) o << "param x " << art.x << '\n';
    if (art.y >= 0) o << "param y " << art.y << '\n';
    for (const auto& [e, c] : art.plan) o << "param plan " << e.u << ' ' << e.v << ' ' << c << '\n';
  });
}

inline ReductionArtifact read_instance(std::istream& in) {
  ReductionArtifact art;
  auto handler = [&](const std::string& kw, std::istringstream& ls) {
    if (kw == "terminal") {
      std::string which;
      Vertex v = -1;
      if (!(ls >> which >> v)) return false;
      if (which == "a")
        art.a = v;
      else if (which == "b")
        art.b = v;
      else
        return false;
      return true;
    }
    if (kw != "param") return false;
    std::string key;
    if (!(ls >> key)) return false;
    if (key == "stage") {
      std::string s;
      ls >> s;
      auto st = parse_stage(s);
      if (!st) return false;
      art.stage = *st;
    } else if (key == "plan") {
      Vertex u, v;
      int c;
      if (!(ls >> u >> v >> c)) return false;
      art.plan[Edge(u, v)] = c;
    } else {
      int val;
      if (!(ls >> val)) return false;
      if (key == "harden_k") art.harden_k = val;
      else if (key == "wheel_k") art.wheel_k = val;
      else if (key == "wheel_l") art.wheel_l = val;
      else if (key == "x") art.x = val;
      else if (key == "y") art.y = val;
      else if (key != "n" && key != "m") return false;
    }
    return true;
  };
  art.graph = read_edge_list(in, handler);
  for (Vertex v : {art.a, art.b, art.x, art.y})
    if (v != -1 && !art.graph.has_vertex(v)) throw ReductionError("instance names an unknown vertex");
  art.formula = recover_formula(art.graph);
  return art;
}

}  // namespace wheels
