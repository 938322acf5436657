#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wheels/graph.hpp"

namespace wheels {

/// Ordered cyclic vertex sequence. Valid when it is a hole of the graph.
struct HoleWitness {
  std::vector<Vertex> cycle;

  std::size_t length() const { return cycle.size(); }
  bool contains(Vertex v) const { return std::find(cycle.begin(), cycle.end(), v) != cycle.end(); }
  friend bool operator==(const HoleWitness&, const HoleWitness&) = default;
};

enum class ConfigKind { theta, prism, pyramid, wheel, kl_wheel };

inline const char* to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::theta: return "theta";
    case ConfigKind::prism: return "prism";
    case ConfigKind::pyramid: return "pyramid";
    case ConfigKind::wheel: return "wheel";
    case ConfigKind::kl_wheel: return "kl-wheel";
  }
  return "?";
}

inline std::optional<ConfigKind> parse_config_kind(const std::string& s) {
  for (auto k : {ConfigKind::theta, ConfigKind::prism, ConfigKind::pyramid, ConfigKind::wheel,
                 ConfigKind::kl_wheel})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

/// Embedding of a Truemper configuration or a (k,l)-wheel.
///
/// Three-path kinds fill `paths` with full vertex sequences:
///  - theta:   a..b for all three paths,
///  - pyramid: apex..b_i with b_1 b_2 b_3 the triangle,
///  - prism:   a_i..b_i with both end triples triangles.
/// Wheel kinds fill `rim` and `center`; `k` and `l` record the parameters
/// the witness was found for ((4,3) for plain wheels).
struct ConfigWitness {
  ConfigKind kind = ConfigKind::wheel;
  std::array<std::vector<Vertex>, 3> paths;
  std::vector<Vertex> rim;
  Vertex center = -1;
  int k = 0;
  int l = 0;

  bool is_wheel() const { return kind == ConfigKind::wheel || kind == ConfigKind::kl_wheel; }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> vs;
    if (is_wheel()) {
      vs = rim;
      vs.push_back(center);
    } else {
      for (const auto& p : paths) vs.insert(vs.end(), p.begin(), p.end());
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  friend bool operator==(const ConfigWitness&, const ConfigWitness&) = default;
};

inline ConfigWitness make_wheel_witness(std::vector<Vertex> rim, Vertex center, int k = 4, int l = 3) {
  ConfigWitness w;
  w.kind = (k == 4 && l == 3) ? ConfigKind::wheel : ConfigKind::kl_wheel;
  w.rim = std::move(rim);
  w.center = center;
  w.k = k;
  w.l = l;
  return w;
}

// ---------------------------------------------------------------------------
// Validation. Each check returns the first violated condition, or nullopt.

namespace detail {

inline std::optional<std::string> check_path(const Graph& g, const std::vector<Vertex>& p, int min_edges,
                                             const char* name) {
  if (p.size() < static_cast<std::size_t>(min_edges) + 1)
    return std::string(name) + " is too short";
  if (!is_induced_path(g, p)) return std::string(name) + " is not an induced path";
  return std::nullopt;
}

/// Fails if some vertex of `x` is adjacent to or equal to some vertex of `y`,
/// except for pairs listed in `allowed`.
inline std::optional<std::string> check_anticomplete(const Graph& g, const std::vector<Vertex>& x,
                                                     const std::vector<Vertex>& y,
                                                     const std::vector<Edge>& allowed) {
  for (Vertex u : x) {
    for (Vertex v : y) {
      if (u == v) return "paths share vertex " + std::to_string(u);
      if (g.adjacent(u, v) && std::find(allowed.begin(), allowed.end(), Edge(u, v)) == allowed.end())
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " between paths";
    }
  }
  return std::nullopt;
}

inline std::vector<Vertex> slice(const std::vector<Vertex>& p, std::size_t from, std::size_t drop_back) {
  if (p.size() < from + drop_back) return {};
  return {p.begin() + static_cast<std::ptrdiff_t>(from), p.end() - static_cast<std::ptrdiff_t>(drop_back)};
}

inline bool is_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
  return a != b && b != c && a != c && g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
}

}  // namespace detail

inline std::optional<std::string> hole_violation(const Graph& g, const HoleWitness& h, int min_len = 4) {
  if (h.cycle.size() < static_cast<std::size_t>(std::max(min_len, 3)))
    return "cycle shorter than " + std::to_string(std::max(min_len, 3));
  for (Vertex v : h.cycle)
    if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
  if (!is_chordless_cycle(g, h.cycle, std::max(min_len, 3))) return "not a chordless cycle";
  return std::nullopt;
}

inline std::optional<std::string> theta_violation(const Graph& g, const ConfigWitness& w) {
  const auto& P = w.paths;
  for (int i = 0; i < 3; ++i) {
    if (auto e = detail::check_path(g, P[i], 2, "theta path")) return e;
  }
  for (int i = 1; i < 3; ++i)
    if (P[i].front() != P[0].front() || P[i].back() != P[0].back()) return "theta paths do not share ends";
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (auto e = detail::check_anticomplete(g, detail::slice(P[i], 1, 1), detail::slice(P[j], 1, 1), {}))
        return e;
  return std::nullopt;
}

inline std::optional<std::string> pyramid_violation(const Graph& g, const ConfigWitness& w) {
  const auto& P = w.paths;
  int short_paths = 0;
  for (int i = 0; i < 3; ++i) {
    if (auto e = detail::check_path(g, P[i], 1, "pyramid path")) return e;
    if (P[i].size() == 2) ++short_paths;
    if (P[i].front() != P[0].front()) return "pyramid paths do not share the apex";
  }
  if (short_paths > 1) return "more than one pyramid path of length 1";
  if (!detail::is_triangle(g, P[0].back(), P[1].back(), P[2].back())) return "pyramid base is not a triangle";
  std::vector<Edge> base = {Edge(P[0].back(), P[1].back()), Edge(P[0].back(), P[2].back()),
                            Edge(P[1].back(), P[2].back())};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (auto e = detail::check_anticomplete(g, detail::slice(P[i], 1, 0), detail::slice(P[j], 1, 0), base))
        return e;
  return std::nullopt;
}

inline std::optional<std::string> prism_violation(const Graph& g, const ConfigWitness& w) {
  const auto& P = w.paths;
  for (int i = 0; i < 3; ++i)
    if (auto e = detail::check_path(g, P[i], 1, "prism path")) return e;
  if (!detail::is_triangle(g, P[0].front(), P[1].front(), P[2].front())) return "prism start is not a triangle";
  if (!detail::is_triangle(g, P[0].back(), P[1].back(), P[2].back())) return "prism end is not a triangle";
  std::vector<Edge> tri;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      tri.emplace_back(P[i].front(), P[j].front());
      tri.emplace_back(P[i].back(), P[j].back());
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (auto e = detail::check_anticomplete(g, P[i], P[j], tri)) return e;
  return std::nullopt;
}

/// Rim is a chordless cycle of length >= max(k,3) (holes when k >= 4), the
/// center lies off the rim and sees at least l rim vertices.
inline std::optional<std::string> wheel_violation(const Graph& g, const ConfigWitness& w) {
  int k = w.kind == ConfigKind::wheel ? 4 : w.k;
  int l = w.kind == ConfigKind::wheel ? 3 : w.l;
  if (auto e = hole_violation(g, HoleWitness{w.rim}, std::max(k, 3))) return "rim: " + *e;
  if (!g.has_vertex(w.center)) return "unknown center";
  if (std::find(w.rim.begin(), w.rim.end(), w.center) != w.rim.end()) return "center lies on the rim";
  int seen = 0;
  for (Vertex v : w.rim)
    if (g.adjacent(v, w.center)) ++seen;
  if (seen < l) return "center has " + std::to_string(seen) + " rim neighbors, need " + std::to_string(l);
  return std::nullopt;
}

inline std::optional<std::string> witness_violation(const Graph& g, const ConfigWitness& w) {
  switch (w.kind) {
    case ConfigKind::theta: return theta_violation(g, w);
    case ConfigKind::pyramid: return pyramid_violation(g, w);
    case ConfigKind::prism: return prism_violation(g, w);
    case ConfigKind::wheel:
    case ConfigKind::kl_wheel: return wheel_violation(g, w);
  }
  return "unknown kind";
}

inline bool is_valid(const Graph& g, const ConfigWitness& w) { return !witness_violation(g, w); }

// ---------------------------------------------------------------------------
// Text records: {"kind": ..., "roles": {role: [vertices]}, "k": .., "l": ..}

inline nlohmann::json to_json(const HoleWitness& h) {
  return nlohmann::json{{"kind", "hole"}, {"roles", {{"cycle", h.cycle}}}};
}

inline nlohmann::json to_json(const ConfigWitness& w) {
  nlohmann::json roles = nlohmann::json::object();
  if (w.is_wheel()) {
    roles["rim"] = w.rim;
    roles["center"] = std::vector<Vertex>{w.center};
  } else {
    roles["P1"] = w.paths[0];
    roles["P2"] = w.paths[1];
    roles["P3"] = w.paths[2];
  }
  nlohmann::json j{{"kind", to_string(w.kind)}, {"roles", roles}};
  if (w.is_wheel()) {
    j["k"] = w.k;
    j["l"] = w.l;
  }
  return j;
}

inline ConfigWitness config_witness_from_json(const nlohmann::json& j) {
  auto kind = parse_config_kind(j.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown witness kind");
  ConfigWitness w;
  w.kind = *kind;
  const auto& roles = j.at("roles");
  if (w.is_wheel()) {
    w.rim = roles.at("rim").get<std::vector<Vertex>>();
    auto c = roles.at("center").get<std::vector<Vertex>>();
    if (c.size() != 1) throw std::invalid_argument("wheel needs exactly one center");
    w.center = c[0];
    w.k = j.value("k", 4);
    w.l = j.value("l", 3);
  } else {
    w.paths[0] = roles.at("P1").get<std::vector<Vertex>>();
    w.paths[1] = roles.at("P2").get<std::vector<Vertex>>();
    w.paths[2] = roles.at("P3").get<std::vector<Vertex>>();
  }
  return w;
}

inline HoleWitness hole_witness_from_json(const nlohmann::json& j) {
  return HoleWitness{j.at("roles").at("cycle").get<std::vector<Vertex>>()};
}

}  // namespace wheels
