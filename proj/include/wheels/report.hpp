#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wheels/fast_wheel.hpp"
#include "wheels/witness.hpp"

namespace wheels {

inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

struct InputDigest {
  std::string path;
  std::string fnv1a;  // 16 hex digits
  friend bool operator==(const InputDigest&, const InputDigest&) = default;
};

/// Summary of one CLI run, serialized as a single JSON object.
struct RunReport {
  std::string command;
  std::vector<std::string> args;
  std::vector<InputDigest> inputs;
  std::optional<bool> answer;
  std::optional<std::string> side;
  nlohmann::json witness;  // null when absent; see witness.hpp for the shape
  double wall_time_ms = 0;
  std::optional<std::uint64_t> seed;
  nlohmann::json details = nlohmann::json::object();

  void add_input(const std::string& path, const std::string& contents) {
    inputs.push_back({path, hex64(fnv1a(contents))});
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["args"] = args;
    j["inputs"] = nlohmann::json::array();
    for (const auto& in : inputs) j["inputs"].push_back({{"path", in.path}, {"fnv1a", in.fnv1a}});
    j["answer"] = answer ? nlohmann::json(*answer ? "yes" : "no") : nlohmann::json();
    j["side"] = side ? nlohmann::json(*side) : nlohmann::json();
    j["witness"] = witness;
    j["wall_time_ms"] = wall_time_ms;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json();
    j["details"] = details;
    return j;
  }

  std::string str() const { return to_json().dump(2); }

  static RunReport from_json(const nlohmann::json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.args = j.at("args").get<std::vector<std::string>>();
    for (const auto& in : j.at("inputs"))
      r.inputs.push_back({in.at("path").get<std::string>(), in.at("fnv1a").get<std::string>()});
    if (!j.at("answer").is_null()) {
      auto a = j.at("answer").get<std::string>();
      if (a != "yes" && a != "no") throw std::invalid_argument("answer must be yes, no or null");
      r.answer = a == "yes";
    }
    if (!j.at("side").is_null()) r.side = j.at("side").get<std::string>();
    r.witness = j.at("witness");
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.details = j.at("details");
    return r;
  }

  static RunReport parse(const std::string& text) { return from_json(nlohmann::json::parse(text)); }

  friend bool operator==(const RunReport& a, const RunReport& b) {
    return a.to_json() == b.to_json();
  }
};

/// Re-checks the report's witness against the graph it was computed on.
/// Returns the first violated condition, or nothing if the witness is valid
/// or absent.
inline std::optional<std::string> report_witness_violation(const RunReport& r, const Graph& g) {
  if (r.witness.is_null()) return std::nullopt;
  try {
    const Graph& target = r.side == std::optional<std::string>("complement") ? complement(g) : g;
    const std::string kind = r.witness.at("kind").get<std::string>();
    if (kind == "hole") return hole_violation(target, hole_witness_from_json(r.witness));
    if (kind == "hub") {
      Vertex v = r.witness.at("roles").at("hub").at(0).get<Vertex>();
      auto h = hubs(target);
      if (std::find(h.begin(), h.end(), v) == h.end()) return "vertex is not a hub";
      return std::nullopt;
    }
    return witness_violation(target, config_witness_from_json(r.witness));
  } catch (const std::exception& e) {
    return std::string("malformed witness: ") + e.what();
  }
}

}  // namespace wheels
