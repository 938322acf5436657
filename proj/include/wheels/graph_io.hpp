#pragma once

#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wheels/graph.hpp"

namespace wheels {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Handler for directives the plain edge-list grammar does not know.
/// Receives the directive keyword and the stream positioned after it;
/// returns false to reject the line.
using DirectiveHandler = std::function<bool(const std::string& keyword, std::istringstream& rest)>;

/// Reads the edge-list format:
///
///     graph <n>
///     e <u> <v> <black|red|plain>
///     label <v> <text to end of line>
///
/// Blank lines and lines starting with '#' are ignored.
inline Graph read_edge_list(std::istream& in, const DirectiveHandler& extra = {}) {
  std::string line;
  int lineno = 0;
  std::optional<GraphBuilder> b;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "graph") {
      if (b) throw ParseError(lineno, "duplicate graph header");
      long long n = -1;
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
      b.emplace(static_cast<int>(n));
      std::string junk;
      if (ls >> junk) throw ParseError(lineno, "trailing tokens after graph header");
      continue;
    }
    if (!b) throw ParseError(lineno, "expected 'graph <n>' header first");
    if (kw == "e") {
      long long u = -1, v = -1;
      std::string color = "plain";
      if (!(ls >> u >> v)) throw ParseError(lineno, "bad edge line");
      ls >> color;
      auto c = parse_edge_color(color);
      if (!c) throw ParseError(lineno, "unknown edge color '" + color + "'");
      try {
        b->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), *c);
      } catch (const GraphError& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (kw == "label") {
      long long v = -1;
      if (!(ls >> v) || v < 0 || v >= b->order()) throw ParseError(lineno, "bad label vertex");
      std::string text;
      std::getline(ls >> std::ws, text);
      b->set_label(static_cast<Vertex>(v), text);
    } else if (!extra || !extra(kw, ls)) {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!b) throw ParseError(lineno, "missing graph header");
  return b->build();
}

inline Graph parse_edge_list(const std::string& text, const DirectiveHandler& extra = {}) {
  std::istringstream in(text);
  return read_edge_list(in, extra);
}

/// Writes `graph n`, then the optional header callback output, then edges
/// in (u, v) order, then labels for vertices that have one.
inline void write_edge_list(std::ostream& out, const Graph& g,
                            const std::function<void(std::ostream&)>& header = {}) {
  out << "graph " << g.order() << '\n';
  if (header) header(out);
  for (const Edge& e : g.edges())
    out << "e " << e.u << ' ' << e.v << ' ' << to_string(g.color(e.u, e.v)) << '\n';
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r.push_back('\\');
    r.push_back(c);
  }
  return r;
}
}  // namespace detail

/// Graphviz export. Red edges solid red, black edges dashed black, plain
/// edges solid gray; `terminals` are drawn double-circled.
inline void write_dot(std::ostream& out, const Graph& g, const std::set<Vertex>& terminals = {}) {
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << detail::dot_escape(g.label(v).empty() ? std::to_string(v) : g.label(v))
        << '"';
    if (terminals.contains(v)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    switch (g.color(e.u, e.v)) {
      case EdgeColor::red: out << " [color=red]"; break;
      case EdgeColor::black: out << " [color=black, style=dashed]"; break;
      case EdgeColor::plain: out << " [color=gray]"; break;
    }
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace wheels
