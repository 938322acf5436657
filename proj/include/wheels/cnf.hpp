#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wheels {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;

  int dimacs() const { return positive ? var : -var; }
  static Literal from_dimacs(int x) { return Literal{x > 0 ? x : -x, x > 0}; }
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula on variables 1..num_vars. Repeated and complementary
/// literals inside a clause are allowed.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int n() const { return num_vars; }
  int m() const { return static_cast<int>(clauses.size()); }

  void validate() const {
    if (num_vars < 1) throw InputError("formula needs at least one variable");
    if (clauses.empty()) throw InputError("formula needs at least one clause");
    for (const auto& c : clauses)
      for (const auto& l : c)
        if (l.var < 1 || l.var > num_vars)
          throw InputError("literal " + std::to_string(l.dimacs()) + " out of range");
  }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Truth values for x_1..x_n, stored 0-based.
struct Assignment {
  std::vector<bool> values;

  bool operator[](int var) const { return values[static_cast<std::size_t>(var - 1)]; }
  std::size_t size() const { return values.size(); }

  std::string bits() const {
    std::string s;
    for (bool b : values) s.push_back(b ? '1' : '0');
    return s;
  }

  static Assignment from_bits(const std::string& s) {
    Assignment a;
    for (char c : s) {
      if (c != '0' && c != '1') throw InputError("assignment must be a string of 0/1");
      a.values.push_back(c == '1');
    }
    return a;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

inline bool satisfies(const CnfFormula& f, const Assignment& xi) {
  if (xi.size() != static_cast<std::size_t>(f.num_vars)) return false;
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (const auto& l : c)
      if (xi[l.var] == l.positive) sat = true;
    if (!sat) return false;
  }
  return true;
}

/// DIMACS CNF. With `pad`, clauses of one or two literals are completed to
/// three by repeating their last literal.
inline CnfFormula read_dimacs(std::istream& in, bool pad = false) {
  std::string line;
  int n = -1, m = -1;
  std::vector<int> lits;
  std::vector<std::vector<int>> raw;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0) throw InputError("bad DIMACS problem line");
      continue;
    }
    if (n < 0) throw InputError("clause before 'p cnf' line");
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      int x = 0;
      try {
        std::size_t used = 0;
        x = std::stoi(tok, &used);
        if (used != tok.size()) throw InputError("bad literal '" + tok + "'");
      } catch (const std::logic_error&) {
        throw InputError("bad literal '" + tok + "'");
      }
      if (x == 0) {
        raw.push_back(lits);
        lits.clear();
      } else {
        lits.push_back(x);
      }
    }
  }
  if (n < 0) throw InputError("missing 'p cnf' line");
  if (!lits.empty()) raw.push_back(lits);
  if (static_cast<int>(raw.size()) != m)
    throw InputError("header declares " + std::to_string(m) + " clauses, found " + std::to_string(raw.size()));
  CnfFormula f;
  f.num_vars = n;
  for (auto& c : raw) {
    if (c.empty()) throw InputError("empty clause");
    if (pad)
      while (c.size() < 3) c.push_back(c.back());
    if (c.size() != 3) throw InputError("clause with " + std::to_string(c.size()) + " literals (need exactly 3)");
    f.clauses.push_back({Literal::from_dimacs(c[0]), Literal::from_dimacs(c[1]), Literal::from_dimacs(c[2])});
  }
  f.validate();
  return f;
}

inline CnfFormula parse_dimacs(const std::string& text, bool pad = false) {
  std::istringstream in(text);
  return read_dimacs(in, pad);
}

inline void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0].dimacs() << ' ' << c[1].dimacs() << ' ' << c[2].dimacs() << " 0\n";
}

}  // namespace wheels
