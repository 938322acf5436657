// wheels: command-line front end for the detectors, the fast wheel test and
// the SAT reduction. Every command prints a JSON run report on stdout.
//
// Exit codes: 0 found / certified, 1 not found / rejected, 2 error or timeout.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wheels/wheels.hpp"

namespace {

using namespace wheels;
using nlohmann::json;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes through a temporary file so readers never see half a file.
void write_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Failure("cannot write " + path);
    out << contents;
    if (!out.flush()) throw Failure("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_atomically(out_path, text);
}

Graph load_graph(const std::string& path, RunReport& rep) {
  std::string text = slurp(path);
  rep.add_input(path, text);
  std::istringstream in(text);
  // Instance files carry extra header lines; plain detection ignores them.
  return read_edge_list(in, [](const std::string& kw, std::istringstream&) {
    return kw == "terminal" || kw == "param";
  });
}

double default_timeout() {
  if (const char* env = std::getenv("WHEELS_TIMEOUT")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed WHEELS_TIMEOUT\n";
    }
  }
  return 60.0;
}

// Runs `work` with a wall-clock limit (seconds, <= 0 for none). On timeout
// the report is printed and the process exits with 2; the worker cannot be
// cancelled, so it is abandoned.
int with_timeout(double seconds, RunReport& rep, const std::function<int()>& work) {
  if (seconds <= 0) return work();
  std::packaged_task<int()> task(work);
  auto fut = task.get_future();
  std::thread(std::move(task)).detach();
  if (fut.wait_for(std::chrono::duration<double>(seconds)) == std::future_status::timeout) {
    rep.details["error"] = "timeout after " + std::to_string(seconds) + " s";
    std::cout << rep.str() << std::endl;
    std::cerr << "error: timeout\n";
    std::fflush(nullptr);
    std::_Exit(2);
  }
  return fut.get();
}

json hub_witness(Vertex v) { return json{{"kind", "hub"}, {"roles", {{"hub", std::vector<Vertex>{v}}}}}; }

// ---------------------------------------------------------------------------

struct DetectOpts {
  std::string file, target;
  int k = -1, l = -1, a = -1, b = -1;
  bool witness = false;
  double timeout = -1;
};

int cmd_detect(const DetectOpts& o, RunReport& rep) {
  Graph g = load_graph(o.file, rep);
  const std::string& t = o.target;
  auto need = [&](int v, const char* name) {
    if (v < 0) throw Failure("--target " + t + " needs --" + name);
    return v;
  };
  const bool brute = t != "hub";
  const double limit = o.timeout >= 0 ? o.timeout : (brute ? default_timeout() : 0);
  rep.details["target"] = t;
  return with_timeout(limit, rep, [&]() -> int {
    json w;
    bool found = false;
    if (t == "hub") {
      auto h = hubs(g);
      found = !h.empty();
      if (found) w = hub_witness(h.front());
      rep.details["hubs"] = h;
    } else if (t == "hole" || t == "hole-through") {
      const int k = o.k < 0 ? 4 : o.k;
      std::optional<HoleWitness> h;
      if (t == "hole")
        h = (k == 5) ? find_hole_ge5(g) : find_hole(g, k);
      else
        h = find_hole_through(g, need(o.a, "a"), need(o.b, "b"), k);
      found = h.has_value();
      if (h) w = to_json(*h);
    } else {
      std::optional<ConfigWitness> c;
      if (t == "wheel")
        c = detect_wheel(g);
      else if (t == "theta")
        c = detect_theta(g);
      else if (t == "prism")
        c = detect_prism(g);
      else if (t == "pyramid")
        c = detect_pyramid(g);
      else if (t == "any-truemper")
        c = detect_any_truemper(g);
      else if (t == "kl-wheel")
        c = detect_kl_wheel(g, need(o.k, "k"), need(o.l, "l"));
      else
        throw Failure("unknown target " + t);
      found = c.has_value();
      if (c) w = to_json(*c);
    }
    rep.answer = found;
    rep.side = "graph";
    if (o.witness) rep.witness = w;
    return found ? 0 : 1;
  });
}

int cmd_wheel_or_co(const std::string& file, RunReport& rep) {
  Graph g = load_graph(file, rep);
  auto r = wheel_in_g_or_complement(g);
  rep.answer = r.has_value();
  if (r) {
    rep.side = to_string(r->side);
    rep.witness = to_json(r->witness);
  }
  return r ? 0 : 1;
}

struct ReduceOpts {
  std::string file, mode = "gf", out, dot;
  int k = -1, l = 3, harden_k = 7;
  std::uint64_t seed = 0;
  bool seed_given = false, pad = false;
};

int cmd_reduce(const ReduceOpts& o, RunReport& rep) {
  std::string text = slurp(o.file);
  rep.add_input(o.file, text);
  CnfFormula f = parse_dimacs(text, o.pad);
  ReductionArtifact art = build_gf(f);
  if (o.mode == "gf") {
  } else if (o.mode == "f-graph") {
    std::mt19937_64 rng(o.seed);
    rep.seed = o.seed;
    SubdivisionPlan plan;
    for (const Edge& e : art.graph.edges())
      if (art.graph.color(e.u, e.v) == EdgeColor::black) plan[e] = static_cast<int>(rng() % 3);
    art = make_f_graph(art, plan);
  } else if (o.mode == "hardened" || o.mode == "wheel-instance") {
    const int hk = o.mode == "hardened" ? (o.k < 0 ? 7 : o.k) : o.harden_k;
    art = harden(art, hk);
    if (o.mode == "wheel-instance") art = lift_to_wheel_instance(art, o.k < 0 ? 4 : o.k, o.l);
    InstanceCheck c = inspect_instance(art);
    rep.details["bipartite"] = c.bipartite;
    rep.details["hubs"] = c.hubs;
    if (!c.bipartite) throw Failure("postcondition failed: instance is not bipartite");
    const std::vector<Vertex> want = art.x >= 0 ? std::vector<Vertex>{art.x} : std::vector<Vertex>{};
    if (c.hubs != want) {
      std::string msg = "postcondition failed: hubs are {";
      for (std::size_t i = 0; i < c.hubs.size(); ++i)
        msg += (i ? "," : "") + art.graph.label(c.hubs[i]);
      throw Failure(msg + "}, expected " + (art.x >= 0 ? "{x}" : "none"));
    }
  } else {
    throw Failure("unknown mode " + o.mode);
  }
  rep.details["mode"] = o.mode;
  rep.details["n"] = f.n();
  rep.details["m"] = f.m();
  rep.details["vertices"] = art.graph.order();
  rep.details["edges"] = art.graph.size();
  std::ostringstream inst;
  write_instance(inst, art);
  emit(o.out, inst.str());
  if (!o.out.empty()) rep.details["out"] = o.out;
  if (!o.dot.empty()) {
    std::set<Vertex> term;
    for (Vertex v : {art.a, art.b, art.x, art.y})
      if (v >= 0) term.insert(v);
    std::ostringstream d;
    write_dot(d, art.graph, term);
    write_atomically(o.dot, d.str());
    rep.details["dot"] = o.dot;
  }
  return 0;
}

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<Vertex> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw Failure("bad vertex '" + tok + "'");
    } catch (const std::logic_error&) {
      throw Failure("bad vertex '" + tok + "'");
    }
  }
  return out;
}

struct VerifyOpts {
  std::string file, assignment, cycle;
};

int cmd_verify(const VerifyOpts& o, RunReport& rep) {
  std::string text = slurp(o.file);
  rep.add_input(o.file, text);
  std::istringstream in(text);
  ReductionArtifact art = read_instance(in);
  if (o.assignment.empty() == o.cycle.empty()) throw Failure("give exactly one of --assignment or --cycle");
  try {
    if (!o.assignment.empty()) {
      HoleWitness h = assignment_to_cycle(art, Assignment::from_bits(o.assignment));
      rep.witness = to_json(h);
      rep.details["cycle"] = h.cycle;
    } else {
      Assignment xi = cycle_to_assignment(art, HoleWitness{parse_vertex_list(o.cycle)});
      rep.details["assignment"] = xi.bits();
    }
  } catch (const std::exception& e) {
    // Any rejected certificate, including one that trips an internal check.
    rep.answer = false;
    rep.details["violation"] = e.what();
    std::cerr << "rejected: " << e.what() << '\n';
    return 1;
  }
  rep.answer = true;
  rep.side = "graph";
  return 0;
}

struct GenOpts {
  std::string family, out;
  int n = -1;
  double p = 0.5;
  std::uint64_t seed = 0;
};

Graph generate(const GenOpts& o) {
  const std::string& fam = o.family;
  auto need_n = [&](int lo) {
    if (o.n < lo) throw Failure(fam + " needs --n >= " + std::to_string(lo));
    return o.n;
  };
  std::vector<std::pair<Vertex, Vertex>> e;
  if (fam == "cycle" || fam == "wheel") {
    const int n = need_n(fam == "cycle" ? 3 : 4);
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    if (fam == "wheel")
      for (int i = 0; i < n; ++i) e.emplace_back(i, n);
    return make_graph(fam == "wheel" ? n + 1 : n, e);
  }
  if (fam == "path") {
    const int n = need_n(1);
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
  }
  if (fam == "prism") return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  if (fam == "theta-k23") return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  if (fam == "petersen") {
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return make_graph(10, e);
  }
  if (fam == "gnp") {
    const int n = need_n(0);
    if (!(o.p >= 0 && o.p <= 1)) throw Failure("--p must lie in [0, 1]");
    std::mt19937_64 rng(o.seed);
    // Integer threshold keeps the output identical across standard libraries.
    const long double scaled = static_cast<long double>(o.p) * 18446744073709551616.0L;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const std::uint64_t r = rng();
        if (o.p >= 1 || static_cast<long double>(r) < scaled) e.emplace_back(i, j);
      }
    return make_graph(n, e);
  }
  throw Failure("unknown family " + fam);
}

int cmd_gen(const GenOpts& o, RunReport& rep) {
  Graph g = generate(o);
  if (o.family == "gnp") rep.seed = o.seed;
  rep.details["family"] = o.family;
  rep.details["vertices"] = g.order();
  rep.details["edges"] = g.size();
  emit(o.out, to_edge_list(g));
  return 0;
}

int cmd_census(int max_n, RunReport& rep) {
  if (max_n < 1 || max_n > 9) throw Failure("--max-n must lie in [1, 9]");
  bool ok = true;
  json per = json::array();
  const auto c5 = canonical_code(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  const auto c6 = canonical_code(make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  const auto p5 = canonical_code(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  json checks = json::object();
  for (int n = 1; n <= max_n; ++n) {
    auto codes = graph_codes_of_order(n);
    std::vector<std::string> listed;
    std::set<std::uint64_t> listed_set;
    long long split = 0, split_listed = 0, kpq = 0, kpq_listed = 0;
    for (auto code : codes) {
      Graph g = graph_from_code(n, code);
      const bool free = !wheel_in_g_or_complement(g);
      if (free) {
        listed.push_back(hex64(code));
        listed_set.insert(code);
      }
      if (is_split_graph(g)) {
        ++split;
        split_listed += free;
      }
      if (is_complete_bipartite(g)) {
        ++kpq;
        kpq_listed += free;
      }
    }
    json row{{"n", n}, {"graphs", codes.size()}, {"wheel_free_both_sides", listed.size()},
             {"split", split}, {"split_listed", split_listed}, {"complete_bipartite", kpq},
             {"complete_bipartite_listed", kpq_listed}};
    if (n <= 6) row["codes"] = listed;
    ok = ok && split == split_listed && kpq == kpq_listed;
    if (n == 5) {
      checks["C5"] = listed_set.contains(c5);
      checks["P5"] = listed_set.contains(p5);
      ok = ok && listed_set.contains(c5) && listed_set.contains(p5);
    }
    if (n == 6) {
      checks["C6"] = listed_set.contains(c6);
      ok = ok && listed_set.contains(c6);
    }
    per.push_back(row);
  }
  rep.details["orders"] = per;
  rep.details["named_members"] = checks;
  rep.details["code_format"] = "hex of the upper adjacency triangle, row-major, first pair most significant";
  rep.answer = ok;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wheels: detect wheels and Truemper configurations; build and check SAT reduction instances"};
  app.require_subcommand(1);

  DetectOpts det;
  auto* detect = app.add_subcommand("detect", "run a detector on an edge-list graph");
  detect->add_option("graph", det.file, "edge-list file")->required();
  detect->add_option("--target", det.target, "detector")
      ->required()
      ->check(CLI::IsMember({"wheel", "theta", "prism", "pyramid", "any-truemper", "hole", "hole-through", "kl-wheel",
                             "hub"}));
  detect->add_option("--k", det.k, "minimum rim / hole length");
  detect->add_option("--l", det.l, "minimum number of center neighbors");
  detect->add_option("--a", det.a, "first vertex for hole-through");
  detect->add_option("--b", det.b, "second vertex for hole-through");
  detect->add_flag("--witness", det.witness, "include the witness in the report");
  detect->add_option("--timeout", det.timeout, "seconds; 0 disables (default 60 for exponential detectors, "
                                               "override with WHEELS_TIMEOUT)");

  std::string woc_file;
  auto* woc = app.add_subcommand("wheel-or-co", "does the graph or its complement contain a wheel");
  woc->add_option("graph", woc_file, "edge-list file")->required();

  ReduceOpts red;
  auto* reduce = app.add_subcommand("reduce", "build a reduction instance from a DIMACS 3-CNF file");
  reduce->add_option("cnf", red.file, "DIMACS file")->required();
  reduce->add_option("--mode", red.mode, "gf, f-graph, hardened or wheel-instance")
      ->check(CLI::IsMember({"gf", "f-graph", "hardened", "wheel-instance"}));
  reduce->add_option("--k", red.k, "hardened: minimum cycle length through a (default 7); "
                                   "wheel-instance: rim length k (default 4)");
  reduce->add_option("--l", red.l, "wheel-instance: center neighbors (default 3)");
  reduce->add_option("--harden-k", red.harden_k, "wheel-instance: hardening parameter (default 7)");
  reduce->add_option("--subdiv-seed", red.seed, "f-graph: seed of the random subdivision plan");
  reduce->add_flag("--pad", red.pad, "pad short clauses by repeating their last literal");
  reduce->add_option("--out", red.out, "instance file (default stdout, report then goes to stderr)");
  reduce->add_option("--dot", red.dot, "also write Graphviz DOT here");

  VerifyOpts ver;
  auto* verify = app.add_subcommand("verify", "check a certificate against a reduction instance");
  verify->add_option("instance", ver.file, "instance file written by reduce")->required();
  verify->add_option("--assignment", ver.assignment, "truth values as a 0/1 string, x1 first");
  verify->add_option("--cycle", ver.cycle, "vertex list, comma or space separated");

  GenOpts gen;
  auto* gn = app.add_subcommand("gen", "generate a graph");
  gn->add_option("family", gen.family, "cycle, wheel, prism, theta-k23, petersen, path, gnp")
      ->required()
      ->check(CLI::IsMember({"cycle", "wheel", "prism", "theta-k23", "petersen", "path", "gnp"}));
  gn->add_option("--n", gen.n, "order (wheel: rim length)");
  gn->add_option("--p", gen.p, "edge probability for gnp");
  gn->add_option("--seed", gen.seed, "seed for gnp");
  gn->add_option("--out", gen.out, "output file (default stdout, report then goes to stderr)");

  int max_n = 6;
  auto* census = app.add_subcommand("census", "list small graphs with no wheel in the graph or its complement");
  census->add_option("--max-n", max_n, "largest order, at most 9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  RunReport rep;
  rep.args.assign(argv + 1, argv + argc);
  const auto start = std::chrono::steady_clock::now();
  int code = 2;
  // Graph text goes to stdout when no --out is given; the report then moves
  // to stderr so stdout stays a valid file.
  bool report_to_stderr = false;
  try {
    if (*detect) {
      rep.command = "detect";
      code = cmd_detect(det, rep);
    } else if (*woc) {
      rep.command = "wheel-or-co";
      code = cmd_wheel_or_co(woc_file, rep);
    } else if (*reduce) {
      rep.command = "reduce";
      report_to_stderr = red.out.empty() || red.out == "-";
      code = cmd_reduce(red, rep);
    } else if (*verify) {
      rep.command = "verify";
      code = cmd_verify(ver, rep);
    } else if (*gn) {
      rep.command = "gen";
      report_to_stderr = gen.out.empty() || gen.out == "-";
      code = cmd_gen(gen, rep);
    } else if (*census) {
      rep.command = "census";
      code = cmd_census(max_n, rep);
    }
  } catch (const std::exception& e) {
    rep.details["error"] = e.what();
    std::cerr << "error: " << e.what() << '\n';
    code = 2;
  }
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  (report_to_stderr ? std::cerr : std::cout) << rep.str() << std::endl;
  return code;
}
