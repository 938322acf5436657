#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wheels/detectors.hpp"
#include "wheels/reduction.hpp"

using namespace wheels;
using R = VertexLabel::Role;

namespace {

CnfFormula f_of(int n, std::vector<std::array<int, 3>> clauses) {
  CnfFormula f;
  f.num_vars = n;
  for (auto c : clauses) f.clauses.push_back({Literal::from_dimacs(c[0]), Literal::from_dimacs(c[1]), Literal::from_dimacs(c[2])});
  return f;
}

std::size_t count_color(const Graph& g, EdgeColor c) {
  std::size_t k = 0;
  for (const Edge& e : g.edges()) k += g.color(e.u, e.v) == c;
  return k;
}

// Length of the shortest cycle through v (BFS between pairs of neighbors in G - v).
int shortest_cycle_through(const Graph& g, Vertex v) {
  int best = 1 << 30;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> q{nb[i]};
    dist[static_cast<std::size_t>(nb[i])] = 0;
    for (std::size_t qi = 0; qi < q.size(); ++qi)
      for (Vertex w : g.neighbors(q[qi]))
        if (w != v && dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(q[qi])] + 1;
          q.push_back(w);
        }
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (dist[static_cast<std::size_t>(nb[j])] >= 0) best = std::min(best, dist[static_cast<std::size_t>(nb[j])] + 2);
  }
  return best;
}

SubdivisionPlan random_plan(const ReductionArtifact& art, std::mt19937_64& rng) {
  SubdivisionPlan plan;
  for (const Edge& e : art.graph.edges())
    if (art.graph.color(e.u, e.v) == EdgeColor::black) plan[e] = static_cast<int>(rng() % 3);
  return plan;
}

bool has_triple_literal(const CnfFormula& f) {
  for (const auto& c : f.clauses)
    if (c[0] == c[1] && c[1] == c[2]) return true;
  return false;
}

std::vector<CnfFormula> tiny_formulas(int max_n, int max_m) {
  std::vector<CnfFormula> out;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 1; m <= max_m; ++m)
      for (auto& f : oracle::formulas_up_to_renaming(n, m)) out.push_back(f);
  return out;
}

}  // namespace

TEST(Dimacs, ParsesAndWrites) {
  auto f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 2 0\n");
  EXPECT_EQ(f.n(), 3);
  EXPECT_EQ(f.m(), 2);
  EXPECT_EQ(f.clauses[0][1], (Literal{2, false}));
  std::ostringstream out;
  write_dimacs(out, f);
  EXPECT_EQ(parse_dimacs(out.str()), f);
}

TEST(Dimacs, RejectsMalformedInput) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 5 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 0 0\n"), InputError);
}

TEST(Dimacs, PadRepeatsLastLiteral) {
  auto f = parse_dimacs("p cnf 2 2\n1 0\n-1 2 0\n", true);
  EXPECT_EQ(f.clauses[0], (Clause{Literal{1, true}, Literal{1, true}, Literal{1, true}}));
  EXPECT_EQ(f.clauses[1][2], (Literal{2, true}));
}

TEST(VertexLabel, RoundTrip) {
  for (const std::string s : {"a", "b", "x", "y", "a_3", "b'_2", "a'_10", "t_{1,0}", "f'_{2,4}", "t'_{3,12}", "c_2",
                              "d_7", "v_3^2", "z_5", "sub(a,a_1,3)", "sub(t_{1,2},t_{1,3},1)",
                              "sub(z_1,sub(a,a_1,7),2)"}) {
    auto l = VertexLabel::parse(s);
    ASSERT_TRUE(l) << s;
    EXPECT_EQ(l->str(), s);
  }
  auto sub = VertexLabel::parse("sub(t_{1,2},t_{1,3},4)");
  EXPECT_EQ(sub->sub_u, "t_{1,2}");
  EXPECT_EQ(sub->sub_v, "t_{1,3}");
  EXPECT_EQ(sub->index, 4);
  auto t = VertexLabel::parse("f'_{2,5}");
  EXPECT_EQ(t->role, R::f_prime);
  EXPECT_EQ(t->i, 2);
  EXPECT_EQ(t->j, 5);
  for (const std::string s : {"", "q", "a_", "t_{1}", "sub(a,b)", "v_1", "sub(a,b,x)"})
    EXPECT_FALSE(VertexLabel::parse(s)) << s;
}

TEST(BuildGf, OneVariableOneClauseHas23Vertices) {
  auto art = build_gf(f_of(1, {{1, 1, 1}}));
  EXPECT_EQ(art.graph.order(), 23);
}

TEST(BuildGf, SizesMatchClosedForms) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 6, m = 1 + t % 5;
    auto art = build_gf(oracle::random_formula(n, m, rng));
    auto want = gf_counts(n, m);
    EXPECT_EQ(art.graph.order(), want.vertices);
    EXPECT_EQ(static_cast<long long>(count_color(art.graph, EdgeColor::black)), want.black_edges);
    EXPECT_EQ(static_cast<long long>(count_color(art.graph, EdgeColor::red)), want.red_edges);
    EXPECT_EQ(want.black_edges, 8LL * n * m + 10LL * n + 7LL * m + 2);
    EXPECT_EQ(count_color(art.graph, EdgeColor::plain), 0u);
    EXPECT_EQ(art.graph.degree(art.a), 2);
    EXPECT_EQ(art.graph.degree(art.b), 2);
    // Every vertex is labelled, and labels are unique.
    std::set<std::string> labels(art.graph.labels().begin(), art.graph.labels().end());
    EXPECT_EQ(labels.size(), static_cast<std::size_t>(art.graph.order()));
  }
}

TEST(BuildGf, RedSquaresPerVariable) {
  auto art = build_gf(f_of(2, {{1, 2, -1}, {-2, 1, 2}, {1, 1, 1}}));
  const int m = 3;
  for (int i = 1; i <= 2; ++i) {
    std::size_t red = 0;
    for (const Edge& e : art.graph.edges()) {
      if (art.graph.color(e.u, e.v) != EdgeColor::red) continue;
      auto lu = *VertexLabel::parse(art.graph.label(e.u));
      auto lv = *VertexLabel::parse(art.graph.label(e.v));
      if (lu.role != R::v && lv.role != R::v && lu.i == i) ++red;
    }
    EXPECT_EQ(red, static_cast<std::size_t>(4 * (m + 1)));
  }
}

TEST(BuildGf, TripleLiteralGetsDistinctVertices) {
  auto art = build_gf(f_of(1, {{1, 1, 1}}));
  const Vertex f11 = art.vertex("f_{1,1}"), fp11 = art.vertex("f'_{1,1}");
  for (int p = 1; p <= 3; ++p) {
    const Vertex v = art.vertex(label::v(1, p));
    EXPECT_EQ(art.graph.color(v, f11), EdgeColor::red);
    EXPECT_EQ(art.graph.color(v, fp11), EdgeColor::red);
  }
  EXPECT_EQ(art.graph.degree(f11), 5);
}

TEST(BuildGf, ChainingEdgesAreBlack) {
  auto art = build_gf(f_of(2, {{1, 2, 2}, {-1, -2, 1}}));
  for (auto [u, v] : std::vector<std::pair<std::string, std::string>>{
           {"b_1", "a_2"}, {"b'_1", "a'_2"}, {"b'_2", "c_1"}, {"d_1", "c_2"}, {"a", "a_1"}, {"a", "a'_1"}, {"b", "d_2"},
           {"b", "b_2"}})
    EXPECT_EQ(art.graph.color(art.vertex(u), art.vertex(v)), EdgeColor::black) << u << v;
  EXPECT_EQ(art.graph.color(art.vertex("v_2^1"), art.vertex("t_{1,3}")), EdgeColor::red);
}

TEST(BuildGf, RejectsInvalidFormula) {
  EXPECT_THROW(build_gf(CnfFormula{}), InputError);
  EXPECT_THROW(build_gf(f_of(1, {{1, 2, 1}})), InputError);
}

TEST(MakeFGraph, EmptyPlanIsIdentity) {
  auto art = build_gf(f_of(2, {{1, -2, 2}}));
  EXPECT_EQ(make_f_graph(art, {}).graph, art.graph);
}

TEST(MakeFGraph, SubdividingEveryBlackEdgeOnce) {
  std::mt19937_64 rng(3);
  auto art = build_gf(oracle::random_distinct_formula(4, 3, rng));
  SubdivisionPlan plan;
  for (const Edge& e : art.graph.edges())
    if (art.graph.color(e.u, e.v) == EdgeColor::black) plan[e] = 1;
  auto f = make_f_graph(art, plan);
  EXPECT_EQ(f.graph.size(), art.graph.size() + plan.size());
  EXPECT_TRUE(hubs(f.graph).empty());
  EXPECT_EQ(f.stage, Stage::f_graph);
}

TEST(MakeFGraph, RejectsRedEdgesAndNonEdges) {
  auto art = build_gf(f_of(1, {{1, 1, -1}}));
  EXPECT_THROW(make_f_graph(art, {{Edge(art.vertex("t_{1,0}"), art.vertex("f_{1,0}")), 1}}), ReductionError);
  EXPECT_THROW(make_f_graph(art, {{Edge(art.a, art.b), 1}}), ReductionError);
}

TEST(MakeFGraph, ChainsAreLabelledAndFindable) {
  auto art = build_gf(f_of(1, {{1, 1, -1}}));
  const Edge e(art.a, art.vertex("a_1"));
  auto f = make_f_graph(art, {{e, 3}});
  auto ch = f.chain(art.a, art.vertex("a_1"));
  ASSERT_EQ(ch.size(), 3u);
  const Vertex first = f.chain(e.u, e.v)[0];
  EXPECT_EQ(f.graph.label(first), "sub(" + art.graph.label(e.u) + "," + art.graph.label(e.v) + ",1)");
  EXPECT_TRUE(f.graph.adjacent(e.u, first));
  EXPECT_TRUE(f.graph.adjacent(art.a, ch[0]));
  auto rev = f.chain(art.vertex("a_1"), art.a);
  EXPECT_EQ(rev, std::vector<Vertex>(ch.rbegin(), ch.rend()));
}

TEST(Harden, PostconditionsOnRandomFormulas) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    auto f = oracle::random_distinct_formula(3 + t % 8, 1 + t % 15, rng);
    auto h = harden(build_gf(f), 7);
    auto c = inspect_instance(h);
    EXPECT_TRUE(c.bipartite);
    EXPECT_TRUE(c.hubs.empty());
    EXPECT_EQ(c.deg_a, 2);
    EXPECT_EQ(c.deg_b, 2);
    EXPECT_TRUE(c.shapes_ok);
    EXPECT_GE(shortest_cycle_through(h.graph, h.a), 7);
    EXPECT_EQ(h.stage, Stage::hardened);
    EXPECT_EQ(h.harden_k, 7);
  }
}

TEST(Harden, ShapesOfHeavySubgraph) {
  // Distinct variables give only C4 (red squares), P3 (f - v - f') and
  // isolated vertices.
  auto h = harden(build_gf(f_of(3, {{1, -2, 3}})), 7);
  auto shapes = heavy_component_shapes(h.graph);
  EXPECT_GT(std::count(shapes.begin(), shapes.end(), HeavyShape::c4), 0);
  EXPECT_GT(std::count(shapes.begin(), shapes.end(), HeavyShape::p3), 0);
  EXPECT_EQ(std::count(shapes.begin(), shapes.end(), HeavyShape::other), 0);
}

TEST(Harden, TripleLiteralClauseLeavesAHub) {
  // f_{1,1} keeps three red neighbors of degree 4; no subdivision of black
  // edges can change that.
  auto h = harden(build_gf(f_of(1, {{1, 1, 1}})), 7);
  auto c = inspect_instance(h);
  EXPECT_TRUE(c.bipartite);
  EXPECT_FALSE(c.shapes_ok);
  ASSERT_FALSE(c.hubs.empty());
  std::set<std::string> names;
  for (Vertex v : c.hubs) names.insert(h.graph.label(v));
  EXPECT_TRUE(names.contains("f_{1,1}"));
}

TEST(Harden, SatisfiabilityMatchesLongHoleThroughTerminals) {
  for (const auto& f : tiny_formulas(2, 2)) {
    auto h = harden(build_gf(f), 7);
    auto z = find_hole_through(h.graph, h.a, h.b, 7);
    ASSERT_EQ(z.has_value(), oracle::satisfiable(f));
    if (z) {
      EXPECT_GE(z->length(), 7u);
      EXPECT_TRUE(satisfies(f, cycle_to_assignment(h, *z)));
    }
  }
}

TEST(Harden, SmallKStillGivesDegreeTwoTerminals) {
  auto h = harden(build_gf(f_of(2, {{1, 2, -1}})), 0);
  EXPECT_EQ(h.graph.degree(h.a), 2);
  EXPECT_TRUE(bipartition(h.graph));
  EXPECT_THROW(harden(h, 7), ReductionError);
}

TEST(Lift, StructureForLThree) {
  auto h = harden(build_gf(f_of(2, {{1, -2, 2}})), 7);
  auto g = lift_to_wheel_instance(h, 4, 3);
  EXPECT_EQ(g.stage, Stage::wheel_instance);
  EXPECT_FALSE(g.find("a"));
  EXPECT_FALSE(g.find("b"));
  const Vertex x = g.vertex("x"), y = g.vertex("y");
  EXPECT_EQ(x, g.x);
  EXPECT_EQ(y, g.y);
  std::vector<Vertex> z{g.vertex("z_1"), g.vertex("z_2"), g.vertex("z_3")};
  EXPECT_FALSE(g.find("z_4"));
  EXPECT_TRUE(g.graph.adjacent(x, z[0]));
  EXPECT_TRUE(g.graph.adjacent(x, z[2]));
  EXPECT_FALSE(g.graph.adjacent(x, z[1]));
  EXPECT_TRUE(g.graph.adjacent(x, y));
  EXPECT_EQ(g.graph.degree(x), 3);
  EXPECT_EQ(g.graph.degree(y), 3);
  EXPECT_TRUE(bipartition(g.graph));
  EXPECT_EQ(hubs(g.graph), std::vector<Vertex>{x});
}

TEST(Lift, LongerPathForLargerL) {
  auto h = harden(build_gf(f_of(1, {{1, 1, -1}})), 7);
  auto g = lift_to_wheel_instance(h, 5, 5);
  EXPECT_TRUE(g.find("z_7"));
  EXPECT_FALSE(g.find("z_8"));
  EXPECT_EQ(g.graph.degree(g.x), 5);
  EXPECT_TRUE(bipartition(g.graph));
  EXPECT_EQ(hubs(g.graph), std::vector<Vertex>{g.x});
}

TEST(Lift, Errors) {
  auto gf = build_gf(f_of(1, {{1, 1, -1}}));
  EXPECT_THROW(lift_to_wheel_instance(gf, 4, 3), ReductionError);
  auto h = harden(gf, 7);
  EXPECT_THROW(lift_to_wheel_instance(h, 4, 2), ReductionError);
  EXPECT_THROW(lift_to_wheel_instance(h, 8, 3), ReductionError);
  EXPECT_THROW(lift_to_wheel_instance(h, 2, 3), ReductionError);
}

TEST(Lift, PinnedFormulas) {
  auto sat = lift_to_wheel_instance(harden(build_gf(f_of(1, {{1, 1, 1}})), 7), 4, 3);
  auto w = detect_kl_wheel(sat.graph, 4, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->center, sat.x);
  auto unsat = lift_to_wheel_instance(harden(build_gf(f_of(1, {{1, 1, 1}, {-1, -1, -1}})), 7), 4, 3);
  EXPECT_FALSE(detect_kl_wheel(unsat.graph, 4, 3));
}

TEST(Lift, WheelIffSatisfiable) {
  for (const auto& f : tiny_formulas(2, 2)) {
    auto g = lift_to_wheel_instance(harden(build_gf(f), 7), 4, 3);
    auto w = detect_kl_wheel(g.graph, 4, 3);
    ASSERT_EQ(w.has_value(), oracle::satisfiable(f));
    if (w) EXPECT_EQ(w->center, g.x);
    if (!has_triple_literal(f)) EXPECT_EQ(hubs(g.graph), std::vector<Vertex>{g.x});
  }
}

TEST(Lift, WheelIffSatisfiableForLargerL) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto f = oracle::random_formula(2, 1 + t % 3, rng);
    auto g = lift_to_wheel_instance(harden(build_gf(f), 7), 6, 4);
    EXPECT_EQ(detect_kl_wheel(g.graph, 6, 4).has_value(), oracle::satisfiable(f));
  }
}

TEST(AssignmentToCycle, TripleClause) {
  auto art = build_gf(f_of(1, {{1, 1, 1}}));
  auto h = assignment_to_cycle(art, Assignment::from_bits("1"));
  // a, a_1, t_{1,0..2}, b_1, b, d_1, v_1^1, c_1, b'_1, t'_{1,2..0}, a'_1.
  EXPECT_EQ(h.length(), 15u);
  EXPECT_TRUE(is_hole(art.graph, h.cycle));
  EXPECT_TRUE(h.contains(art.vertex("v_1^1")));
  EXPECT_FALSE(h.contains(art.vertex("v_1^2")));
  EXPECT_THROW(assignment_to_cycle(art, Assignment::from_bits("0")), InputError);
  EXPECT_THROW(assignment_to_cycle(art, Assignment::from_bits("11")), InputError);
  try {
    assignment_to_cycle(art, Assignment::from_bits("0"));
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "assignment does not satisfy formula");
  }
}

TEST(AssignmentToCycle, StructureOfTheCycle) {
  for (const auto& f : tiny_formulas(3, 2)) {
    auto art = build_gf(f);
    for (const auto& xi : oracle::satisfying_assignments(f)) {
      auto h = assignment_to_cycle(art, xi);
      ASSERT_TRUE(is_hole(art.graph, h.cycle));
      for (std::size_t i = 0; i < h.cycle.size(); ++i)
        EXPECT_NE(art.graph.color(h.cycle[i], h.cycle[(i + 1) % h.cycle.size()]), EdgeColor::red);
      for (int i = 1; i <= f.n(); ++i) {
        int in_gadget = 0;
        for (Vertex v : h.cycle) {
          auto l = *VertexLabel::parse(art.graph.label(v));
          const bool gadget = l.role == R::a_i || l.role == R::b_i || l.role == R::a_prime || l.role == R::b_prime ||
                              l.role == R::t || l.role == R::f || l.role == R::t_prime || l.role == R::f_prime;
          in_gadget += gadget && l.i == i;
        }
        EXPECT_EQ(in_gadget, 4 * f.m() + 6);
      }
    }
  }
}

TEST(CycleToAssignment, RoundTripOnGfHardenedAndRandomFGraphs) {
  std::mt19937_64 rng(13);
  for (const auto& f : tiny_formulas(3, 2)) {
    auto gf = build_gf(f);
    auto fg = make_f_graph(gf, random_plan(gf, rng));
    for (const auto& xi : oracle::satisfying_assignments(f)) {
      EXPECT_EQ(cycle_to_assignment(gf, assignment_to_cycle(gf, xi)), xi);
      EXPECT_EQ(cycle_to_assignment(fg, assignment_to_cycle(fg, xi)), xi);
    }
  }
  for (const auto& f : tiny_formulas(2, 2)) {
    auto h = harden(build_gf(f), 7);
    for (const auto& xi : oracle::satisfying_assignments(f))
      EXPECT_EQ(cycle_to_assignment(h, assignment_to_cycle(h, xi)), xi);
  }
}

TEST(CycleToAssignment, FoundHolesGiveSatisfyingAssignments) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    auto f = oracle::random_formula(1 + t % 5, 1 + t % 4, rng);
    auto art = build_gf(f);
    auto z = find_hole_through(art.graph, art.a, art.b, 4);
    ASSERT_EQ(z.has_value(), oracle::satisfiable(f));
    if (z) EXPECT_TRUE(satisfies(f, cycle_to_assignment(art, *z)));
  }
}

TEST(CycleToAssignment, RejectsBadCycles) {
  auto art = build_gf(f_of(1, {{1, 1, -1}}));
  EXPECT_THROW(cycle_to_assignment(art, HoleWitness{{art.a, art.b, art.vertex("c_1")}}), InputError);
  // A red square is a hole but misses the terminals.
  HoleWitness square{{art.vertex("t_{1,0}"), art.vertex("f_{1,0}"), art.vertex("t'_{1,0}"), art.vertex("f'_{1,0}")}};
  ASSERT_TRUE(is_hole(art.graph, square.cycle));
  EXPECT_THROW(cycle_to_assignment(art, square), InputError);
}

TEST(CycleToAssignment, UnsatisfiableFormulasHaveNoCycle) {
  auto art = build_gf(f_of(1, {{1, 1, 1}, {-1, -1, -1}}));
  EXPECT_FALSE(find_hole_through(art.graph, art.a, art.b, 4));
}

TEST(Instance, RoundTripEveryStage) {
  std::mt19937_64 rng(21);
  auto f = oracle::random_formula(3, 2, rng);
  auto gf = build_gf(f);
  auto fg = make_f_graph(gf, random_plan(gf, rng));
  auto h = harden(gf, 7);
  auto w = lift_to_wheel_instance(h, 4, 3);
  for (const auto* art : {&gf, &fg, &h, &w}) {
    std::ostringstream out;
    write_instance(out, *art);
    std::istringstream in(out.str());
    auto back = read_instance(in);
    EXPECT_EQ(back, *art);
    EXPECT_EQ(back.formula, f);
  }
}

TEST(Instance, RecoversFormulaFromLabels) {
  auto f = f_of(3, {{1, -2, 3}, {-1, -1, 2}, {3, 3, -3}});
  EXPECT_EQ(recover_formula(build_gf(f).graph), f);
  EXPECT_EQ(recover_formula(harden(build_gf(f), 7).graph), f);
}

TEST(Instance, RejectsUnknownDirectives) {
  EXPECT_THROW(
      {
        std::istringstream in("graph 1\nparam colour blue\n");
        read_instance(in);
      },
      ParseError);
}
