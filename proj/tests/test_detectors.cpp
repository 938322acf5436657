#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wheels/detectors.hpp"
#include "wheels/enumeration.hpp"
#include "wheels/reduction.hpp"

using namespace wheels;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Graph w4() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }
Graph k23() { return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
Graph k33() { return make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }
Graph prism() { return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return make_graph(10, e);
}

// C8 plus a vertex adjacent to v1, v4, v7.
Graph c8_chord_vertex() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 8; ++i) e.emplace_back(i, (i + 1) % 8);
  e.emplace_back(8, 0);
  e.emplace_back(8, 3);
  e.emplace_back(8, 6);
  return make_graph(9, e);
}

}  // namespace

TEST(FindHole, Examples) {
  auto h = find_hole(cycle(7), 5);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->length(), 7u);
  EXPECT_FALSE(find_hole(complete(4), 4));
  auto p = find_hole(petersen(), 4);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->length(), 5u);
  EXPECT_THROW(find_hole(cycle(5), 3), std::invalid_argument);
}

TEST(FindHoleThrough, Examples) {
  auto h = find_hole_through(cycle(6), 0, 3, 4);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->length(), 6u);
  EXPECT_FALSE(find_hole_through(cycle(6), 0, 3, 7));
  EXPECT_THROW(find_hole_through(cycle(6), 2, 2, 4), std::invalid_argument);
  EXPECT_THROW(find_hole_through(cycle(6), 2, 9, 4), std::invalid_argument);
}

TEST(FindHoleThrough, GadgetGraphOfTripleClause) {
  CnfFormula f{1, {{Literal{1, true}, Literal{1, true}, Literal{1, true}}}};
  auto art = build_gf(f);
  auto h = find_hole_through(art.graph, art.a, art.b, 4);
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->contains(art.a));
  EXPECT_TRUE(h->contains(art.b));
}

TEST(FindHoleGe5, Examples) {
  auto h = find_hole_ge5(cycle(5));
  ASSERT_TRUE(h);
  EXPECT_EQ(h->length(), 5u);
  EXPECT_FALSE(find_hole_ge5(cycle(4)));
  EXPECT_FALSE(find_hole_ge5(prism()));
}

TEST(FindHoleGe5, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(2024);
  int yes = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 4 + t % 9;
    const double p = std::array<double, 3>{0.2, 0.4, 0.6}[static_cast<std::size_t>(t % 3)];
    Graph g = oracle::gnp(n, p, rng);
    auto fast = find_hole_ge5(g);
    auto slow = find_hole(g, 5);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << to_edge_list(g);
    if (fast) {
      EXPECT_TRUE(is_chordless_cycle(g, fast->cycle, 5));
      ++yes;
    }
    if (n <= 8) ASSERT_EQ(fast.has_value(), oracle::has_hole(g, 5)) << to_edge_list(g);
  }
  EXPECT_GT(yes, 100);
}

TEST(DetectKlWheel, Examples) {
  auto w = detect_kl_wheel(w4(), 4, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->center, 4);
  EXPECT_FALSE(detect_kl_wheel(k33(), 4, 3));
  auto big = detect_kl_wheel(c8_chord_vertex(), 6, 3);
  ASSERT_TRUE(big);
  EXPECT_EQ(big->center, 8);
  EXPECT_EQ(big->rim.size(), 8u);
  EXPECT_TRUE(is_valid(c8_chord_vertex(), *big));
  EXPECT_THROW(detect_kl_wheel(w4(), 2, 1), std::invalid_argument);
  EXPECT_THROW(detect_kl_wheel(w4(), 4, 5), std::invalid_argument);
}

TEST(DetectKlWheel, TriangleRimsWhenKIsThree) {
  // K4: a triangle plus a vertex seeing all three of it.
  auto w = detect_kl_wheel(complete(4), 3, 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rim.size(), 3u);
  EXPECT_FALSE(detect_kl_wheel(complete(4), 4, 3));
}

TEST(DetectWheel, Examples) {
  EXPECT_TRUE(detect_wheel(w4()));
  EXPECT_FALSE(detect_wheel(petersen()));
  EXPECT_FALSE(oracle::has_wheel(petersen()));
}

TEST(DetectWheel, CenterIsAlwaysAHub) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    Graph g = oracle::gnp(7 + t % 4, 0.45, rng);
    if (auto w = detect_wheel(g)) {
      auto h = hubs(g);
      EXPECT_NE(std::find(h.begin(), h.end(), w->center), h.end());
    }
  }
}

TEST(DetectWheel, NoneOnHardenedInstances) {
  // Bipartite and hub-free, so no center can exist.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 3; ++t) {
    auto art = harden(build_gf(oracle::random_distinct_formula(3, 2, rng)), 7);
    ASSERT_TRUE(hubs(art.graph).empty());
    EXPECT_FALSE(detect_wheel(art.graph));
  }
}

TEST(Configurations, Examples) {
  auto t = detect_theta(k23());
  ASSERT_TRUE(t);
  for (const auto& p : t->paths) EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(detect_prism(prism()));
  EXPECT_FALSE(detect_theta(complete(4)));
  EXPECT_FALSE(detect_prism(complete(4)));
  EXPECT_FALSE(detect_pyramid(complete(4)));
}

TEST(Configurations, PyramidExample) {
  // Apex 0 joined to triangle 1 2 3 by paths 0-1, 0-4-2, 0-5-3.
  Graph g = make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 4}, {4, 2}, {0, 5}, {5, 3}});
  auto p = detect_pyramid(g);
  ASSERT_TRUE(p);
  EXPECT_TRUE(is_valid(g, *p));
  EXPECT_TRUE(oracle::has_pyramid(g));
}

TEST(AnyTruemper, Examples) {
  Graph tree = make_graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  EXPECT_FALSE(detect_any_truemper(tree));
  auto w = detect_any_truemper(k23());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, ConfigKind::theta);
  EXPECT_FALSE(detect_any_truemper(complete(5)));
}

// Every detector against the subset oracles, exhaustively on small orders
// and on random graphs up to eight vertices.
class OracleAgreement : public ::testing::Test {
 protected:
  static void check(const Graph& g) {
    auto theta = detect_theta(g);
    auto pyramid = detect_pyramid(g);
    auto prism_ = detect_prism(g);
    auto wheel = detect_wheel(g);
    auto hole = find_hole(g, 4);
    ASSERT_EQ(theta.has_value(), oracle::has_theta(g)) << to_edge_list(g);
    ASSERT_EQ(pyramid.has_value(), oracle::has_pyramid(g)) << to_edge_list(g);
    ASSERT_EQ(prism_.has_value(), oracle::has_prism(g)) << to_edge_list(g);
    ASSERT_EQ(wheel.has_value(), oracle::has_wheel(g)) << to_edge_list(g);
    ASSERT_EQ(hole.has_value(), oracle::has_hole(g)) << to_edge_list(g);
    for (const auto& w : {theta, pyramid, prism_, wheel})
      if (w) EXPECT_TRUE(is_valid(g, *w));
    auto any = detect_any_truemper(g);
    EXPECT_EQ(any.has_value(), theta || pyramid || prism_ || wheel);
  }
};

TEST_F(OracleAgreement, AllGraphsUpToSixVertices) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_of_order(n)) check(g);
}

TEST_F(OracleAgreement, AllGraphsOnSevenVertices) {
  for (const Graph& g : graphs_of_order(7)) check(g);
}

TEST_F(OracleAgreement, RandomGraphsOnEightVertices) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) check(oracle::gnp(8, std::array<double, 3>{0.25, 0.5, 0.75}[t % 3], rng));
}

TEST(DetectKlWheel, AgreesWithOracleAcrossParameters) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::gnp(7 + t % 2, 0.4, rng);
    for (int k = 4; k <= 6; ++k)
      for (int l = 0; l <= 4; ++l) {
        auto w = detect_kl_wheel(g, k, l);
        ASSERT_EQ(w.has_value(), oracle::has_kl_wheel(g, k, l)) << "k=" << k << " l=" << l << '\n' << to_edge_list(g);
        if (w) EXPECT_TRUE(is_valid(g, *w));
      }
  }
}

TEST(DetectKlWheel, MonotoneInParameters) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::gnp(9, 0.35, rng);
    for (int k = 4; k <= 6; ++k)
      for (int l = 1; l <= 4; ++l) {
        auto w = detect_kl_wheel(g, k, l);
        if (!w) continue;
        EXPECT_TRUE(detect_kl_wheel(g, k, l - 1));
        for (int k2 = 4; k2 < k; ++k2) EXPECT_TRUE(detect_kl_wheel(g, k2, l));
      }
  }
}

TEST(Witness, ValidatorsRejectBrokenWitnesses) {
  Graph g = w4();
  auto w = *detect_wheel(g);
  EXPECT_TRUE(is_valid(g, w));
  auto bad = w;
  bad.center = bad.rim[0];
  EXPECT_FALSE(is_valid(g, bad));
  bad = w;
  bad.kind = ConfigKind::kl_wheel;
  bad.k = 5;
  bad.l = 3;
  EXPECT_FALSE(is_valid(g, bad));
  auto t = *detect_theta(k23());
  t.paths[0].pop_back();
  EXPECT_FALSE(is_valid(k23(), t));
}

TEST(Witness, JsonRoundTrip) {
  auto w = *detect_kl_wheel(c8_chord_vertex(), 6, 3);
  auto back = config_witness_from_json(to_json(w));
  EXPECT_EQ(back.rim, w.rim);
  EXPECT_EQ(back.center, w.center);
  EXPECT_EQ(back.k, 6);
  EXPECT_EQ(back.l, 3);
  auto t = *detect_theta(k23());
  auto tb = config_witness_from_json(to_json(t));
  EXPECT_EQ(tb.paths, t.paths);
  HoleWitness h{{0, 1, 2, 3, 4}};
  EXPECT_EQ(hole_witness_from_json(to_json(h)).cycle, h.cycle);
}
