#include <gtest/gtest.h>

#include <algorithm>

#include "copnum/cayley.hpp"
#include "copnum/constructions.hpp"
#include "oracles.hpp"

using namespace copnum;

namespace {

GameInstance cycle5() {
  const auto g = AbelianGroup::product({5});
  return GameInstance::build(g, {g.element({1}), g.element({4})}, {g.element({1}), g.element({4})});
}

Errc build_error(const AbelianGroup& g, std::vector<Element> s, std::vector<Element> t) {
  try {
    GameInstance::build(g, std::move(s), std::move(t));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;  // sentinel: callers expect a specific code
}

}  // namespace

TEST(Instance, BuildExamples) {
  EXPECT_FALSE(cycle5().directed());
  const auto s2 = build_sidon(5, SidonKind::directed_quadratic);
  EXPECT_TRUE(s2.directed());
  EXPECT_EQ(s2.cop_moves().size(), 4u);  // (0,0) stripped
  const auto z4 = AbelianGroup::product({4});
  EXPECT_EQ(build_error(z4, {z4.element({2})}, {z4.element({2})}), Errc::non_generating);
}

TEST(Instance, Errors) {
  const auto z5 = AbelianGroup::product({5});
  EXPECT_EQ(build_error(z5, {z5.element({1})}, {z5.element({2})}), Errc::t_not_subset);
  EXPECT_EQ(build_error(z5, {z5.zero()}, {}), Errc::empty_s);
  EXPECT_EQ(build_error(z5, {}, {}), Errc::empty_s);
  EXPECT_THROW(GameInstance::build(z5, {z5.element({1}), z5.element({4})}, {}, true), Error);
  EXPECT_NO_THROW(GameInstance::build(z5, {z5.element({1})}, {}, true));
}

TEST(Instance, ZeroIsStrippedAndDuplicatesMerged) {
  const auto z5 = AbelianGroup::product({5});
  const auto inst = GameInstance::build(z5, {z5.zero(), z5.element({4}), z5.element({1}), z5.element({1})},
                                        {z5.zero(), z5.element({1})});
  EXPECT_EQ(inst.cop_moves(), (std::vector<Element>{z5.element({1}), z5.element({4})}));
  EXPECT_EQ(inst.robber_moves(), (std::vector<Element>{z5.element({1})}));
}

TEST(Boundary, Examples) {
  const auto z7 = AbelianGroup::product({7});
  std::vector<Element> all;
  for (std::int64_t i = 1; i < 7; ++i) all.push_back(z7.element({i}));
  EXPECT_EQ(classify_boundary(GameInstance::build(z7, all, {})), BoundaryKind::empty_t);
  EXPECT_EQ(classify_boundary(GameInstance::build(z7, all, all)), BoundaryKind::complete_graph);
  EXPECT_EQ(classify_boundary(cycle5()), BoundaryKind::inverse_pair);
  const auto z2 = AbelianGroup::product({2});
  EXPECT_EQ(classify_boundary(GameInstance::build(z2, {z2.element({1})}, {z2.element({1})})),
            BoundaryKind::complete_graph);
  const auto z3 = AbelianGroup::product({3});
  // directed 3-cycle: not complete, not tiny, and pair/singleton need S = -S
  EXPECT_EQ(classify_boundary(GameInstance::build(z3, {z3.element({1})}, {z3.element({1})})),
            BoundaryKind::not_boundary);
  const auto z6 = AbelianGroup::product({6});
  const auto s6 = std::vector<Element>{z6.element({1}), z6.element({5}), z6.element({2}), z6.element({4})};
  EXPECT_EQ(classify_boundary(GameInstance::build(z6, s6, {z6.element({2})})), BoundaryKind::singleton_t);
  EXPECT_EQ(classify_boundary(GameInstance::build(z6, s6, {z6.element({1}), z6.element({2})})),
            BoundaryKind::not_boundary);
}

TEST(Boundary, DirectedNeverReportsPairOrSingleton) {
  const auto z5 = AbelianGroup::product({5});
  const auto inst = GameInstance::build(z5, {z5.element({1})}, {z5.element({1})});
  EXPECT_TRUE(inst.directed());
  EXPECT_EQ(classify_boundary(inst), BoundaryKind::not_boundary);
}

TEST(BoundaryProperty, NotBoundaryImpliesPredicates) {
  std::mt19937_64 rng(3);
  for (std::int64_t n = 2; n <= 40; ++n)
    for (const auto& f : oracle::factorizations(n)) {
      const auto g = AbelianGroup::product(f);
      for (int rep = 0; rep < 10; ++rep) {
        const auto inst = oracle::random_instance(g, rng, rep % 2 == 0, 1 + rng() % 4);
        const auto kind = classify_boundary(inst);
        const auto& t = inst.robber_moves();
        if (kind == BoundaryKind::inverse_pair || kind == BoundaryKind::singleton_t) {
          ASSERT_FALSE(inst.directed());
        }
        if (kind != BoundaryKind::not_boundary) continue;
        ASSERT_LT(inst.cop_moves().size() + 1, inst.n());
        ASSERT_GE(inst.n(), 3u);
        if (!inst.directed()) {
          ASSERT_GE(t.size(), 2u);
          ASSERT_FALSE(t.size() == 2 && g.add(t[0], t[1]) == g.zero());
        } else {
          ASSERT_GE(t.size(), 1u);
        }
      }
    }
}

TEST(Neighbors, Examples) {
  const auto c5 = cycle5();
  const auto& g = c5.group();
  EXPECT_EQ(out_neighbors(c5, g.zero(), Side::cop),
            (std::vector<Element>{g.element({0}), g.element({1}), g.element({4})}));
  const auto s2 = build_sidon(5, SidonKind::directed_quadratic);
  const auto nb = out_neighbors(s2, s2.group().zero(), Side::cop);
  ASSERT_EQ(nb.size(), 5u);
  const auto& h = s2.group();
  for (const Coords& c : std::vector<Coords>{{0, 0}, {1, 1}, {2, 4}, {3, 4}, {4, 1}})
    EXPECT_NE(std::find(nb.begin(), nb.end(), h.element(c)), nb.end());
  const auto frozen = c5.with_robber_moves({});
  EXPECT_EQ(out_neighbors(frozen, g.element({3}), Side::robber), (std::vector<Element>{g.element({3})}));
}

TEST(NeighborsProperty, SymmetryAndRegularity) {
  std::mt19937_64 rng(5);
  for (std::int64_t n : {6, 12, 50, 128, 200}) {
    for (const auto& f : oracle::factorizations(n)) {
      const auto g = AbelianGroup::product(f);
      for (int rep = 0; rep < 3; ++rep) {
        const auto inst = oracle::random_instance(g, rng, rep != 1, 3);
        std::vector<std::vector<Element>> nb(g.order());
        for (Element v : g.elements()) {
          nb[v.index] = out_neighbors(inst, v, Side::cop);
          ASSERT_EQ(nb[v.index].size(), inst.cop_moves().size() + 1);
        }
        if (inst.directed()) continue;
        for (Element u : g.elements())
          for (Element v : nb[u.index])
            ASSERT_TRUE(std::binary_search(nb[v.index].begin(), nb[v.index].end(), u));
      }
    }
  }
}

TEST(Export, DotForCycleAndDeterminism) {
  const auto c5 = cycle5();
  const auto dot = export_graph(c5, GraphFormat::dot);
  EXPECT_EQ(dot, export_graph(c5, GraphFormat::dot));
  EXPECT_EQ(dot.rfind("graph cayley {", 0), 0u);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    ++pos;
  }
  EXPECT_EQ(edges, 5u);
  std::size_t nodes = 0;
  for (std::int64_t i = 0; i < 5; ++i)
    if (dot.find("  \"(" + std::to_string(i) + ")\";") != std::string::npos) ++nodes;
  EXPECT_EQ(nodes, 5u);
  EXPECT_NE(dot.find("reflexive=true"), std::string::npos);

  const auto directed = export_graph(build_sidon(5, SidonKind::directed_quadratic), GraphFormat::dot);
  EXPECT_EQ(directed.rfind("digraph cayley {", 0), 0u);
}

TEST(Export, JsonRoundTrip) {
  std::mt19937_64 rng(9);
  for (std::int64_t n : {5, 8, 12, 25}) {
    for (const auto& f : oracle::factorizations(n)) {
      const auto g = AbelianGroup::product(f);
      const auto inst = oracle::random_instance(g, rng, n % 2 == 0, 3);
      const auto text = export_graph(inst, GraphFormat::json);
      const auto back = instance_from_json(nlohmann::json::parse(text));
      EXPECT_EQ(back.group().factors(), inst.group().factors());
      EXPECT_EQ(back.cop_moves(), inst.cop_moves());
      EXPECT_EQ(back.robber_moves(), inst.robber_moves());
      EXPECT_EQ(back.directed(), inst.directed());
    }
  }
}

TEST(Export, UnknownFormat) {
  try {
    parse_graph_format("svg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_format);
  }
  EXPECT_EQ(parse_graph_format("json"), GraphFormat::json);
}

TEST(Export, JsonErrorsAreParseErrors) {
  try {
    instance_from_json(nlohmann::json::parse(R"({"S": [[1]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
  }
}

TEST(Distances, ShortestPathToSet) {
  const auto c5 = cycle5();
  const auto& g = c5.group();
  const auto d = distances_to(g, c5.cop_moves(), {g.zero()});
  EXPECT_EQ(d, (std::vector<std::uint32_t>{0, 1, 2, 2, 1}));
  const auto one_way = distances_to(g, {g.element({1})}, {g.zero()});
  EXPECT_EQ(one_way, (std::vector<std::uint32_t>{0, 4, 3, 2, 1}));
}

TEST(GeneralGraphTest, JsonAndConnectivity) {
  GeneralGraph gg;
  gg.vertices = 3;
  gg.arcs = {{0, 1}, {1, 2}};
  EXPECT_FALSE(gg.strongly_connected());
  gg.arcs.push_back({2, 0});
  std::sort(gg.arcs.begin(), gg.arcs.end());
  EXPECT_TRUE(gg.strongly_connected());
  const auto back = GeneralGraph::from_json(gg.to_json());
  EXPECT_EQ(back.vertices, 3u);
  EXPECT_EQ(back.arcs, gg.arcs);
  EXPECT_TRUE(back.has_arc(2, 0));
  EXPECT_FALSE(back.has_arc(0, 2));
}
