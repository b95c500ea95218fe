#include <gtest/gtest.h>

#include <algorithm>

#include "coordgame/classify.hpp"
#include "coordgame/deviation.hpp"
#include "coordgame/error.hpp"
#include "coordgame/instances.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coordgame;
using testing_support::rng_for;

TEST(Builtins, ShapesOfReferenceInstances) {
  Instance f1 = fig1();
  EXPECT_EQ(f1.game.node_count(), 8);
  EXPECT_EQ(f1.game.graph().edge_count(), 18);
  EXPECT_EQ(f1.game.palette().size(), 3);

  Instance oct = octahedron();
  EXPECT_EQ(oct.game.node_count(), 10);
  EXPECT_EQ(oct.game.graph().edge_count(), 16);
  EXPECT_EQ(oct.labels.front(), 1);
  EXPECT_EQ(oct.labels.back(), 10);

  Instance f3 = fig3(2);
  EXPECT_EQ(f3.game.node_count(), 8);
  EXPECT_EQ(classify(f3.game.graph(), f3.game.assignment()).is_pseudoforest, true);

  Instance wa = weakly_acyclic_fig1();
  for (NodeId v = 0; v < wa.game.node_count(); ++v) {
    EXPECT_TRUE(wa.game.assignment().allows(v, wa.game.palette().id("d")));
  }
}

TEST(Builtins, ResolveByName) {
  for (const auto& name : builtin_names()) {
    auto inst = builtin_instance(name);
    ASSERT_TRUE(inst.has_value()) << name;
    EXPECT_EQ(inst->name, name);
  }
  EXPECT_FALSE(builtin_instance("no-such-thing").has_value());
  EXPECT_EQ(builtin_instance("kpoa-lower-8-4")->game.node_count(), 8);
  EXPECT_EQ(builtin_instance("fig3x3")->game.node_count(), 12);
  EXPECT_THROW(builtin_instance("kpoa-lower-3-5"), InvalidArgument);
  EXPECT_THROW(builtin_instance("keylemma-clique-2"), InvalidArgument);
}

TEST(GraphFromSpec, Families) {
  EXPECT_EQ(graph_from_spec("path5").edge_count(), 4);
  EXPECT_EQ(graph_from_spec("cycle5").edge_count(), 5);
  EXPECT_EQ(graph_from_spec("complete5").edge_count(), 10);
  EXPECT_EQ(graph_from_spec("star5").edge_count(), 4);
  EXPECT_THROW(graph_from_spec("wheel5"), InvalidArgument);
}

TEST(KpoaLower, ReferenceProfileIsAKEquilibrium) {
  for (auto [n, k] : {std::pair{6, 3}, {8, 4}, {10, 5}}) {
    Instance inst = kpoa_lower(n, k);
    EXPECT_TRUE(is_k_equilibrium(inst.game, *inst.profile, k).holds);
    EXPECT_FALSE(is_k_equilibrium(inst.game, *inst.profile, k + 1).holds);
  }
}

TEST(KeylemmaClique, Layout) {
  Instance inst = keylemma_clique(4);
  EXPECT_EQ(inst.game.node_count(), 4 + 4 * 2);
  EXPECT_EQ(inst.deviation->coalition, (std::vector<NodeId>{0, 1, 2, 3}));
  EXPECT_THROW(keylemma_clique(2), InvalidArgument);
}

TEST(CliqueReduction, EquilibriumIffNoClique) {
  auto rng = rng_for(60);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_graph(std::uniform_int_distribution<int>(3, 7)(rng), 0.5, rng);
    for (int k : {3, 4}) {
      Instance inst = clique_reduction(g, k);
      EXPECT_EQ(is_k_equilibrium(inst.game, *inst.profile, k).holds, !oracle::has_clique(g, k));
    }
  }
}

TEST(RandomFamilies, MeetTheirClassPromises) {
  auto rng = rng_for(61);
  RandomGameOptions opt;
  opt.max_nodes = 10;
  opt.palette = 4;
  for (int t = 0; t < 100; ++t) {
    CoordinationGame cf = random_color_forest_game(opt, rng);
    EXPECT_TRUE(is_color_forest(cf.graph(), cf.assignment()));
    CoordinationGame pf = random_pseudoforest_game(opt, rng);
    EXPECT_TRUE(is_pseudoforest(pf.graph()));
    CoordinationGame cc = random_color_complete_game(opt, rng);
    EXPECT_TRUE(is_color_complete(cc.graph(), cc.assignment()));
    CoordinationGame any = random_game(opt, rng);
    EXPECT_GE(any.node_count(), opt.min_nodes);
    EXPECT_LE(any.node_count(), opt.max_nodes);
    EXPECT_LE(any.assignment().max_set_size(), opt.max_set_size);
    EXPECT_NO_THROW(check_feasible(any, random_profile(any, rng)));
  }
}
