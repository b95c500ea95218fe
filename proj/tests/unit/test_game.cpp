#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "coordgame/error.hpp"
#include "coordgame/game.hpp"
#include "coordgame/instances.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coordgame;
using testing_support::make_game;
using testing_support::profile;
using testing_support::rng_for;

TEST(Payoff, Fig1UnderlinedProfile) {
  Instance inst = fig1();
  EXPECT_EQ(payoffs(inst.game, *inst.profile), (std::vector<int>{1, 2, 2, 3, 3, 1, 1, 3}));
}

TEST(Payoff, IsolatedNodeEarnsNothing) {
  CoordinationGame g = make_game(2, {}, {{"a", "b"}, {"a"}});
  EXPECT_EQ(payoff(g, profile(g, {"a", "a"}), 0), 0);
}

TEST(Payoff, Fig3WorstStrongEquilibrium) {
  Instance inst = fig3();
  EXPECT_EQ(payoffs(inst.game, profile(inst.game, {"b", "b", "b", "a"})),
            (std::vector<int>{1, 2, 1, 0}));
}

TEST(UnicoloredEdges, Fig1BoldEdges) {
  Instance inst = fig1();
  std::set<std::pair<std::int64_t, std::int64_t>> bold = {
      {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {6, 8}, {7, 8}, {1, 8}};
  std::set<std::pair<std::int64_t, std::int64_t>> got;
  for (const Edge& e : unicolored_edges(inst.game, *inst.profile)) {
    got.insert({inst.labels[e.u], inst.labels[e.v]});
  }
  EXPECT_EQ(got, bold);
}

TEST(UnicoloredEdges, SmallCases) {
  CoordinationGame forced = make_game(3, {{0, 1}, {1, 2}}, {{"a"}, {"a"}, {"a"}});
  EXPECT_EQ(unicolored_edges(forced, JointStrategy::first_colors(forced)).size(), 2u);

  Instance inst = fig3();
  auto es = unicolored_edges(inst.game, profile(inst.game, {"b", "b", "b", "a"}));
  EXPECT_EQ(es, (std::vector<Edge>{make_edge(0, 1), make_edge(1, 2)}));
}

TEST(SocialWelfare, KnownValues) {
  Instance f3 = fig3();
  EXPECT_EQ(social_welfare(f3.game, profile(f3.game, {"a", "a", "a", "a"})), 8);
  EXPECT_EQ(social_welfare(f3.game, profile(f3.game, {"b", "b", "b", "a"})), 4);

  Instance low = kpoa_lower(6, 3);
  EXPECT_EQ(social_welfare(low.game, profile(low.game, std::vector<std::string>(6, "c"))), 24);

  CoordinationGame apart = make_game(2, {{0, 1}}, {{"a"}, {"b"}});
  EXPECT_EQ(social_welfare(apart, JointStrategy::first_colors(apart)), 0);
}

TEST(SocialWelfare, HandshakeAndRestrictedIdentities) {
  auto rng = rng_for(10);
  for (int t = 0; t < 300; ++t) {
    RandomGameOptions opt;
    opt.max_nodes = 9;
    CoordinationGame g = random_game(opt, rng);
    JointStrategy s = random_profile(g, rng);
    const auto es = unicolored_edges(g, s);
    EXPECT_EQ(social_welfare(g, s), 2L * static_cast<long>(es.size()));
    EXPECT_EQ(social_welfare(g, s), oracle::welfare(g, oracle::colors_of(s)));
    for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_LE(payoff(g, s, v), g.graph().degree(v));

    std::vector<NodeId> k, rest;
    std::bernoulli_distribution coin(0.5);
    for (NodeId v = 0; v < g.node_count(); ++v) (coin(rng) ? k : rest).push_back(v);
    EXPECT_EQ(social_welfare_restricted(g, s, k) + social_welfare_restricted(g, s, rest),
              social_welfare(g, s));
    long inside = 0, across = 0;
    const auto within = edges_within(g.graph(), k);
    const auto boundary = boundary_edges(g.graph(), k);
    for (const Edge& e : es) {
      inside += std::find(within.begin(), within.end(), e) != within.end();
      across += std::find(boundary.begin(), boundary.end(), e) != boundary.end();
    }
    EXPECT_EQ(social_welfare_restricted(g, s, k), 2 * inside + across);
  }
}

TEST(UnicoloredCycles, PseudoforestCounts) {
  Instance f3 = fig3();
  EXPECT_EQ(unicolored_cycle_count(f3.game, profile(f3.game, {"a", "a", "a", "a"})), 1);
  EXPECT_EQ(unicolored_cycle_count(f3.game, profile(f3.game, {"b", "b", "b", "a"})), 0);
  CoordinationGame path = make_game(3, {{0, 1}, {1, 2}}, {{"a"}, {"a"}, {"a"}});
  EXPECT_EQ(unicolored_cycle_count(path, JointStrategy::first_colors(path)), 0);
  Instance f1 = fig1();
  EXPECT_THROW(unicolored_cycle_count(f1.game, *f1.profile), StructuralError);
}

TEST(JointStrategy, RejectsInfeasibleColors) {
  CoordinationGame g = make_game(2, {{0, 1}}, {{"a"}, {"b"}});
  EXPECT_THROW(JointStrategy(g, {1, 1}), InfeasibleProfile);
  EXPECT_THROW(JointStrategy(g, {0}), InfeasibleProfile);
  EXPECT_THROW(profile(g, {"a", "a"}), InfeasibleProfile);
}

TEST(JointStrategy, WithProducesNewValue) {
  Instance f3 = fig3();
  JointStrategy s = profile(f3.game, {"b", "b", "b", "a"});
  const NodeId k[] = {0, 1, 2};
  JointStrategy t = s.with(f3.game, k, f3.game.palette().id("a"));
  EXPECT_EQ(social_welfare(f3.game, t), 8);
  EXPECT_EQ(social_welfare(f3.game, s), 4);
  const NodeId dummy[] = {3};
  EXPECT_THROW(s.with(f3.game, dummy, f3.game.palette().id("b")), InfeasibleProfile);
}

TEST(ProfileSpace, EnumeratesEveryProfileOnce) {
  auto rng = rng_for(11);
  for (int t = 0; t < 30; ++t) {
    RandomGameOptions opt;
    opt.max_nodes = 6;
    opt.max_set_size = 3;
    CoordinationGame g = random_game(opt, rng);
    ProfileSpace space(g);
    auto expected = oracle::all_profiles(g);
    ASSERT_EQ(space.size(), expected.size());
    std::set<std::vector<ColorId>> seen;
    for (std::uint64_t i = 0; i < space.size(); ++i) seen.insert(oracle::colors_of(space.at(i)));
    EXPECT_EQ(seen, std::set<std::vector<ColorId>>(expected.begin(), expected.end()));
  }
  Instance oct = octahedron();
  EXPECT_EQ(ProfileSpace(oct.game).size(), 64u);
  EXPECT_THROW(ProfileSpace(oct.game).require(63), BudgetExceeded);
}
