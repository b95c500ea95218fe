#include <gtest/gtest.h>

#include "coordgame/classify.hpp"
#include "coordgame/dynamics.hpp"
#include "coordgame/error.hpp"
#include "coordgame/instances.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coordgame;
using testing_support::rng_for;

namespace {

ImprovementOptions opts(SchedulerKind kind, int max_coalition,
                        std::optional<PotentialKind> tracker, std::uint64_t seed = 0) {
  ImprovementOptions o;
  o.scheduler = {kind, seed};
  o.max_coalition = max_coalition;
  o.tracker = tracker;
  return o;
}

}  // namespace

TEST(Scheduler, NamesRoundTrip) {
  for (const char* n : {"first-found", "smallest-coalition", "max-dsw", "random"}) {
    EXPECT_EQ(Scheduler::parse(n).name(), n);
  }
  EXPECT_THROW(Scheduler::parse("fifo"), InvalidArgument);
  for (const char* n : {"welfare", "pair", "sorted"}) EXPECT_EQ(potential_name(parse_potential(n)), n);
}

TEST(Potential, LexicographicComparison) {
  PotentialValue a{PotentialKind::sorted_payoffs, {3, 1, 0}};
  PotentialValue b{PotentialKind::sorted_payoffs, {3, 2, 0}};
  EXPECT_TRUE(a.strictly_less(b));
  EXPECT_FALSE(b.strictly_less(a));
  EXPECT_FALSE(a.strictly_less(a));
  PotentialValue w{PotentialKind::welfare, {3}};
  EXPECT_THROW(a.strictly_less(w), InvalidArgument);
}

TEST(Dynamics, Fig1ProfileHasNoSmallImprovingMove) {
  Instance inst = fig1();
  ImprovementTrace t = run_improvement_path(inst.game, *inst.profile,
                                            opts(SchedulerKind::first_found, 4, std::nullopt));
  EXPECT_EQ(t.reason, Termination::equilibrium);
  EXPECT_TRUE(t.steps.empty());
}

TEST(Dynamics, PseudoforestPairPotentialIncreases) {
  auto rng = rng_for(70);
  RandomGameOptions opt;
  opt.max_nodes = 9;
  for (int t = 0; t < 60; ++t) {
    CoordinationGame g = random_pseudoforest_game(opt, rng);
    ImprovementTrace tr = run_improvement_path(
        g, random_profile(g, rng),
        opts(SchedulerKind::random, g.node_count(), PotentialKind::pseudoforest_pair, t));
    EXPECT_EQ(tr.reason, Termination::equilibrium);
    EXPECT_EQ(oracle::stability(g, oracle::colors_of(tr.terminal)), g.node_count());
  }
}

TEST(Dynamics, StepsAreConsistent) {
  auto rng = rng_for(71);
  for (int t = 0; t < 60; ++t) {
    CoordinationGame g = random_game({}, rng);
    ImprovementTrace tr = run_improvement_path(
        g, random_profile(g, rng), opts(SchedulerKind::max_welfare_gain, 2, std::nullopt));
    ASSERT_EQ(tr.reason, Termination::equilibrium);
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
      const auto& st = tr.steps[i];
      EXPECT_LE(st.deviation.size(), 2);
      JointStrategy next = st.deviation.apply(g, st.from);
      EXPECT_EQ(next, i + 1 < tr.steps.size() ? tr.steps[i + 1].from : tr.terminal);
    }
    EXPECT_GE(oracle::stability(g, oracle::colors_of(tr.terminal)), 2);
  }
}

TEST(Dynamics, RandomSchedulerIsReproducible) {
  auto rng = rng_for(72);
  for (int t = 0; t < 20; ++t) {
    CoordinationGame g = random_game({}, rng);
    JointStrategy s0 = random_profile(g, rng);
    auto a = run_improvement_path(g, s0, opts(SchedulerKind::random, 2, std::nullopt, 99));
    auto b = run_improvement_path(g, s0, opts(SchedulerKind::random, 2, std::nullopt, 99));
    EXPECT_EQ(a.terminal, b.terminal);
    EXPECT_EQ(a.steps.size(), b.steps.size());
    EXPECT_EQ(a.seed, 99u);
  }
}

TEST(Dynamics, StepLimitIsReported) {
  Instance inst = fig1();
  ImprovementOptions o = opts(SchedulerKind::first_found, 5, std::nullopt);
  o.step_limit = 0;
  ImprovementTrace tr = run_improvement_path(inst.game, *inst.profile, o);
  EXPECT_EQ(tr.reason, Termination::step_limit);
  EXPECT_TRUE(tr.steps.empty());
}

TEST(Dynamics, WelfareTrackerFlagsViolations) {
  // The whole clique moving to x is the only improving move and it lowers SW.
  Instance inst = keylemma_clique(4);
  ImprovementTrace tr = run_improvement_path(
      inst.game, *inst.profile, opts(SchedulerKind::first_found, 4, PotentialKind::welfare));
  ASSERT_EQ(tr.reason, Termination::potential_violation);
  ASSERT_TRUE(tr.violation_step.has_value());
  EXPECT_EQ(tr.steps[*tr.violation_step].deviation.delta_sw, -4);
  EXPECT_EQ(tr.steps[*tr.violation_step].deviation.size(), 4);
}
