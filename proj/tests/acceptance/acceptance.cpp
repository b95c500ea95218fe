// One line per criterion: "[PASS] ACn ..." or "[FAIL] ACn ...".
// Usage: coordgame_acceptance [--criterion N]
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coordgame/analysis.hpp"
#include "coordgame/classify.hpp"
#include "coordgame/color_forest.hpp"
#include "coordgame/deviation.hpp"
#include "coordgame/dynamics.hpp"
#include "coordgame/instances.hpp"
#include "coordgame/solvers.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coordgame;
using testing_support::rng_for;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void ac1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Instance inst = fig1();
  const std::vector<int> expected{1, 2, 2, 3, 3, 1, 1, 3};
  const auto raw = oracle::colors_of(*inst.profile);
  std::vector<int> got;
  for (NodeId v = 0; v < inst.game.node_count(); ++v) got.push_back(oracle::payoff(inst.game, raw, v));
  o.require(got == expected, "payoffs");
  o.require(payoffs(inst.game, *inst.profile) == expected, "library payoffs");
  o.require(is_k_equilibrium(inst.game, *inst.profile, 4).holds, "4-equilibrium");
  o.require(!is_k_equilibrium(inst.game, *inst.profile, 5).holds, "not a 5-equilibrium");
  o.require(oracle::stability(inst.game, raw) == 4, "oracle stability level");
  const int tv = transition_value(inst.game).value;
  o.require(tv == 4, "transition value");
  const double s = seconds_since(t0);
  o.require(s < 5.0, "runtime");
  o.detail << "payoffs match, stability 4, transition value " << tv << ", " << s << " s";
}

void ac2(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Instance inst = octahedron();
  int profiles = 0, three = 0, two = 0;
  oracle::for_each_profile(inst.game, [&](const oracle::Colors& s) {
    ++profiles;
    const int level = oracle::stability(inst.game, s);
    three += level >= 3;
    two += level >= 2;
  });
  o.require(profiles == 64, "64 profiles");
  o.require(three == 0, "no 3-equilibrium");
  o.require(two > 0, "a 2-equilibrium exists");
  const int tv = transition_value(inst.game).value;
  o.require(tv == 2, "transition value");
  const double s = seconds_since(t0);
  o.require(s < 5.0, "runtime");
  o.detail << profiles << " profiles, " << three << " 3-equilibria, transition value " << tv
           << ", " << s << " s";
}

void ac3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Instance inst = fig3();
  PseudoforestSolution sol = solve_pseudoforest(inst.game);
  o.require(sol.welfare == 8 && social_welfare(inst.game, sol.profile) == 8, "solver SW 8");
  o.require(unicolored_cycle_count(inst.game, sol.profile) == 1, "unicolored cycle");
  JointStrategy worst = JointStrategy::from_names(inst.game, {"b", "b", "b", "a"});
  long min_strong = -1;
  bool worst_found = false;
  oracle::for_each_profile(inst.game, [&](const oracle::Colors& s) {
    if (oracle::stability(inst.game, s) != inst.game.node_count()) return;
    const long sw = oracle::welfare(inst.game, s);
    if (min_strong < 0 || sw < min_strong) min_strong = sw;
    if (s == oracle::colors_of(worst)) worst_found = true;
  });
  o.require(worst_found, "(b,b,b,a) is strong");
  o.require(min_strong == 4, "worst strong SW 4");
  const int ks[] = {4};
  InefficiencyReport rep = inefficiency(inst.game, ks);
  o.require(rep.rows[0].poa == Ratio{2, 1}, "strong PoA 2");
  o.require(oracle::max_welfare(inst.game) == 2 * min_strong, "oracle ratio 2");
  const double s = seconds_since(t0);
  o.require(s < 5.0, "runtime");
  o.detail << "SW(opt) 8, worst strong SW " << min_strong << ", strong PoA "
           << rep.rows[0].poa.str() << ", " << s << " s";
}

void ac4(Outcome& o) {
  for (int l : {3, 4, 5}) {
    Instance inst = keylemma_clique(l);
    const auto& dev = *inst.deviation;
    const auto raw = oracle::colors_of(*inst.profile);
    oracle::Move move{dev.coalition, oracle::Colors(dev.coalition.size(), dev.color)};
    o.require(oracle::is_profitable(inst.game, raw, move), "profitable");
    oracle::Colors after = raw;
    for (NodeId v : dev.coalition) after[v] = dev.color;
    const long dsw = oracle::welfare(inst.game, after) - oracle::welfare(inst.game, raw);
    const int tau = oracle::min_feedback_edges(induced_subgraph(inst.game.graph(), dev.coalition).graph);
    o.require(dsw == -2L * tau + 2, "dSW = -2 tau + 2");

    DeviationReport d = describe_deviation(inst.game, *inst.profile, dev.coalition, dev.color);
    KeyLemmaAudit a = audit_key_lemma(inst.game, *inst.profile, d);
    o.require(a.delta_sw == dsw && a.tau == tau, "audit agrees with oracle");
    o.require(a.identity_holds && a.delta_sw == a.identity_rhs, "identity equality");
    o.require(a.delta_sw > a.feedback_bound, "strict feedback inequality");
    o.detail << "l=" << l << " tau=" << tau << " dSW=" << dsw << "; ";
  }
}

void ac5(Outcome& o) {
  for (auto [n, k] : {std::pair{6, 3}, {8, 4}, {10, 5}}) {
    Instance inst = kpoa_lower(n, k);
    const auto raw = oracle::colors_of(*inst.profile);
    o.require(is_k_equilibrium(inst.game, *inst.profile, k).holds, "reference is k-equilibrium");
    const auto smallest = oracle::min_deviation_size(inst.game, raw, k);
    o.require(!smallest.has_value(), "oracle certifies k-equilibrium");
    const long opt = oracle::max_welfare(inst.game);
    const long sw = oracle::welfare(inst.game, raw);
    // opt / sw == 2(n-1)/(k-1) - 1
    o.require(opt * (k - 1) == sw * (2L * (n - 1) - (k - 1)), "reference ratio");
    const int ks[] = {k};
    InefficiencyReport rep = inefficiency(inst.game, ks);
    const Ratio expect{2L * (n - 1) - (k - 1), k - 1};
    o.require(rep.rows[0].poa == expect, "k-PoA equals lower bound");
    o.detail << "(" << n << "," << k << ") ratio " << rep.rows[0].poa.str() << "; ";
  }
}

void ac6(Outcome& o) {
  auto rng = rng_for(1006);
  int instances = 0, checks = 0, violations = 0;
  while (instances < 220) {
    RandomGameOptions opt;
    opt.max_nodes = 8;
    opt.palette = std::uniform_int_distribution<int>(2, 4)(rng);
    opt.max_set_size = std::uniform_int_distribution<int>(2, 3)(rng);
    opt.edge_probability = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    CoordinationGame g = random_game(opt, rng);
    if (ProfileSpace(g).size() > 4096) continue;
    ++instances;
    const int n = g.node_count();
    const long opt_sw = oracle::max_welfare(g);
    ProfileScan scan = scan_profiles(g);
    if (scan.optimum != opt_sw) ++violations;
    for (int k = 2; k <= n; ++k) {
      const LevelStats& st = scan.by_k[k - 1];
      if (!st.count) continue;
      ++checks;
      const long worst = st.min_welfare;
      if (opt_sw * (k - 1) > 2L * (n - 1) * worst) ++violations;
      if (k == n && opt_sw > 2 * worst) ++violations;
    }
  }
  o.require(violations == 0, "bound violations");
  o.detail << instances << " instances, " << checks << " (instance,k) checks, " << violations
           << " violations";
}

void ac7(Outcome& o) {
  auto rng = rng_for(1007);
  int instances = 0, verdicts = 0, disagreements = 0;
  RandomGameOptions opt;
  opt.max_nodes = 10;
  opt.palette = 3;
  opt.max_set_size = 2;
  for (; instances < 220; ++instances) {
    CoordinationGame g = random_color_forest_game(opt, rng);
    if (!is_color_forest(g.graph(), g.assignment())) ++disagreements;
    JointStrategy s = random_profile(g, rng);
    const auto smallest = oracle::min_deviation_size(g, oracle::colors_of(s), g.node_count());
    for (int k = 1; k <= g.node_count(); ++k) {
      ++verdicts;
      const bool fast = verify_color_forest(g, s, k).holds;
      const bool brute = is_k_equilibrium(g, s, k, kDefaultBudget).holds;
      const bool oracle_holds = !(smallest && *smallest <= k);
      if (fast != brute || fast != oracle_holds) ++disagreements;
    }
  }
  o.require(disagreements == 0, "disagreements");
  o.detail << instances << " instances, " << verdicts << " verdicts, " << disagreements
           << " disagreements";
}

void ac8(Outcome& o) {
  auto rng = rng_for(1008);
  RandomGameOptions opt;
  opt.max_nodes = 10;
  opt.palette = 3;
  opt.max_set_size = 2;
  int failures = 0;
  auto certified = [&](const CoordinationGame& g, const JointStrategy& s) {
    if (oracle::any_deviation(g, oracle::colors_of(s), g.node_count())) ++failures;
  };
  const int per_family = 110;
  for (int t = 0; t < per_family; ++t) {
    CoordinationGame g = random_pseudoforest_game(opt, rng);
    certified(g, solve_pseudoforest(g).profile);
  }
  for (int t = 0; t < per_family; ++t) {
    CoordinationGame g = random_color_forest_game(opt, rng);
    certified(g, solve_color_forest(g, random_profile(g, rng)).profile);
  }
  for (int t = 0; t < per_family; ++t) {
    CoordinationGame g = random_color_complete_game(opt, rng);
    certified(g, solve_color_complete(g).profile);
  }
  o.require(failures == 0, "uncertified outputs");
  o.detail << per_family << " instances per family, " << failures << " failures";
}

void ac9(Outcome& o) {
  auto rng = rng_for(1009);
  long steps[3] = {0, 0, 0};
  int violations = 0, unfinished = 0;
  const PotentialKind kinds[3] = {PotentialKind::pseudoforest_pair, PotentialKind::sorted_payoffs,
                                  PotentialKind::welfare};
  const SchedulerKind scheds[] = {SchedulerKind::random, SchedulerKind::first_found,
                                  SchedulerKind::max_welfare_gain,
                                  SchedulerKind::smallest_coalition};
  RandomGameOptions opt;
  opt.min_nodes = 6;
  opt.max_nodes = 12;
  opt.edge_probability = 0.5;
  for (int round = 0; steps[0] + steps[1] + steps[2] < 12000 ||
                      std::min({steps[0], steps[1], steps[2]}) < 1000;
       ++round) {
    for (int fam = 0; fam < 3; ++fam) {
      RandomGameOptions o2 = opt;
      CoordinationGame g = [&] {
        if (fam == 0) {
          o2.palette = 3;
          o2.max_set_size = 3;
          return random_pseudoforest_game(o2, rng);
        }
        if (fam == 1) {
          o2.palette = 4;
          o2.max_set_size = 3;
          return random_color_complete_game(o2, rng);
        }
        o2.palette = 2;
        o2.max_set_size = 2;
        return random_game(o2, rng);
      }();
      ImprovementOptions io;
      io.scheduler = {scheds[round % 4], static_cast<std::uint64_t>(round)};
      io.max_coalition = g.node_count();
      io.tracker = kinds[fam];
      ImprovementTrace tr = run_improvement_path(g, random_profile(g, rng), io);
      steps[fam] += static_cast<long>(tr.steps.size());
      if (tr.reason == Termination::potential_violation) ++violations;
      else if (tr.reason != Termination::equilibrium) ++unfinished;
      // Recompute the potential independently of the tracker.
      for (const auto& st : tr.steps) {
        PotentialValue before = potential(kinds[fam], g, st.from);
        PotentialValue after = potential(kinds[fam], g, st.deviation.apply(g, st.from));
        if (!before.strictly_less(after)) ++violations;
      }
    }
  }
  o.require(violations == 0, "potential violations");
  o.require(unfinished == 0, "paths that did not reach an equilibrium");
  o.detail << "steps pseudoforest=" << steps[0] << " color-complete=" << steps[1]
           << " two-color=" << steps[2] << ", " << violations << " violations";
}

void ac10(Outcome& o) {
  auto rng = rng_for(1010);
  int graphs = 0, disagreements = 0, with_clique = 0;
  for (; graphs < 120; ++graphs) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    Graph g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.5)(rng), rng);
    for (int k : {3, 4}) {
      Instance inst = clique_reduction(g, k);
      const bool eq = is_k_equilibrium(inst.game, *inst.profile, k).holds;
      const bool clique = oracle::has_clique(g, k);
      with_clique += clique;
      if (eq == clique) ++disagreements;
    }
  }
  o.require(disagreements == 0, "disagreements");
  o.detail << graphs << " graphs x k in {3,4}, " << with_clique << " with a clique, "
           << disagreements << " disagreements";
}

void ac11(Outcome& o) {
  auto rng = rng_for(1011);
  int instances = 0, missing = 0, unfinished = 0;
  long steps = 0;
  for (; instances < 250; ++instances) {
    RandomGameOptions opt;
    opt.max_nodes = 8;
    opt.palette = std::uniform_int_distribution<int>(2, 4)(rng);
    opt.max_set_size = std::uniform_int_distribution<int>(1, 3)(rng);
    opt.edge_probability = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    CoordinationGame g = random_game(opt, rng);
    if (ProfileSpace(g).size() > 2000) {
      --instances;
      continue;
    }
    bool found = false;
    oracle::for_each_profile(g, [&](const oracle::Colors& s) {
      if (!found && !oracle::any_deviation(g, s, 2)) found = true;
    });
    if (!found) ++missing;
    ImprovementOptions io;
    io.scheduler = {SchedulerKind::random, static_cast<std::uint64_t>(instances)};
    io.max_coalition = 2;
    ImprovementTrace tr = run_improvement_path(g, random_profile(g, rng), io);
    steps += static_cast<long>(tr.steps.size());
    if (tr.reason != Termination::equilibrium ||
        oracle::any_deviation(g, oracle::colors_of(tr.terminal), 2)) {
      ++unfinished;
    }
  }
  o.require(missing == 0, "instances without a 2-equilibrium");
  o.require(unfinished == 0, "paths not ending in a 2-equilibrium");
  o.detail << instances << " instances, " << missing << " without 2-equilibrium, " << steps
           << " steps, " << unfinished << " unfinished paths";
}

struct Criterion {
  const char* title;
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {"fig1 payoffs, 4- but not 5-equilibrium, transition value 4", ac1},
    {"octahedron has no 3-equilibrium, transition value 2", ac2},
    {"fig3 optimum 8, worst strong equilibrium 4, strong PoA 2", ac3},
    {"key-lemma clique tightness for l in {3,4,5}", ac4},
    {"kpoa-lower ratio equals 2(n-1)/(k-1)-1", ac5},
    {"k-PoA upper bound over random instances", ac6},
    {"color-forest verifier agrees with brute force", ac7},
    {"solver outputs are strong equilibria", ac8},
    {"potentials strictly increase along improvement paths", ac9},
    {"clique reduction: k-equilibrium iff no k-clique", ac10},
    {"2-equilibria exist and 2-improvement paths terminate", ac11},
};

bool run_one(int i) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kCriteria[i].run(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << i + 1 << " " << kCriteria[i].title
            << " -- " << o.detail.str() << " (" << seconds_since(t0) << " s)" << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const int total = static_cast<int>(std::size(kCriteria));
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    const int i = std::atoi(argv[2]);
    if (i < 1 || i > total) {
      std::cerr << "criterion must be 1.." << total << "\n";
      return 2;
    }
    return run_one(i - 1) ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: coordgame_acceptance [--criterion N]\n";
    return 2;
  }
  int failed = 0;
  for (int i = 0; i < total; ++i) failed += !run_one(i);
  return failed ? 1 : 0;
}
