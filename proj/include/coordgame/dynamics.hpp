#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coordgame/deviation.hpp"
#include "coordgame/game.hpp"

namespace coordgame {

// How the next profitable deviation is picked.
enum class SchedulerKind {
  first_found,         // first witness of a depth-first coalition walk
  smallest_coalition,  // canonical minimum-size witness
  max_welfare_gain,    // largest SW(s') - SW(s); ties go to search order
  random,              // uniform among all profitable deviations
};

struct Scheduler {
  SchedulerKind kind = SchedulerKind::first_found;
  std::uint64_t seed = 0;

  // "first-found", "smallest-coalition", "max-dsw", "random".
  static Scheduler parse(std::string_view name, std::uint64_t seed = 0);
  std::string name() const;
};

// Generalized ordinal c-potentials, compared lexicographically.
enum class PotentialKind {
  welfare,           // SW(s)
  pseudoforest_pair, // (SW(s), #unicolored cycles); pseudoforests only
  sorted_payoffs,    // payoff vector sorted in non-increasing order
};

std::string potential_name(PotentialKind kind);
// "welfare", "pair", "sorted".
PotentialKind parse_potential(std::string_view name);

struct PotentialValue {
  PotentialKind kind = PotentialKind::welfare;
  std::vector<long> key;

  // Throws InvalidArgument when the kinds differ.
  bool strictly_less(const PotentialValue& other) const;
  std::string str() const;

  friend bool operator==(const PotentialValue&, const PotentialValue&) = default;
};

PotentialValue potential(PotentialKind kind, const CoordinationGame& game,
                         const JointStrategy& s);

struct ImprovementOptions {
  Scheduler scheduler;
  int max_coalition = 1;
  std::size_t step_limit = 10'000;
  std::optional<PotentialKind> tracker;
  // Restrict moves to simple deviations (connected, one target color).
  bool simple_only = true;
  std::uint64_t budget = kDefaultBudget;
};

struct ImprovementStep {
  JointStrategy from;
  DeviationReport deviation;
  std::optional<PotentialValue> potential_before;
  std::optional<PotentialValue> potential_after;
};

enum class Termination {
  equilibrium,          // no profitable deviation of the allowed size left
  step_limit,
  profile_cycle,        // a profile repeated
  potential_violation,  // the tracker failed to increase strictly
};

std::string termination_name(Termination t);

struct ImprovementTrace {
  std::vector<ImprovementStep> steps;
  JointStrategy terminal;
  Termination reason = Termination::equilibrium;
  std::uint64_t seed = 0;
  // Index into steps of the step that broke the tracker.
  std::optional<std::size_t> violation_step;
};

// Follows profitable deviations from s0 until none of size <= max_coalition
// exists, the step limit is hit, a profile repeats, or the attached potential
// fails to increase strictly.
ImprovementTrace run_improvement_path(const CoordinationGame& game,
                                      const JointStrategy& s0,
                                      const ImprovementOptions& options);

}  // namespace coordgame
