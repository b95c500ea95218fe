#include "coordgame/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_set>

#include "coordgame/error.hpp"

namespace coordgame {

Scheduler Scheduler::parse(std::string_view name, std::uint64_t seed) {
  Scheduler s;
  s.seed = seed;
  if (name == "first-found") {
    s.kind = SchedulerKind::first_found;
  } else if (name == "smallest-coalition") {
    s.kind = SchedulerKind::smallest_coalition;
  } else if (name == "max-dsw" || name == "max-delta-sw") {
    s.kind = SchedulerKind::max_welfare_gain;
  } else if (name == "random") {
    s.kind = SchedulerKind::random;
  } else {
    throw InvalidArgument("unknown scheduler '" + std::string(name) + "'");
  }
  return s;
}

std::string Scheduler::name() const {
  switch (kind) {
    case SchedulerKind::first_found: return "first-found";
    case SchedulerKind::smallest_coalition: return "smallest-coalition";
    case SchedulerKind::max_welfare_gain: return "max-dsw";
    case SchedulerKind::random: return "random";
  }
  return "?";
}

std::string potential_name(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::welfare: return "welfare";
    case PotentialKind::pseudoforest_pair: return "pair";
    case PotentialKind::sorted_payoffs: return "sorted";
  }
  return "?";
}

PotentialKind parse_potential(std::string_view name) {
  if (name == "welfare") return PotentialKind::welfare;
  if (name == "pair") return PotentialKind::pseudoforest_pair;
  if (name == "sorted") return PotentialKind::sorted_payoffs;
  throw InvalidArgument("unknown potential '" + std::string(name) + "'");
}

bool PotentialValue::strictly_less(const PotentialValue& other) const {
  if (kind != other.kind) {
    throw InvalidArgument("comparing potentials of different kinds");
  }
  return std::lexicographical_compare(key.begin(), key.end(), other.key.begin(),
                                      other.key.end());
}

std::string PotentialValue::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(key[i]);
  }
  return out + ")";
}

PotentialValue potential(PotentialKind kind, const CoordinationGame& game,
                         const JointStrategy& s) {
  PotentialValue v;
  v.kind = kind;
  switch (kind) {
    case PotentialKind::welfare:
      v.key = {social_welfare(game, s)};
      break;
    case PotentialKind::pseudoforest_pair:
      v.key = {social_welfare(game, s), unicolored_cycle_count(game, s)};
      break;
    case PotentialKind::sorted_payoffs: {
      std::vector<int> p = payoffs(game, s);
      std::sort(p.begin(), p.end(), std::greater<>());
      v.key.assign(p.begin(), p.end());
      break;
    }
  }
  return v;
}

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::equilibrium: return "equilibrium";
    case Termination::step_limit: return "step-limit";
    case Termination::profile_cycle: return "profile-cycle";
    case Termination::potential_violation: return "potential-violation";
  }
  return "?";
}

namespace {

std::optional<DeviationReport> pick(const CoordinationGame& game,
                                    const JointStrategy& s,
                                    const ImprovementOptions& opt,
                                    std::mt19937_64& rng) {
  switch (opt.scheduler.kind) {
    case SchedulerKind::first_found:
      return first_profitable_deviation(game, s, opt.max_coalition,
                                        opt.simple_only, opt.budget);
    case SchedulerKind::smallest_coalition:
      return find_profitable_deviation(game, s, opt.max_coalition,
                                       opt.simple_only, opt.budget);
    case SchedulerKind::max_welfare_gain: {
      auto all = profitable_deviations(game, s, opt.max_coalition,
                                       opt.simple_only, opt.budget);
      if (all.empty()) return std::nullopt;
      auto best = std::max_element(
          all.begin(), all.end(),
          [](const auto& a, const auto& b) { return a.delta_sw < b.delta_sw; });
      // max_element keeps the first of equal maxima.
      return *best;
    }
    case SchedulerKind::random: {
      auto all = profitable_deviations(game, s, opt.max_coalition,
                                       opt.simple_only, opt.budget);
      if (all.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> dist(0, all.size() - 1);
      return all[dist(rng)];
    }
  }
  return std::nullopt;
}

}  // namespace

ImprovementTrace run_improvement_path(const CoordinationGame& game,
                                      const JointStrategy& s0,
                                      const ImprovementOptions& options) {
  check_feasible(game, s0);
  if (options.max_coalition < 1) {
    throw InvalidArgument("max_coalition must be at least 1");
  }
  std::mt19937_64 rng(options.scheduler.seed);
  ImprovementTrace trace{{}, s0, Termination::equilibrium, options.scheduler.seed,
                         std::nullopt};
  std::unordered_set<JointStrategy, JointStrategyHash> visited{s0};
  std::optional<PotentialValue> current;
  if (options.tracker) current = potential(*options.tracker, game, s0);

  JointStrategy s = s0;
  while (true) {
    auto dev = pick(game, s, options, rng);
    if (!dev) {
      trace.reason = Termination::equilibrium;
      break;
    }
    if (trace.steps.size() >= options.step_limit) {
      trace.reason = Termination::step_limit;
      break;
    }
    JointStrategy next = dev->apply(game, s);
    ImprovementStep step{s, std::move(*dev), current, std::nullopt};
    if (options.tracker) {
      step.potential_after = potential(*options.tracker, game, next);
      current = step.potential_after;
    }
    trace.steps.push_back(std::move(step));
    const ImprovementStep& last = trace.steps.back();
    s = std::move(next);
    if (options.tracker && !last.potential_before->strictly_less(*last.potential_after)) {
      trace.reason = Termination::potential_violation;
      trace.violation_step = trace.steps.size() - 1;
      break;
    }
    if (!visited.insert(s).second) {
      trace.reason = Termination::profile_cycle;
      break;
    }
  }
  trace.terminal = s;
  return trace;
}

}  // namespace coordgame
