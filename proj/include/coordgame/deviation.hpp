#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coordgame/game.hpp"

namespace coordgame {

// Default cap on candidate moves examined by exhaustive searches.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Brute-force search works on node bitmasks.
inline constexpr int kMaxSearchNodes = 64;

// A coalitional deviation s -> s' where every member changes color.
struct DeviationReport {
  std::vector<NodeId> coalition;   // K, ascending
  std::vector<ColorId> new_colors; // s'_i for each member, aligned with K
  std::vector<int> payoff_before;  // p_i(s), aligned with K
  std::vector<int> payoff_after;   // p_i(s'), aligned with K
  long delta_sw = 0;               // SW(s') - SW(s)
  bool simple = false;             // G[K] connected and one target color

  int size() const { return static_cast<int>(coalition.size()); }
  bool profitable() const;
  JointStrategy apply(const CoordinationGame& game, const JointStrategy& s) const;
};

// Evaluates the deviation of `coalition` to `new_colors`. Throws
// InvalidArgument if some member keeps its color or the coalition has
// duplicates, InfeasibleProfile if a new color is not allowed.
DeviationReport describe_deviation(const CoordinationGame& game,
                                   const JointStrategy& s,
                                   std::span<const NodeId> coalition,
                                   std::span<const ColorId> new_colors);
DeviationReport describe_deviation(const CoordinationGame& game,
                                   const JointStrategy& s,
                                   std::span<const NodeId> coalition,
                                   ColorId color);

// Exhaustive search for a profitable deviation by at most `max_coalition`
// players. Coalitions are tried by increasing size; within a size the
// lexicographically smallest coalition wins (then the smallest color). With
// simple_only, only connected coalitions moving to one common color are
// tried, which is complete for existence. Without it, the search refuses with
// BudgetExceeded when sum_{j<=k} C(n,j) * maxcolors^j exceeds the budget;
// simple searches count examined coalitions against the budget instead.
std::optional<DeviationReport> find_profitable_deviation(
    const CoordinationGame& game, const JointStrategy& s, int max_coalition,
    bool simple_only = true, std::uint64_t budget = kDefaultBudget);

struct EquilibriumVerdict {
  bool holds = true;
  std::optional<DeviationReport> witness;  // set when !holds

  explicit operator bool() const { return holds; }
};

// Is s a k-equilibrium? Throws InvalidArgument unless 1 <= k <= n.
EquilibriumVerdict is_k_equilibrium(const CoordinationGame& game,
                                    const JointStrategy& s, int k,
                                    std::uint64_t budget = kDefaultBudget);

// Largest k such that s is a k-equilibrium: n for strong equilibria,
// otherwise the smallest profitable coalition size minus one.
int stability_level(const CoordinationGame& game, const JointStrategy& s,
                    std::uint64_t budget = kDefaultBudget);

// Every profitable deviation by at most `max_coalition` players, in search
// order (size, then coalition, then colors).
std::vector<DeviationReport> profitable_deviations(
    const CoordinationGame& game, const JointStrategy& s, int max_coalition,
    bool simple_only = true, std::uint64_t budget = kDefaultBudget);

// The first profitable deviation met by a depth-first walk over coalitions
// (not ordered by size). Cheaper than find_profitable_deviation when any
// witness will do.
std::optional<DeviationReport> first_profitable_deviation(
    const CoordinationGame& game, const JointStrategy& s, int max_coalition,
    bool simple_only = true, std::uint64_t budget = kDefaultBudget);

// Both sides of the welfare identity and the feedback-edge-set bound for a
// profitable deviation s -> s' by K.
struct KeyLemmaAudit {
  long delta_sw = 0;            // SW(s') - SW(s)
  long delta_sw_coalition = 0;  // SW_K(s') - SW_K(s)
  int inside_before = 0;        // |E_s^+ cap E[K]|
  int inside_after = 0;         // |E_s'^+ cap E[K]|
  long identity_rhs = 0;        // 2(dSW_K - inside_after + inside_before)
  bool identity_holds = false;  // delta_sw == identity_rhs

  std::vector<Edge> feedback_set;  // minimum feedback edge set F of G[K]
  int tau = 0;                     // |F|
  int feedback_before = 0;         // |F cap E_s^+|
  int feedback_after = 0;          // |F cap E_s'^+|
  long feedback_bound = 0;         // 2(feedback_before - feedback_after)
  bool feedback_bound_holds = false;  // delta_sw > feedback_bound
  bool tau_bound_holds = false;       // delta_sw > -2 tau

  bool all_hold() const {
    return identity_holds && feedback_bound_holds && tau_bound_holds;
  }
};

// Throws InvalidArgument if the report does not describe a profitable
// deviation from s.
KeyLemmaAudit audit_key_lemma(const CoordinationGame& game,
                              const JointStrategy& s,
                              const DeviationReport& report);

struct UniformityReport {
  bool uniform = true;
  bool color_complete = false;  // sufficient structural condition
  // First violation found: a profile and a unicolored edge whose endpoints
  // have different payoffs.
  std::optional<JointStrategy> counterexample;
  std::optional<Edge> edge;
};

// Checks "s_i = s_j implies p_i(s) = p_j(s)" over every profile and edge.
// Throws BudgetExceeded if the strategy space exceeds the budget.
UniformityReport is_uniform(const CoordinationGame& game,
                            std::uint64_t budget = kDefaultBudget);

}  // namespace coordgame
