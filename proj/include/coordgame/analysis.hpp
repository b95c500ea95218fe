#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coordgame/deviation.hpp"
#include "coordgame/game.hpp"

namespace coordgame {

// Nonnegative ratio num/den; x/0 is infinite (0/0 included).
struct Ratio {
  long num = 0;
  long den = 1;

  bool infinite() const { return den == 0; }
  double value() const;
  // "2", "7/3", "inf".
  std::string str() const;

  friend bool operator==(const Ratio& a, const Ratio& b);
  friend bool operator<(const Ratio& a, const Ratio& b);
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
};

struct Optimum {
  JointStrategy profile;
  long welfare = 0;
};

// Exact maximum SW. Pseudoforests use the DP; everything else enumerates S
// (BudgetExceeded when |S| > budget).
Optimum social_optimum(const CoordinationGame& game,
                       std::uint64_t budget = kDefaultBudget);

// Per-k aggregate over all k-equilibria of a full profile scan.
struct LevelStats {
  std::uint64_t count = 0;
  long min_welfare = 0;
  long max_welfare = 0;
  std::uint64_t min_index = 0;  // lowest profile index attaining the min
  std::uint64_t max_index = 0;
};

struct ProfileScan {
  std::uint64_t profiles = 0;
  long optimum = 0;
  std::uint64_t optimum_index = 0;
  int max_level = 0;  // largest stability level found
  std::uint64_t max_level_index = 0;
  std::vector<LevelStats> by_k;  // by_k[k-1]
};

// Stability level and SW of every profile in S. Work is split over `threads`
// workers (0: hardware concurrency); merging is deterministic.
ProfileScan scan_profiles(const CoordinationGame& game,
                          std::uint64_t budget = kDefaultBudget,
                          unsigned threads = 0);

struct InefficiencyRow {
  int k = 0;
  std::uint64_t equilibria = 0;
  std::optional<JointStrategy> worst;  // min SW k-equilibrium
  std::optional<JointStrategy> best;   // max SW k-equilibrium
  long min_welfare = 0;
  long max_welfare = 0;
  Ratio poa;                   // SW(opt) / min SW; inf if no k-equilibrium
  Ratio pos;                   // SW(opt) / max SW
  std::optional<Ratio> upper;  // 2(n-1)/(k-1), k >= 2
  std::optional<Ratio> lower;  // 2(n-1)/(k-1) - 1, k >= 2
  bool violation = false;      // poa above the upper bound (or above 2 at k = n)
};

struct InefficiencyReport {
  JointStrategy optimum;
  long optimum_welfare = 0;
  std::uint64_t profiles = 0;
  bool complete = false;
  std::vector<InefficiencyRow> rows;
};

// k-PoA and k-PoS for each requested k by exhaustive enumeration. Throws
// InvalidArgument for k outside 1..n, BudgetExceeded when |S| > budget.
InefficiencyReport inefficiency(const CoordinationGame& game,
                                std::span<const int> ks,
                                std::uint64_t budget = kDefaultBudget);
InefficiencyReport inefficiency(const CoordinationGame& game,
                                const ProfileScan& scan, std::span<const int> ks);

struct TransitionReport {
  int value = 0;               // largest k with a k-equilibrium
  bool strong_exists = false;  // value == n
  JointStrategy witness;       // a value-equilibrium
  std::uint64_t profiles = 0;
};

TransitionReport transition_value(const CoordinationGame& game,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace coordgame
