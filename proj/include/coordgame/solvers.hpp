#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coordgame/deviation.hpp"
#include "coordgame/game.hpp"

namespace coordgame {

// Welfare DP on one rooted tree: d_i(c) is the best SW inside the subtree T_i
// when i plays c, d_i(c) = sum over children j of max_{c'} d_j(c') + 2[c' = c].
class TreeDpTable {
 public:
  // `nodes` must induce a tree once `ignored` edges are dropped; throws
  // StructuralError otherwise.
  TreeDpTable(const CoordinationGame& game, std::span<const NodeId> nodes,
              NodeId root, std::span<const Edge> ignored = {});

  NodeId root() const { return root_; }
  NodeId parent(NodeId i) const { return parent_.at(i); }
  const std::vector<NodeId>& children(NodeId i) const { return children_.at(i); }

  // d_i(c); throws InvalidArgument if c is not in A_i.
  long value(NodeId i, ColorId c) const;
  // max_c d_root(c) and the smallest color attaining it.
  long best_value() const;
  ColorId best_root_color() const;

  // Writes an optimal coloring of the tree into `out` given the root's color
  // (children prefer the lowest color among optimal choices).
  void reconstruct(ColorId root_color, std::vector<ColorId>& out) const;

 private:
  const CoordinationGame* game_;
  NodeId root_;
  std::vector<NodeId> order_;  // parents before children
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::vector<long>> values_;  // aligned with colors_of(i)
};

struct TreeSolution {
  JointStrategy profile;
  long welfare = 0;
};

// Social optimum of a forest (hence a strong equilibrium there). Throws
// StructuralError if the graph has a cycle.
TreeSolution solve_tree(const CoordinationGame& game);

// Per-component record of the pseudotree step.
struct PseudotreeSolution {
  std::vector<NodeId> nodes;
  std::vector<NodeId> cycle;            // empty for tree components
  long best_with_edge_removed = 0;      // SW_1 (tree value for trees)
  std::optional<long> best_unicolored;  // SW_2; nullopt when R is empty
  std::vector<ColorId> common_colors;   // R
  bool cycle_unicolored = false;
  long welfare = 0;                     // max(SW_1, SW_2)
};

struct PseudoforestSolution {
  JointStrategy profile;
  long welfare = 0;
  std::vector<PseudotreeSolution> components;
};

// Social optimum that unicolors each component's cycle whenever some optimum
// does; a strong equilibrium. Throws StructuralError on non-pseudoforests.
PseudoforestSolution solve_pseudoforest(const CoordinationGame& game);

// One color restricted to one component of G[V_x]: a singleton resource.
struct VirtualResource {
  ColorId color = 0;
  std::vector<NodeId> nodes;  // the component, ascending
};

struct ColorCompleteSolution {
  JointStrategy profile;
  std::vector<VirtualResource> resources;
  // Order in which resources were filled, with the players placed on each.
  std::vector<std::pair<int, std::vector<NodeId>>> assignments;
};

// Greedy for singleton congestion games: repeatedly fill the resource with the
// most unassigned eligible players (ties: lowest resource id). Throws
// StructuralError unless the graph is color complete.
ColorCompleteSolution solve_color_complete(const CoordinationGame& game);

enum class SolveMethod {
  color_forest,
  pseudoforest,
  color_complete,
  two_color_dynamics,
  brute_force,
};

std::string method_name(SolveMethod m);
// "colorforest", "pseudoforest", "colorcomplete", "twocolor", "brute".
SolveMethod parse_method(std::string_view name);

struct AutoSolution {
  std::optional<JointStrategy> profile;  // nullopt iff no strong eq exists
  SolveMethod method = SolveMethod::brute_force;
};

// Dispatch: color forest, pseudoforest, color complete, at most two colors in
// use, then exhaustive search over profiles (throws BudgetExceeded when
// |S| exceeds the budget).
AutoSolution solve_auto(const CoordinationGame& game,
                        std::uint64_t budget = kDefaultBudget);

// Runs one specific method; the result is always a strong equilibrium or
// nullopt (brute force only) when none exists.
AutoSolution solve_with(const CoordinationGame& game, SolveMethod method,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace coordgame
