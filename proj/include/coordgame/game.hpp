#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coordgame/colors.hpp"
#include "coordgame/graph.hpp"

namespace coordgame {

// The strategic game G(G, A): players are the nodes, strategies are the color
// sets, payoff is the number of same-colored neighbors.
class CoordinationGame {
 public:
  // Throws InvalidArgument unless the assignment covers exactly the graph's
  // nodes.
  CoordinationGame(Graph graph, ColorAssignment assignment);

  const Graph& graph() const { return graph_; }
  const ColorAssignment& assignment() const { return assignment_; }
  const Palette& palette() const { return assignment_.palette(); }
  int node_count() const { return graph_.node_count(); }

  friend bool operator==(const CoordinationGame&,
                         const CoordinationGame&) = default;

 private:
  Graph graph_;
  ColorAssignment assignment_;
};

// One color per node, each inside that node's color set.
class JointStrategy {
 public:
  // Throws InfeasibleProfile if a color lies outside A_i or the length is
  // wrong.
  JointStrategy(const CoordinationGame& game, std::vector<ColorId> colors);

  // Colors given by name.
  static JointStrategy from_names(const CoordinationGame& game,
                                  const std::vector<std::string>& names);

  // Every node plays the smallest color of its set.
  static JointStrategy first_colors(const CoordinationGame& game);

  int size() const { return static_cast<int>(colors_.size()); }
  ColorId operator[](NodeId i) const { return colors_[i]; }
  std::span<const ColorId> colors() const { return colors_; }

  // (x_K, s_{-K}) and (s'_K, s_{-K}); validated against the game.
  JointStrategy with(const CoordinationGame& game,
                     std::span<const NodeId> coalition, ColorId color) const;
  JointStrategy with(const CoordinationGame& game,
                     std::span<const NodeId> coalition,
                     std::span<const ColorId> colors) const;

  friend bool operator==(const JointStrategy&, const JointStrategy&) = default;

 private:
  std::vector<ColorId> colors_;
};

struct JointStrategyHash {
  std::size_t operator()(const JointStrategy& s) const noexcept;
};

// Throws InfeasibleProfile if s does not fit the game.
void check_feasible(const CoordinationGame& game, const JointStrategy& s);

// p_i(s) = |{ j in N_i : s_i = s_j }|.
int payoff(const CoordinationGame& game, const JointStrategy& s, NodeId i);
std::vector<int> payoffs(const CoordinationGame& game, const JointStrategy& s);

// E_s^+.
std::vector<Edge> unicolored_edges(const CoordinationGame& game,
                                   const JointStrategy& s);

// SW(s) = sum of payoffs = 2|E_s^+|.
long social_welfare(const CoordinationGame& game, const JointStrategy& s);

// SW_K(s) = sum over K of p_i(s).
long social_welfare_restricted(const CoordinationGame& game,
                               const JointStrategy& s,
                               std::span<const NodeId> coalition);

// Number of components whose unique cycle is unicolored. Pseudoforests only;
// throws StructuralError otherwise.
int unicolored_cycle_count(const CoordinationGame& game, const JointStrategy& s);

// Mixed-radix indexing of the joint strategy space S = A_1 x ... x A_n.
// Node 0 is the least significant digit.
class ProfileSpace {
 public:
  explicit ProfileSpace(const CoordinationGame& game);

  // |S|, saturated at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  bool fits(std::uint64_t budget) const { return size_ <= budget; }
  // Throws BudgetExceeded if |S| > budget.
  void require(std::uint64_t budget) const;

  JointStrategy at(std::uint64_t index) const;

 private:
  const CoordinationGame* game_;
  std::uint64_t size_ = 1;
};

}  // namespace coordgame
