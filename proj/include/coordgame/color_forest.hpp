#pragma once

#include <optional>
#include <vector>

#include "coordgame/deviation.hpp"
#include "coordgame/game.hpp"

namespace coordgame {

// Rooted-forest dynamic program for simple deviations to one color x.
//
// The forest is G[V_x] restricted to the nodes that could move to x (x in A_v,
// s_v != x); it is a forest whenever G is a color forest. Each tree is rooted
// at its smallest node. For a node v:
//   D(v), U(v):   smallest connected coalition inside the subtree T_v that
//                 contains v and profits from all moving to x;
//   Dp(v), Up(v): same, but members may count on the parent also playing x.
// Entries equal to `infinity` mean no such coalition.
struct ColorForestTables {
  ColorId color = 0;
  int infinity = 0;                   // n + 1
  std::vector<char> in_forest;        // v may move to x
  std::vector<NodeId> parent;         // -1 for roots and nodes outside
  std::vector<std::vector<NodeId>> children;
  std::vector<int> on_color;          // neighbors already playing x
  std::vector<int> d;
  std::vector<int> d_parent;
  std::vector<std::vector<NodeId>> u;         // ascending
  std::vector<std::vector<NodeId>> u_parent;  // ascending
};

// Throws StructuralError if G[V_x] restricted as above is not a forest.
ColorForestTables color_forest_tables(const CoordinationGame& game,
                                      const JointStrategy& s, ColorId color);

struct ColorForestVerdict {
  bool holds = true;
  std::optional<DeviationReport> witness;  // simple, size <= k

  explicit operator bool() const { return holds; }
};

// Polynomial-time k-equilibrium test on color forests. Among witnesses the
// smallest coalition wins, then the lowest color, then the lowest root node.
// Throws StructuralError if the game is not on a color forest,
// InvalidArgument unless 1 <= k <= n.
ColorForestVerdict verify_color_forest(const CoordinationGame& game,
                                       const JointStrategy& s, int k);

struct ColorForestSolution {
  JointStrategy profile;
  int steps = 0;
  std::vector<long> welfare;  // SW along the path, start and terminal included
};

// Strong equilibrium on a color forest by repeatedly applying the verifier's
// witnesses (k = n) from `start` (default: every node's first color). SW
// rises with every step, so at most 2|E| steps are taken.
ColorForestSolution solve_color_forest(
    const CoordinationGame& game,
    const std::optional<JointStrategy>& start = std::nullopt);

}  // namespace coordgame
