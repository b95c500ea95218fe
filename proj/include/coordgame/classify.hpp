#pragma once

#include <optional>

#include "coordgame/colors.hpp"
#include "coordgame/graph.hpp"

namespace coordgame {

// Structural facts used to pick a solver.
struct GraphClass {
  bool is_forest = false;
  bool is_pseudoforest = false;
  bool cycles_pairwise_edge_disjoint = false;
  std::optional<int> girth;  // nullopt = infinite (forest)
  // G[V_x] is a forest for every color x.
  bool is_color_forest = false;
  // Every component of every G[V_x] is a clique.
  bool is_color_complete = false;
};

// Throws InvalidArgument if the assignment does not cover the graph's nodes.
GraphClass classify(const Graph& g, const ColorAssignment& a);

bool is_color_forest(const Graph& g, const ColorAssignment& a);
bool is_color_complete(const Graph& g, const ColorAssignment& a);

}  // namespace coordgame
