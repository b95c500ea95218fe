#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "coordgame/game.hpp"

namespace coordgame {

// A coalition moving to one color, as given by a construction.
struct ReferenceDeviation {
  std::vector<NodeId> coalition;
  ColorId color = 0;
};

// A game plus the external node labels it was written with. Label i belongs
// to dense node i; labels are distinct and ascending.
struct Instance {
  CoordinationGame game;
  std::vector<std::int64_t> labels;
  std::optional<JointStrategy> profile;
  std::optional<ReferenceDeviation> deviation;
  std::string name;
  std::string provenance;

  // Dense id of an external label; throws InvalidArgument if unknown.
  NodeId node_of(std::int64_t label) const;
  std::int64_t label_of(NodeId v) const { return labels.at(v); }
};

// Builds an instance from labelled nodes and edges (labels need not be dense).
Instance make_instance(std::vector<std::int64_t> labels,
                       const std::vector<std::vector<std::string>>& colors,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                       std::string name = {}, std::string provenance = {});

// Eight players, colors a/b/c; profile = the underlined strategies.
Instance fig1();
// fig1 with a common color d added to every set; profile = all d.
Instance weakly_acyclic_fig1();
// Ten players 1..10, colors "1".."4", 16 edges.
Instance octahedron();
// 4-cycle with sets {a,b},{a,b},{a,b},{a}; `copies` disjoint copies.
// profile = (b,b,b,a) in every copy.
Instance fig3(int copies = 1);
// l-clique K with sets {c_i, x}, each member with l-2 pendants fixed to c_i.
// profile = all c_i, deviation = K -> x. Requires l >= 3.
Instance keylemma_clique(int l);
// Complete-to-V1 graph with |V1| = k, |V2| = n-k; V1: {a,c}, V2: {b,c}.
// profile = V1 -> a, V2 -> b. Requires 2 <= k <= n.
Instance kpoa_lower(int n, int k);
// Sets {x_i, c} on g; profile = all private colors.
Instance poa_unbounded(const Graph& g);
// Each v gets {x_v, y} and k-2 pendants fixed to x_v; profile = all x_v.
// Requires k >= 2.
Instance clique_reduction(const Graph& g, int k);

// "path<N>", "cycle<N>", "complete<N>", "star<N>" (N nodes).
Graph graph_from_spec(std::string_view spec);

// Compact names: fig1, fig3, fig3x<l>, octahedron, weakly-acyclic-fig1,
// keylemma-clique-<l>, kpoa-lower-<n>-<k>, poa-unbounded-<graph>,
// clique-reduction-<graph>-<k>. Returns nullopt if the name is not built in;
// throws InvalidArgument on bad parameters.
std::optional<Instance> builtin_instance(std::string_view name);

// One concrete name per family (several for the parameterized ones).
std::vector<std::string> builtin_names();

// Random families for property checks.
struct RandomGameOptions {
  int min_nodes = 2;
  int max_nodes = 8;
  int palette = 3;          // colors "a", "b", ...
  int max_set_size = 2;
  double edge_probability = 0.4;
};

Graph random_graph(int n, double p, std::mt19937_64& rng);
Graph random_forest(int n, std::mt19937_64& rng);
// Every component has at most one cycle; cycles appear with probability ~p.
Graph random_pseudoforest(int n, double p, std::mt19937_64& rng);

CoordinationGame random_game(const RandomGameOptions& opt, std::mt19937_64& rng);
// Random game thinned (dropping colors, then edges) until G is a color forest.
CoordinationGame random_color_forest_game(const RandomGameOptions& opt,
                                          std::mt19937_64& rng);
// Random sets on a random pseudoforest.
CoordinationGame random_pseudoforest_game(const RandomGameOptions& opt,
                                          std::mt19937_64& rng);
// Random game closed under edges (inside each component of every G[V_x]) until
// it is color complete.
CoordinationGame random_color_complete_game(const RandomGameOptions& opt,
                                            std::mt19937_64& rng);
JointStrategy random_profile(const CoordinationGame& game, std::mt19937_64& rng);

}  // namespace coordgame
