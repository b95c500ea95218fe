#pragma once

// Brute-force reference implementations. They share no search code with the
// library: payoffs, profile enumeration and coalition enumeration are redone
// from the raw edge list.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coordgame/game.hpp"

namespace oracle {

using coordgame::ColorId;
using coordgame::CoordinationGame;
using coordgame::Edge;
using coordgame::Graph;
using coordgame::NodeId;

using Colors = std::vector<ColorId>;

int payoff(const CoordinationGame& g, const Colors& s, NodeId i);
long welfare(const CoordinationGame& g, const Colors& s);
Colors colors_of(const coordgame::JointStrategy& s);

// Calls f on every feasible profile, node 0 varying fastest.
void for_each_profile(const CoordinationGame& g, const std::function<void(const Colors&)>& f);
std::vector<Colors> all_profiles(const CoordinationGame& g);
long max_welfare(const CoordinationGame& g);

struct Move {
  std::vector<NodeId> coalition;
  Colors colors;
};

// Smallest coalition size of any profitable deviation (every member changes
// color, arbitrary colors, connectivity not required), searching sizes up to
// max_size. nullopt when none exists.
std::optional<int> min_deviation_size(const CoordinationGame& g, const Colors& s,
                                      int max_size);
std::optional<Move> any_deviation(const CoordinationGame& g, const Colors& s, int max_size);
bool is_profitable(const CoordinationGame& g, const Colors& s, const Move& m);

// Largest k such that s is a k-equilibrium (n for strong equilibria).
int stability(const CoordinationGame& g, const Colors& s);

bool has_clique(const Graph& g, int k);

// Minimum number of edges whose removal leaves g acyclic, by subset search.
int min_feedback_edges(const Graph& g);
bool acyclic(int n, const std::vector<Edge>& edges);

// Every simple cycle as its sorted edge list.
std::vector<std::vector<Edge>> simple_cycles(const Graph& g);

bool connected(const Graph& g, const std::vector<NodeId>& nodes);

}  // namespace oracle
