#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coordgame/game.hpp"

namespace testing_support {

// Game on nodes 0..n-1 with color sets given by name.
inline coordgame::CoordinationGame make_game(
    int n, std::initializer_list<std::pair<int, int>> edges,
    const std::vector<std::vector<std::string>>& sets) {
  std::vector<coordgame::Edge> es;
  for (auto [a, b] : edges) es.push_back(coordgame::make_edge(a, b));
  return coordgame::CoordinationGame(coordgame::Graph(n, std::move(es)),
                                     coordgame::ColorAssignment::from_names(sets));
}

inline coordgame::JointStrategy profile(const coordgame::CoordinationGame& g,
                                        const std::vector<std::string>& names) {
  return coordgame::JointStrategy::from_names(g, names);
}

inline std::mt19937_64 rng_for(std::uint64_t salt) {
  return std::mt19937_64(0x5eed'c0de'0000ULL + salt);
}

}  // namespace testing_support
