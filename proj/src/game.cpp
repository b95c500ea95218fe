#include "coordgame/game.hpp"

#include <algorithm>
#include <limits>

#include "coordgame/error.hpp"

namespace coordgame {

CoordinationGame::CoordinationGame(Graph graph, ColorAssignment assignment)
    : graph_(std::move(graph)), assignment_(std::move(assignment)) {
  if (assignment_.node_count() != graph_.node_count()) {
    throw InvalidArgument("color assignment covers " +
                          std::to_string(assignment_.node_count()) +
                          " nodes but the graph has " +
                          std::to_string(graph_.node_count()));
  }
}

JointStrategy::JointStrategy(const CoordinationGame& game,
                             std::vector<ColorId> colors)
    : colors_(std::move(colors)) {
  check_feasible(game, *this);
}

JointStrategy JointStrategy::from_names(const CoordinationGame& game,
                                        const std::vector<std::string>& names) {
  std::vector<ColorId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) {
    if (!game.palette().contains(name)) {
      throw InfeasibleProfile("color '" + name + "' is not in the palette");
    }
    ids.push_back(game.palette().id(name));
  }
  return JointStrategy(game, std::move(ids));
}

JointStrategy JointStrategy::first_colors(const CoordinationGame& game) {
  std::vector<ColorId> ids;
  for (NodeId i = 0; i < game.node_count(); ++i) {
    ids.push_back(game.assignment().colors_of(i).front());
  }
  return JointStrategy(game, std::move(ids));
}

JointStrategy JointStrategy::with(const CoordinationGame& game,
                                  std::span<const NodeId> coalition,
                                  ColorId color) const {
  std::vector<ColorId> next = colors_;
  for (NodeId i : coalition) {
    if (i < 0 || i >= size()) throw InvalidArgument("unknown node in coalition");
    next[i] = color;
  }
  return JointStrategy(game, std::move(next));
}

JointStrategy JointStrategy::with(const CoordinationGame& game,
                                  std::span<const NodeId> coalition,
                                  std::span<const ColorId> colors) const {
  if (coalition.size() != colors.size()) {
    throw InvalidArgument("coalition and color lists differ in length");
  }
  std::vector<ColorId> next = colors_;
  for (std::size_t j = 0; j < coalition.size(); ++j) {
    if (coalition[j] < 0 || coalition[j] >= size()) {
      throw InvalidArgument("unknown node in coalition");
    }
    next[coalition[j]] = colors[j];
  }
  return JointStrategy(game, std::move(next));
}

std::size_t JointStrategyHash::operator()(const JointStrategy& s) const noexcept {
  // FNV-1a over the color ids.
  std::uint64_t h = 1469598103934665603ull;
  for (ColorId c : s.colors()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(c));
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

void check_feasible(const CoordinationGame& game, const JointStrategy& s) {
  if (s.size() != game.node_count()) {
    throw InfeasibleProfile("profile has " + std::to_string(s.size()) +
                            " entries for " + std::to_string(game.node_count()) +
                            " nodes");
  }
  for (NodeId i = 0; i < s.size(); ++i) {
    if (!game.assignment().allows(i, s[i])) {
      throw InfeasibleProfile("node " + std::to_string(i) +
                              " plays a color outside its color set");
    }
  }
}

namespace {

int payoff_unchecked(const Graph& g, const JointStrategy& s, NodeId i) {
  int count = 0;
  for (NodeId j : g.neighbors(i)) count += s[j] == s[i];
  return count;
}

}  // namespace

int payoff(const CoordinationGame& game, const JointStrategy& s, NodeId i) {
  check_feasible(game, s);
  if (!game.graph().contains(i)) {
    throw InvalidArgument("unknown node id " + std::to_string(i));
  }
  return payoff_unchecked(game.graph(), s, i);
}

std::vector<int> payoffs(const CoordinationGame& game, const JointStrategy& s) {
  check_feasible(game, s);
  std::vector<int> out(game.node_count());
  for (NodeId i = 0; i < game.node_count(); ++i) {
    out[i] = payoff_unchecked(game.graph(), s, i);
  }
  return out;
}

std::vector<Edge> unicolored_edges(const CoordinationGame& game,
                                   const JointStrategy& s) {
  check_feasible(game, s);
  std::vector<Edge> out;
  for (const Edge& e : game.graph().edges()) {
    if (s[e.u] == s[e.v]) out.push_back(e);
  }
  return out;
}

long social_welfare(const CoordinationGame& game, const JointStrategy& s) {
  check_feasible(game, s);
  long unicolored = 0;
  for (const Edge& e : game.graph().edges()) unicolored += s[e.u] == s[e.v];
  return 2 * unicolored;
}

long social_welfare_restricted(const CoordinationGame& game,
                               const JointStrategy& s,
                               std::span<const NodeId> coalition) {
  check_feasible(game, s);
  std::vector<char> in(game.node_count(), 0);
  for (NodeId i : coalition) {
    if (!game.graph().contains(i)) {
      throw InvalidArgument("unknown node id " + std::to_string(i));
    }
    in[i] = 1;
  }
  long total = 0;
  for (NodeId i = 0; i < game.node_count(); ++i) {
    if (in[i]) total += payoff_unchecked(game.graph(), s, i);
  }
  return total;
}

int unicolored_cycle_count(const CoordinationGame& game, const JointStrategy& s) {
  check_feasible(game, s);
  int count = 0;
  for (const auto& cycle : pseudoforest_cycles(game.graph())) {
    bool uni = std::all_of(cycle.begin(), cycle.end(),
                           [&](NodeId v) { return s[v] == s[cycle.front()]; });
    count += uni;
  }
  return count;
}

ProfileSpace::ProfileSpace(const CoordinationGame& game) : game_(&game) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (NodeId i = 0; i < game.node_count(); ++i) {
    auto radix = static_cast<std::uint64_t>(game.assignment().colors_of(i).size());
    size_ = size_ > kMax / radix ? kMax : size_ * radix;
  }
}

void ProfileSpace::require(std::uint64_t budget) const {
  if (!fits(budget)) {
    throw BudgetExceeded("strategy space has " + std::to_string(size_) +
                         " profiles, budget is " + std::to_string(budget));
  }
}

JointStrategy ProfileSpace::at(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("profile index out of range");
  std::vector<ColorId> colors(game_->node_count());
  for (NodeId i = 0; i < game_->node_count(); ++i) {
    auto set = game_->assignment().colors_of(i);
    colors[i] = set[index % set.size()];
    index /= set.size();
  }
  return JointStrategy(*game_, std::move(colors));
}

}  // namespace coordgame
