#include "coordgame/solvers.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "coordgame/classify.hpp"
#include "coordgame/color_forest.hpp"
#include "coordgame/dynamics.hpp"
#include "coordgame/error.hpp"

namespace coordgame {

TreeDpTable::TreeDpTable(const CoordinationGame& game,
                         std::span<const NodeId> nodes, NodeId root,
                         std::span<const Edge> ignored)
    : game_(&game), root_(root) {
  const Graph& g = game.graph();
  const int n = g.node_count();
  std::vector<char> in(n, 0);
  for (NodeId v : nodes) {
    if (!g.contains(v)) throw InvalidArgument("unknown node id " + std::to_string(v));
    in[v] = 1;
  }
  if (!g.contains(root) || !in[root]) {
    throw InvalidArgument("tree root must belong to the node set");
  }
  auto skipped = [&](NodeId a, NodeId b) {
    Edge e = make_edge(a, b);
    return std::find(ignored.begin(), ignored.end(), e) != ignored.end();
  };

  parent_.assign(n, -1);
  children_.assign(n, {});
  values_.assign(n, {});
  std::vector<char> seen(n, 0);
  std::deque<NodeId> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    order_.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (!in[w] || w == parent_[v] || skipped(v, w)) continue;
      if (seen[w]) throw StructuralError("tree DP input contains a cycle");
      seen[w] = 1;
      parent_[w] = v;
      children_[v].push_back(w);
      queue.push_back(w);
    }
  }
  if (order_.size() != nodes.size()) {
    throw StructuralError("tree DP input is not connected");
  }

  const auto& a = game.assignment();
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const NodeId i = *it;
    auto colors = a.colors_of(i);
    values_[i].assign(colors.size(), 0);
    for (std::size_t ci = 0; ci < colors.size(); ++ci) {
      long total = 0;
      for (NodeId j : children_[i]) {
        auto child_colors = a.colors_of(j);
        long best = -1;
        for (std::size_t cj = 0; cj < child_colors.size(); ++cj) {
          long v = values_[j][cj] + (child_colors[cj] == colors[ci] ? 2 : 0);
          best = std::max(best, v);
        }
        total += best;
      }
      values_[i][ci] = total;
    }
  }
}

long TreeDpTable::value(NodeId i, ColorId c) const {
  auto colors = game_->assignment().colors_of(i);
  auto it = std::lower_bound(colors.begin(), colors.end(), c);
  if (it == colors.end() || *it != c || values_.at(i).empty()) {
    throw InvalidArgument("no DP value for this node and color");
  }
  return values_[i][it - colors.begin()];
}

long TreeDpTable::best_value() const {
  return *std::max_element(values_[root_].begin(), values_[root_].end());
}

ColorId TreeDpTable::best_root_color() const {
  auto it = std::max_element(values_[root_].begin(), values_[root_].end());
  return game_->assignment().colors_of(root_)[it - values_[root_].begin()];
}

void TreeDpTable::reconstruct(ColorId root_color, std::vector<ColorId>& out) const {
  const auto& a = game_->assignment();
  if (!a.allows(root_, root_color)) {
    throw InfeasibleProfile("root color outside the root's color set");
  }
  out.at(root_) = root_color;
  for (NodeId i : order_) {
    for (NodeId j : children_[i]) {
      auto colors = a.colors_of(j);
      std::size_t best = 0;
      long best_value = -1;
      for (std::size_t cj = 0; cj < colors.size(); ++cj) {
        long v = values_[j][cj] + (colors[cj] == out[i] ? 2 : 0);
        if (v > best_value) {
          best_value = v;
          best = cj;
        }
      }
      out[j] = colors[best];
    }
  }
}

TreeSolution solve_tree(const CoordinationGame& game) {
  if (!is_forest(game.graph())) {
    throw StructuralError("solve_tree needs a forest");
  }
  std::vector<ColorId> colors(game.node_count(), 0);
  long welfare = 0;
  for (const auto& comp : connected_components(game.graph()).members) {
    TreeDpTable table(game, comp, comp.front());
    table.reconstruct(table.best_root_color(), colors);
    welfare += table.best_value();
  }
  TreeSolution out{JointStrategy(game, std::move(colors)), welfare};
  if (social_welfare(game, out.profile) != welfare) {
    throw std::logic_error("tree DP value disagrees with its reconstruction");
  }
  return out;
}

namespace {

// Nodes reachable from `start` inside `nodes` without using `cut` edges.
std::vector<NodeId> reach(const Graph& g, const std::vector<char>& in,
                          NodeId start, const std::vector<Edge>& cut) {
  std::vector<NodeId> out;
  std::vector<char> seen(g.node_count(), 0);
  std::deque<NodeId> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    out.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (!in[w] || seen[w]) continue;
      if (std::find(cut.begin(), cut.end(), make_edge(v, w)) != cut.end()) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PseudotreeSolution solve_pseudotree(const CoordinationGame& game,
                                    const std::vector<NodeId>& nodes,
                                    const std::vector<NodeId>& cycle,
                                    std::vector<ColorId>& colors) {
  const Graph& g = game.graph();
  const auto& a = game.assignment();
  PseudotreeSolution sol;
  sol.nodes = nodes;
  sol.cycle = cycle;

  if (cycle.empty()) {
    TreeDpTable table(game, nodes, nodes.front());
    table.reconstruct(table.best_root_color(), colors);
    sol.best_with_edge_removed = sol.welfare = table.best_value();
    return sol;
  }

  const int k = static_cast<int>(cycle.size());
  std::vector<Edge> cycle_edges;
  for (int j = 0; j < k; ++j) cycle_edges.push_back(make_edge(cycle[j], cycle[(j + 1) % k]));

  // SW_1: best tree value over single cycle-edge deletions.
  std::optional<TreeDpTable> best_cut;
  for (const Edge& e : cycle_edges) {
    const Edge removed[] = {e};
    TreeDpTable table(game, nodes, nodes.front(), removed);
    if (!best_cut || table.best_value() > best_cut->best_value()) {
      best_cut.emplace(std::move(table));
    }
  }
  sol.best_with_edge_removed = best_cut->best_value();

  // SW_2: cycle unicolored in a common color c, hanging trees solved alone.
  std::vector<char> in(g.node_count(), 0);
  for (NodeId v : nodes) in[v] = 1;
  std::vector<TreeDpTable> hanging;
  for (NodeId root : cycle) {
    hanging.emplace_back(game, reach(g, in, root, cycle_edges), root, cycle_edges);
  }
  for (ColorId c : a.colors_of(cycle.front())) {
    bool common = std::all_of(cycle.begin(), cycle.end(),
                              [&](NodeId v) { return a.allows(v, c); });
    if (common) sol.common_colors.push_back(c);
  }
  std::optional<ColorId> best_color;
  for (ColorId c : sol.common_colors) {
    long total = 2L * k;
    for (const auto& t : hanging) total += t.value(t.root(), c);
    if (!sol.best_unicolored || total > *sol.best_unicolored) {
      sol.best_unicolored = total;
      best_color = c;
    }
  }

  if (sol.best_unicolored && *sol.best_unicolored >= sol.best_with_edge_removed) {
    for (const auto& t : hanging) t.reconstruct(*best_color, colors);
    sol.welfare = *sol.best_unicolored;
  } else {
    best_cut->reconstruct(best_cut->best_root_color(), colors);
    sol.welfare = sol.best_with_edge_removed;
  }
  sol.cycle_unicolored = std::all_of(cycle.begin(), cycle.end(), [&](NodeId v) {
    return colors[v] == colors[cycle.front()];
  });
  return sol;
}

}  // namespace

PseudoforestSolution solve_pseudoforest(const CoordinationGame& game) {
  const auto cycles = pseudoforest_cycles(game.graph());
  const Components comps = connected_components(game.graph());
  std::vector<std::vector<NodeId>> cycle_of(comps.count());
  for (const auto& c : cycles) cycle_of[comps.of_node[c.front()]] = c;

  std::vector<ColorId> colors(game.node_count(), 0);
  std::vector<PseudotreeSolution> parts;
  long welfare = 0;
  for (int ci = 0; ci < comps.count(); ++ci) {
    parts.push_back(solve_pseudotree(game, comps.members[ci], cycle_of[ci], colors));
    welfare += parts.back().welfare;
  }
  PseudoforestSolution out{JointStrategy(game, std::move(colors)), welfare,
                           std::move(parts)};
  if (social_welfare(game, out.profile) != welfare) {
    throw std::logic_error("pseudoforest DP value disagrees with its reconstruction");
  }
  return out;
}

ColorCompleteSolution solve_color_complete(const CoordinationGame& game) {
  const Graph& g = game.graph();
  const auto& a = game.assignment();
  if (!is_color_complete(g, a)) {
    throw StructuralError("game is not played on a color complete graph");
  }
  std::vector<VirtualResource> resources;
  for (ColorId x = 0; x < game.palette().size(); ++x) {
    std::vector<NodeId> slice = a.slice(x);
    if (slice.empty()) continue;
    InducedSubgraph sub = induced_subgraph(g, slice);
    for (const auto& comp : connected_components(sub.graph).members) {
      VirtualResource r{x, {}};
      for (NodeId v : comp) r.nodes.push_back(sub.to_parent[v]);
      resources.push_back(std::move(r));
    }
  }

  const int n = game.node_count();
  std::vector<ColorId> colors(n, -1);
  int unassigned = n;
  std::vector<std::pair<int, std::vector<NodeId>>> assignments;
  while (unassigned > 0) {
    int best = -1;
    int best_count = 0;
    for (int r = 0; r < static_cast<int>(resources.size()); ++r) {
      int count = static_cast<int>(std::count_if(
          resources[r].nodes.begin(), resources[r].nodes.end(),
          [&](NodeId v) { return colors[v] == -1; }));
      if (count > best_count) {
        best_count = count;
        best = r;
      }
    }
    std::vector<NodeId> placed;
    for (NodeId v : resources[best].nodes) {
      if (colors[v] == -1) {
        colors[v] = resources[best].color;
        placed.push_back(v);
      }
    }
    unassigned -= best_count;
    assignments.emplace_back(best, std::move(placed));
  }
  return {JointStrategy(game, std::move(colors)), std::move(resources),
          std::move(assignments)};
}

std::string method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::color_forest: return "colorforest";
    case SolveMethod::pseudoforest: return "pseudoforest";
    case SolveMethod::color_complete: return "colorcomplete";
    case SolveMethod::two_color_dynamics: return "twocolor";
    case SolveMethod::brute_force: return "brute";
  }
  return "?";
}

SolveMethod parse_method(std::string_view name) {
  if (name == "colorforest") return SolveMethod::color_forest;
  if (name == "pseudoforest") return SolveMethod::pseudoforest;
  if (name == "colorcomplete") return SolveMethod::color_complete;
  if (name == "twocolor") return SolveMethod::two_color_dynamics;
  if (name == "brute") return SolveMethod::brute_force;
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

AutoSolution solve_with(const CoordinationGame& game, SolveMethod method,
                        std::uint64_t budget) {
  AutoSolution out;
  out.method = method;
  switch (method) {
    case SolveMethod::color_forest:
      out.profile = solve_color_forest(game).profile;
      break;
    case SolveMethod::pseudoforest:
      out.profile = solve_pseudoforest(game).profile;
      break;
    case SolveMethod::color_complete:
      out.profile = solve_color_complete(game).profile;
      break;
    case SolveMethod::two_color_dynamics: {
      if (game.assignment().colors_in_use() > 2) {
        throw StructuralError("more than two colors are in use");
      }
      ImprovementOptions opt;
      opt.scheduler = Scheduler{SchedulerKind::first_found, 0};
      opt.max_coalition = game.node_count();
      opt.step_limit = static_cast<std::size_t>(game.graph().edge_count()) + 1;
      opt.tracker = PotentialKind::welfare;
      opt.budget = budget;
      ImprovementTrace trace =
          run_improvement_path(game, JointStrategy::first_colors(game), opt);
      if (trace.reason != Termination::equilibrium) {
        throw std::logic_error("two-color dynamics did not reach an equilibrium: " +
                               termination_name(trace.reason));
      }
      out.profile = trace.terminal;
      break;
    }
    case SolveMethod::brute_force: {
      ProfileSpace space(game);
      space.require(budget);
      for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
        JointStrategy s = space.at(idx);
        if (stability_level(game, s, budget) == game.node_count()) {
          out.profile = std::move(s);
          break;
        }
      }
      break;
    }
  }
  return out;
}

AutoSolution solve_auto(const CoordinationGame& game, std::uint64_t budget) {
  const Graph& g = game.graph();
  const auto& a = game.assignment();
  if (is_color_forest(g, a)) return solve_with(game, SolveMethod::color_forest, budget);
  if (is_pseudoforest(g)) return solve_with(game, SolveMethod::pseudoforest, budget);
  if (is_color_complete(g, a)) {
    return solve_with(game, SolveMethod::color_complete, budget);
  }
  if (a.colors_in_use() <= 2) {
    return solve_with(game, SolveMethod::two_color_dynamics, budget);
  }
  return solve_with(game, SolveMethod::brute_force, budget);
}

}  // namespace coordgame
