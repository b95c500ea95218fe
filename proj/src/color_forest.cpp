#include "coordgame/color_forest.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <tuple>

#include "coordgame/classify.hpp"
#include "coordgame/error.hpp"

namespace coordgame {

namespace {

// Picks the `need` children with the smallest Dp (ties by id). Returns false
// if fewer than `need` of them are finite.
bool cheapest_children(const ColorForestTables& t, NodeId v, int need,
                       std::vector<NodeId>& picked) {
  picked.clear();
  if (need <= 0) return true;
  std::vector<NodeId> finite;
  for (NodeId c : t.children[v]) {
    if (t.d_parent[c] < t.infinity) finite.push_back(c);
  }
  if (static_cast<int>(finite.size()) < need) return false;
  std::sort(finite.begin(), finite.end(), [&](NodeId a, NodeId b) {
    return std::tie(t.d_parent[a], a) < std::tie(t.d_parent[b], b);
  });
  picked.assign(finite.begin(), finite.begin() + need);
  return true;
}

std::vector<NodeId> gather(const ColorForestTables& t, NodeId v,
                           const std::vector<NodeId>& picked) {
  std::vector<NodeId> out{v};
  for (NodeId c : picked) {
    out.insert(out.end(), t.u_parent[c].begin(), t.u_parent[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_color_forest(const CoordinationGame& game) {
  if (!is_color_forest(game.graph(), game.assignment())) {
    throw StructuralError("game is not played on a color forest");
  }
}

}  // namespace

ColorForestTables color_forest_tables(const CoordinationGame& game,
                                      const JointStrategy& s, ColorId color) {
  check_feasible(game, s);
  const Graph& g = game.graph();
  const int n = g.node_count();
  ColorForestTables t;
  t.color = color;
  t.infinity = n + 1;
  t.in_forest.assign(n, 0);
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.on_color.assign(n, 0);
  t.d.assign(n, t.infinity);
  t.d_parent.assign(n, t.infinity);
  t.u.assign(n, {});
  t.u_parent.assign(n, {});

  std::vector<int> pay(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    t.in_forest[v] = game.assignment().allows(v, color) && s[v] != color;
    for (NodeId w : g.neighbors(v)) {
      t.on_color[v] += s[w] == color;
      pay[v] += s[w] == s[v];
    }
  }

  // BFS from the smallest node of each tree; `order` lists parents first.
  std::vector<NodeId> order;
  std::vector<char> seen(n, 0);
  for (NodeId root = 0; root < n; ++root) {
    if (!t.in_forest[root] || seen[root]) continue;
    seen[root] = 1;
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (!t.in_forest[w] || w == t.parent[v]) continue;
        if (seen[w]) {
          throw StructuralError("G[V_x] contains a cycle for color " +
                                game.palette().name(color));
        }
        seen[w] = 1;
        t.parent[w] = v;
        t.children[v].push_back(w);
        queue.push_back(w);
      }
    }
  }

  std::vector<NodeId> picked;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    // Moving to x, v earns its coalition children plus neighbors already on x
    // (plus the parent, for the parent-assisted variant).
    const int need_alone = pay[v] - t.on_color[v] + 1;
    if (cheapest_children(t, v, need_alone, picked)) {
      t.u[v] = gather(t, v, picked);
      t.d[v] = static_cast<int>(t.u[v].size());
    }
    if (t.parent[v] != -1 && cheapest_children(t, v, need_alone - 1, picked)) {
      t.u_parent[v] = gather(t, v, picked);
      t.d_parent[v] = static_cast<int>(t.u_parent[v].size());
    }
  }
  return t;
}

ColorForestVerdict verify_color_forest(const CoordinationGame& game,
                                       const JointStrategy& s, int k) {
  require_color_forest(game);
  check_feasible(game, s);
  if (k < 1 || k > game.node_count()) {
    throw InvalidArgument("k must lie in 1.." + std::to_string(game.node_count()));
  }
  std::optional<std::tuple<int, ColorId, NodeId>> best;
  std::vector<NodeId> coalition;
  for (ColorId x = 0; x < game.palette().size(); ++x) {
    ColorForestTables t = color_forest_tables(game, s, x);
    for (NodeId v = 0; v < game.node_count(); ++v) {
      if (!t.in_forest[v] || t.d[v] > k) continue;
      auto key = std::make_tuple(t.d[v], x, v);
      if (!best || key < *best) {
        best = key;
        coalition = t.u[v];
      }
    }
  }
  ColorForestVerdict verdict;
  if (!best) return verdict;
  verdict.holds = false;
  verdict.witness =
      describe_deviation(game, s, coalition, std::get<1>(*best));
  if (!verdict.witness->profitable() || verdict.witness->size() > k ||
      !verdict.witness->simple) {
    throw std::logic_error("color-forest witness failed its replay check");
  }
  return verdict;
}

ColorForestSolution solve_color_forest(const CoordinationGame& game,
                                       const std::optional<JointStrategy>& start) {
  require_color_forest(game);
  JointStrategy s = start ? *start : JointStrategy::first_colors(game);
  check_feasible(game, s);
  const int bound = 2 * game.graph().edge_count();
  ColorForestSolution out{s, 0, {social_welfare(game, s)}};
  while (true) {
    ColorForestVerdict v = verify_color_forest(game, s, game.node_count());
    if (v.holds) break;
    JointStrategy next = v.witness->apply(game, s);
    const long sw = social_welfare(game, next);
    if (sw <= out.welfare.back()) {
      throw std::logic_error("social welfare did not increase on a color forest");
    }
    ++out.steps;
    if (out.steps > bound) {
      throw std::logic_error("color-forest solver exceeded 2|E| improvements");
    }
    out.welfare.push_back(sw);
    s = std::move(next);
  }
  out.profile = s;
  return out;
}

}  // namespace coordgame
