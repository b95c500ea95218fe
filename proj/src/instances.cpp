#include "coordgame/instances.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "coordgame/classify.hpp"
#include "coordgame/error.hpp"

namespace coordgame {

NodeId Instance::node_of(std::int64_t label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) {
    throw InvalidArgument("unknown node " + std::to_string(label));
  }
  return static_cast<NodeId>(it - labels.begin());
}

Instance make_instance(std::vector<std::int64_t> labels,
                       const std::vector<std::vector<std::string>>& colors,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                       std::string name, std::string provenance) {
  if (labels.size() != colors.size()) {
    throw InvalidArgument("one color set per node is required");
  }
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<std::int64_t> sorted;
  std::vector<std::vector<std::string>> sets;
  for (std::size_t i : order) {
    if (!sorted.empty() && sorted.back() == labels[i]) {
      throw InvalidArgument("duplicate node " + std::to_string(labels[i]));
    }
    sorted.push_back(labels[i]);
    sets.push_back(colors[i]);
  }
  auto dense = [&](std::int64_t label) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
    if (it == sorted.end() || *it != label) {
      throw InvalidArgument("unknown node " + std::to_string(label));
    }
    return static_cast<NodeId>(it - sorted.begin());
  };
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back(make_edge(dense(a), dense(b)));
  Graph g(static_cast<int>(sorted.size()), std::move(es));
  return Instance{CoordinationGame(std::move(g), ColorAssignment::from_names(sets)),
                  std::move(sorted),
                  std::nullopt,
                  std::nullopt,
                  std::move(name),
                  std::move(provenance)};
}

namespace {

std::vector<std::int64_t> one_to(int n) {
  std::vector<std::int64_t> out(n);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

std::string label_color(const char* prefix, std::int64_t label) {
  return prefix + std::to_string(label);
}

}  // namespace

Instance fig1() {
  std::vector<std::vector<std::string>> sets = {
      {"a", "c"}, {"a", "b"}, {"a", "b"}, {"b", "c"},
      {"b", "c"}, {"c", "a"}, {"c", "a"}, {"b", "a"}};
  std::vector<std::pair<std::int64_t, std::int64_t>> edges = {
      {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 1}, {4, 8},
      {5, 1}, {5, 8}, {6, 4}, {6, 5}, {7, 4}, {7, 5}, {8, 6}, {8, 7}, {1, 8}};
  Instance inst = make_instance(one_to(8), sets, edges, "fig1",
                                "eight-player instance with transition value 4");
  inst.profile = JointStrategy::from_names(
      inst.game, {"a", "b", "b", "b", "b", "a", "a", "a"});
  inst.deviation = ReferenceDeviation{{0, 3, 4, 5, 6}, inst.game.palette().id("c")};
  return inst;
}

Instance weakly_acyclic_fig1() {
  Instance base = fig1();
  std::vector<std::vector<std::string>> sets;
  for (NodeId v = 0; v < base.game.node_count(); ++v) {
    std::vector<std::string> names;
    for (ColorId c : base.game.assignment().colors_of(v)) {
      names.push_back(base.game.palette().name(c));
    }
    names.push_back("d");
    sets.push_back(std::move(names));
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (const Edge& e : base.game.graph().edges()) {
    edges.emplace_back(base.labels[e.u], base.labels[e.v]);
  }
  Instance inst = make_instance(base.labels, sets, edges, "weakly-acyclic-fig1",
                                "fig1 with a common color d");
  inst.profile = JointStrategy::from_names(
      inst.game, std::vector<std::string>(inst.game.node_count(), "d"));
  return inst;
}

Instance octahedron() {
  std::vector<std::vector<std::string>> sets = {
      {"1", "3"}, {"2", "4"}, {"1", "4"}, {"1", "2"}, {"2", "3"},
      {"3", "4"}, {"1"},      {"2"},      {"3"},      {"4"}};
  std::vector<std::pair<std::int64_t, std::int64_t>> edges = {
      {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
      {3, 4}, {4, 5}, {5, 6}, {6, 3}, {7, 3}, {8, 4}, {9, 5}, {10, 6}};
  return make_instance(one_to(10), sets, edges, "octahedron",
                       "octahedron skeleton with four dummy players, no 3-equilibrium");
}

Instance fig3(int copies) {
  if (copies < 1) throw InvalidArgument("fig3 needs at least one copy");
  std::vector<std::vector<std::string>> sets;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::string> profile;
  for (int c = 0; c < copies; ++c) {
    const std::int64_t o = 4L * c;
    sets.insert(sets.end(), {{"a", "b"}, {"a", "b"}, {"a", "b"}, {"a"}});
    edges.insert(edges.end(), {{o + 1, o + 2}, {o + 2, o + 3}, {o + 3, o + 4}, {o + 4, o + 1}});
    profile.insert(profile.end(), {"b", "b", "b", "a"});
  }
  std::string name = copies == 1 ? "fig3" : "fig3x" + std::to_string(copies);
  Instance inst = make_instance(one_to(4 * copies), sets, edges, name,
                                "4-cycle with strong price of anarchy 2");
  inst.profile = JointStrategy::from_names(inst.game, profile);
  return inst;
}

Instance keylemma_clique(int l) {
  if (l < 3) throw InvalidArgument("keylemma-clique needs l >= 3");
  std::vector<std::vector<std::string>> sets;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::string> profile;
  for (int i = 1; i <= l; ++i) {
    sets.push_back({label_color("c", i), "x"});
    profile.push_back(label_color("c", i));
    for (int j = i + 1; j <= l; ++j) edges.emplace_back(i, j);
  }
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l - 2; ++j) {
      const std::int64_t p = l + static_cast<std::int64_t>(i - 1) * (l - 2) + j;
      sets.push_back({label_color("c", i)});
      profile.push_back(label_color("c", i));
      edges.emplace_back(i, p);
    }
  }
  const int n = l + l * (l - 2);
  Instance inst = make_instance(one_to(n), sets, edges,
                                "keylemma-clique-" + std::to_string(l),
                                "clique coalition attaining the feedback-edge bound");
  inst.profile = JointStrategy::from_names(inst.game, profile);
  std::vector<NodeId> k(l);
  std::iota(k.begin(), k.end(), 0);
  inst.deviation = ReferenceDeviation{k, inst.game.palette().id("x")};
  return inst;
}

Instance kpoa_lower(int n, int k) {
  if (k < 2 || k > n) throw InvalidArgument("kpoa-lower needs 2 <= k <= n");
  std::vector<std::vector<std::string>> sets;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<std::string> profile;
  for (int v = 1; v <= n; ++v) {
    const bool first = v <= k;
    sets.push_back({first ? "a" : "b", "c"});
    profile.push_back(first ? "a" : "b");
  }
  for (int u = 1; u <= k; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  Instance inst = make_instance(one_to(n), sets, edges,
                                "kpoa-lower-" + std::to_string(n) + "-" + std::to_string(k),
                                "k-price of anarchy lower-bound family");
  inst.profile = JointStrategy::from_names(inst.game, profile);
  return inst;
}

Instance poa_unbounded(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<std::string>> sets;
  std::vector<std::string> profile;
  for (int v = 1; v <= n; ++v) {
    sets.push_back({label_color("x", v), "c"});
    profile.push_back(label_color("x", v));
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u + 1, e.v + 1);
  Instance inst = make_instance(one_to(n), sets, edges, "poa-unbounded",
                                "private colors plus one common color");
  inst.profile = JointStrategy::from_names(inst.game, profile);
  return inst;
}

Instance clique_reduction(const Graph& g, int k) {
  if (k < 2) throw InvalidArgument("clique-reduction needs k >= 2");
  const int n = g.node_count();
  std::vector<std::vector<std::string>> sets;
  std::vector<std::string> profile;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int v = 1; v <= n; ++v) {
    sets.push_back({label_color("x", v), "y"});
    profile.push_back(label_color("x", v));
  }
  for (const Edge& e : g.edges()) edges.emplace_back(e.u + 1, e.v + 1);
  for (int v = 1; v <= n; ++v) {
    for (int i = 1; i <= k - 2; ++i) {
      const std::int64_t p = n + static_cast<std::int64_t>(v - 1) * (k - 2) + i;
      sets.push_back({label_color("x", v)});
      profile.push_back(label_color("x", v));
      edges.emplace_back(v, p);
    }
  }
  Instance inst = make_instance(one_to(n + n * (k - 2)), sets, edges,
                                "clique-reduction", "k-clique to k-equilibrium reduction");
  inst.profile = JointStrategy::from_names(inst.game, profile);
  return inst;
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

int require_int(std::string_view s, std::string_view what) {
  auto v = parse_int(s);
  if (!v) throw InvalidArgument("bad " + std::string(what) + " '" + std::string(s) + "'");
  return *v;
}

bool starts_with(std::string_view s, std::string_view p) {
  return s.substr(0, p.size()) == p;
}

}  // namespace

Graph graph_from_spec(std::string_view spec) {
  struct Family {
    std::string_view prefix;
    int min;
  };
  for (auto [prefix, min] : {Family{"path", 1}, Family{"cycle", 3},
                             Family{"complete", 1}, Family{"star", 1}}) {
    if (!starts_with(spec, prefix)) continue;
    const int n = require_int(spec.substr(prefix.size()), "node count");
    if (n < min) {
      throw InvalidArgument(std::string(prefix) + " needs at least " +
                            std::to_string(min) + " nodes");
    }
    std::vector<Edge> edges;
    if (prefix == "path" || prefix == "cycle") {
      for (int i = 0; i + 1 < n; ++i) edges.push_back(make_edge(i, i + 1));
      if (prefix == "cycle") edges.push_back(make_edge(0, n - 1));
    } else if (prefix == "complete") {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back(make_edge(i, j));
    } else {
      for (int i = 1; i < n; ++i) edges.push_back(make_edge(0, i));
    }
    return Graph(n, std::move(edges));
  }
  throw InvalidArgument("unknown graph '" + std::string(spec) + "'");
}

std::optional<Instance> builtin_instance(std::string_view name) {
  auto named = [&](Instance inst) {
    inst.name = std::string(name);
    return std::optional<Instance>(std::move(inst));
  };
  if (name == "fig1") return fig1();
  if (name == "fig3") return fig3(1);
  if (name == "octahedron") return octahedron();
  if (name == "weakly-acyclic-fig1") return weakly_acyclic_fig1();
  if (starts_with(name, "fig3x")) {
    return named(fig3(require_int(name.substr(5), "copy count")));
  }
  if (starts_with(name, "keylemma-clique-")) {
    return named(keylemma_clique(require_int(name.substr(16), "clique size")));
  }
  if (starts_with(name, "kpoa-lower-")) {
    std::string_view rest = name.substr(11);
    auto dash = rest.find('-');
    if (dash == std::string_view::npos) throw InvalidArgument("kpoa-lower-<n>-<k> expected");
    return named(kpoa_lower(require_int(rest.substr(0, dash), "n"),
                            require_int(rest.substr(dash + 1), "k")));
  }
  if (starts_with(name, "poa-unbounded-")) {
    return named(poa_unbounded(graph_from_spec(name.substr(14))));
  }
  if (starts_with(name, "clique-reduction-")) {
    std::string_view rest = name.substr(17);
    auto dash = rest.rfind('-');
    if (dash == std::string_view::npos) {
      throw InvalidArgument("clique-reduction-<graph>-<k> expected");
    }
    return named(clique_reduction(graph_from_spec(rest.substr(0, dash)),
                                  require_int(rest.substr(dash + 1), "k")));
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"fig1",
          "fig3",
          "fig3x2",
          "octahedron",
          "weakly-acyclic-fig1",
          "keylemma-clique-3",
          "keylemma-clique-4",
          "keylemma-clique-5",
          "kpoa-lower-6-3",
          "kpoa-lower-8-4",
          "kpoa-lower-10-5",
          "poa-unbounded-cycle4",
          "clique-reduction-complete4-3"};
}

// ---- random families ----

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back(make_edge(i, j));
  return Graph(n, std::move(edges));
}

Graph random_forest(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution attach(0.85);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    if (!attach(rng)) continue;
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back(make_edge(pick(rng), v));
  }
  return Graph(n, std::move(edges));
}

Graph random_pseudoforest(int n, double p, std::mt19937_64& rng) {
  Graph forest = random_forest(n, rng);
  std::vector<Edge> edges(forest.edges().begin(), forest.edges().end());
  std::bernoulli_distribution coin(p);
  for (const auto& comp : connected_components(forest).members) {
    if (comp.size() < 3 || !coin(rng)) continue;
    std::vector<Edge> missing;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!forest.has_edge(comp[i], comp[j])) missing.push_back(make_edge(comp[i], comp[j]));
    if (missing.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
    edges.push_back(missing[pick(rng)]);
  }
  return Graph(n, std::move(edges));
}

namespace {

std::vector<std::string> palette_names(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

ColorAssignment random_sets(int n, const RandomGameOptions& opt, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, std::min(opt.max_set_size, opt.palette));
  std::vector<ColorId> all(opt.palette);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<ColorId>> sets;
  for (int v = 0; v < n; ++v) {
    std::shuffle(all.begin(), all.end(), rng);
    sets.emplace_back(all.begin(), all.begin() + size(rng));
  }
  return ColorAssignment(Palette(palette_names(opt.palette)), std::move(sets));
}

int random_node_count(const RandomGameOptions& opt, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(opt.min_nodes, opt.max_nodes)(rng);
}

}  // namespace

CoordinationGame random_game(const RandomGameOptions& opt, std::mt19937_64& rng) {
  const int n = random_node_count(opt, rng);
  Graph g = random_graph(n, opt.edge_probability, rng);
  return CoordinationGame(std::move(g), random_sets(n, opt, rng));
}

CoordinationGame random_color_forest_game(const RandomGameOptions& opt,
                                          std::mt19937_64& rng) {
  CoordinationGame game = random_game(opt, rng);
  const int n = game.node_count();
  std::vector<Edge> edges(game.graph().edges().begin(), game.graph().edges().end());
  std::vector<std::vector<ColorId>> sets;
  for (NodeId v = 0; v < n; ++v) {
    auto c = game.assignment().colors_of(v);
    sets.emplace_back(c.begin(), c.end());
  }
  const Palette palette = game.palette();
  std::bernoulli_distribution coin(0.5);
  while (true) {
    Graph g(n, edges);
    ColorAssignment a(palette, sets);
    if (is_color_forest(g, a)) return CoordinationGame(std::move(g), std::move(a));
    // Pick a color whose slice has a cycle, then thin it.
    for (ColorId x = 0; x < palette.size(); ++x) {
      std::vector<NodeId> slice = a.slice(x);
      if (slice.empty() || is_forest(induced_subgraph(g, slice).graph)) continue;
      std::vector<NodeId> droppable;
      for (NodeId v : slice)
        if (sets[v].size() > 1) droppable.push_back(v);
      if (!droppable.empty() && coin(rng)) {
        NodeId v = droppable[std::uniform_int_distribution<std::size_t>(
            0, droppable.size() - 1)(rng)];
        std::erase(sets[v], x);
      } else {
        std::vector<Edge> inside = edges_within(g, slice);
        Edge e = inside[std::uniform_int_distribution<std::size_t>(0, inside.size() - 1)(rng)];
        std::erase(edges, e);
      }
      break;
    }
  }
}

CoordinationGame random_pseudoforest_game(const RandomGameOptions& opt,
                                          std::mt19937_64& rng) {
  const int n = random_node_count(opt, rng);
  Graph g = random_pseudoforest(n, 0.8, rng);
  return CoordinationGame(std::move(g), random_sets(n, opt, rng));
}

CoordinationGame random_color_complete_game(const RandomGameOptions& opt,
                                            std::mt19937_64& rng) {
  CoordinationGame game = random_game(opt, rng);
  const int n = game.node_count();
  const ColorAssignment& a = game.assignment();
  std::set<Edge> edges(game.graph().edges().begin(), game.graph().edges().end());
  bool changed = true;
  while (changed) {
    changed = false;
    Graph g(n, {edges.begin(), edges.end()});
    for (ColorId x = 0; x < a.palette().size(); ++x) {
      std::vector<NodeId> slice = a.slice(x);
      if (slice.empty()) continue;
      InducedSubgraph sub = induced_subgraph(g, slice);
      for (const auto& comp : connected_components(sub.graph).members) {
        for (std::size_t i = 0; i < comp.size(); ++i)
          for (std::size_t j = i + 1; j < comp.size(); ++j)
            changed |= edges.insert(make_edge(sub.to_parent[comp[i]],
                                              sub.to_parent[comp[j]])).second;
      }
    }
  }
  return CoordinationGame(Graph(n, {edges.begin(), edges.end()}), a);
}

JointStrategy random_profile(const CoordinationGame& game, std::mt19937_64& rng) {
  std::vector<ColorId> colors;
  for (NodeId v = 0; v < game.node_count(); ++v) {
    auto set = game.assignment().colors_of(v);
    colors.push_back(set[std::uniform_int_distribution<std::size_t>(0, set.size() - 1)(rng)]);
  }
  return JointStrategy(game, std::move(colors));
}

}  // namespace coordgame
