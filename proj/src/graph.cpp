#include "coordgame/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "coordgame/error.hpp"
#include "union_find.hpp"

namespace coordgame {

Edge make_edge(NodeId a, NodeId b) {
  if (a == b) {
    throw InvalidArgument("self-loop on node " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int node_count, std::vector<Edge> edges) {
  if (node_count < 1) {
    throw InvalidArgument("graph needs at least one node");
  }
  adjacency_.resize(node_count);
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} has an unknown endpoint");
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw InvalidArgument("duplicate edge {" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<char> in(g.node_count(), 0);
  for (NodeId v : nodes) {
    if (!g.contains(v)) {
      throw InvalidArgument("unknown node id " + std::to_string(v));
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<char> in = membership(g, nodes);
  std::vector<NodeId> to_parent;
  std::vector<NodeId> to_child(g.node_count(), -1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (in[v]) {
      to_child[v] = static_cast<NodeId>(to_parent.size());
      to_parent.push_back(v);
    }
  }
  if (to_parent.empty()) {
    throw InvalidArgument("induced subgraph of an empty node set");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) edges.push_back({to_child[e.u], to_child[e.v]});
  }
  return {Graph(static_cast<int>(to_parent.size()), std::move(edges)),
          std::move(to_parent)};
}

std::vector<Edge> edges_within(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<char> in = membership(g, nodes);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) out.push_back(e);
  }
  return out;
}

std::vector<Edge> boundary_edges(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<char> in = membership(g, nodes);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) out.push_back(e);
  }
  return out;
}

Components connected_components(const Graph& g) {
  Components c;
  c.of_node.assign(g.node_count(), -1);
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (c.of_node[root] != -1) continue;
    const int id = c.count();
    c.members.emplace_back();
    std::deque<NodeId> queue{root};
    c.of_node[root] = id;
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      c.members[id].push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (c.of_node[w] == -1) {
          c.of_node[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(c.members[id].begin(), c.members[id].end());
  }
  return c;
}

int feedback_edge_number(const Graph& g) {
  return g.edge_count() - g.node_count() + connected_components(g).count();
}

std::vector<Edge> minimum_feedback_edge_set(const Graph& g) {
  detail::UnionFind forest(g.node_count());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!forest.unite(e.u, e.v)) out.push_back(e);
  }
  return out;
}

bool is_forest(const Graph& g) { return feedback_edge_number(g) == 0; }

bool is_pseudoforest(const Graph& g) {
  Components c = connected_components(g);
  std::vector<int> edges_in(c.count(), 0);
  for (const Edge& e : g.edges()) ++edges_in[c.of_node[e.u]];
  for (int i = 0; i < c.count(); ++i) {
    if (edges_in[i] > static_cast<int>(c.members[i].size())) return false;
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.node_count();
  std::optional<int> best;
  std::vector<int> dist(n);
  std::vector<NodeId> parent(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> out;

  struct Frame {
    NodeId v;
    NodeId parent;
    std::size_t next;
  };
  int clock = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> frames{{root, -1, 0}};
    disc[root] = low[root] = clock++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        NodeId w = nbrs[f.next++];
        if (disc[w] == -1) {
          edge_stack.push_back(make_edge(f.v, w));
          disc[w] = low[w] = clock++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back(make_edge(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const NodeId v = f.v;
      const NodeId p = f.parent;
      frames.pop_back();
      if (p == -1) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        const Edge split = make_edge(p, v);
        std::vector<Edge> comp;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          comp.push_back(e);
          if (e == split) break;
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int distinct_nodes(const std::vector<Edge>& edges) {
  std::vector<NodeId> nodes;
  for (const Edge& e : edges) {
    nodes.push_back(e.u);
    nodes.push_back(e.v);
  }
  std::sort(nodes.begin(), nodes.end());
  return static_cast<int>(std::unique(nodes.begin(), nodes.end()) -
                          nodes.begin());
}

}  // namespace

bool cycles_pairwise_edge_disjoint(const Graph& g) {
  for (const auto& comp : biconnected_components(g)) {
    if (comp.size() > 1 &&
        static_cast<int>(comp.size()) != distinct_nodes(comp)) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Edge>> disjoint_cycles(const Graph& g) {
  std::vector<std::vector<Edge>> cycles;
  for (auto& comp : biconnected_components(g)) {
    if (comp.size() == 1) continue;
    if (static_cast<int>(comp.size()) != distinct_nodes(comp)) {
      throw StructuralError("graph has two cycles sharing an edge");
    }
    cycles.push_back(std::move(comp));
  }
  return cycles;
}

std::vector<std::vector<NodeId>> pseudoforest_cycles(const Graph& g) {
  if (!is_pseudoforest(g)) {
    throw StructuralError("graph is not a pseudoforest");
  }
  const int n = g.node_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::deque<NodeId> leaves;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    NodeId v = leaves.front();
    leaves.pop_front();
    if (removed[v]) continue;
    removed[v] = 1;
    for (NodeId w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] <= 1) leaves.push_back(w);
    }
  }
  // What survives peeling is a disjoint union of cycles.
  std::vector<std::vector<NodeId>> cycles;
  std::vector<char> seen(n, 0);
  for (NodeId start = 0; start < n; ++start) {
    if (removed[start] || seen[start]) continue;
    std::vector<NodeId> cycle{start};
    seen[start] = 1;
    NodeId prev = -1;
    NodeId cur = start;
    while (true) {
      NodeId next = -1;
      for (NodeId w : g.neighbors(cur)) {
        if (!removed[w] && w != prev) {
          next = w;
          break;
        }
      }
      if (next == -1 || next == start) break;
      seen[next] = 1;
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::optional<Edge> private_edge(const Graph& g) {
  const auto cycles = disjoint_cycles(g);
  if (cycles.empty()) return std::nullopt;

  const int n = g.node_count();
  std::vector<int> cycle_count(n, 0);
  for (const auto& c : cycles) {
    for (NodeId v = 0; v < n; ++v) {
      bool on = std::any_of(c.begin(), c.end(),
                            [v](const Edge& e) { return e.has(v); });
      if (on) ++cycle_count[v];
    }
  }

  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto& cycle = cycles[ci];
    // Components of G - E(C).
    detail::UnionFind uf(n);
    for (const Edge& e : g.edges()) {
      if (!std::binary_search(cycle.begin(), cycle.end(), e)) uf.unite(e.u, e.v);
    }
    std::vector<char> reaches_other(n, 0);
    for (std::size_t cj = 0; cj < cycles.size(); ++cj) {
      if (cj == ci) continue;
      for (const Edge& e : cycles[cj]) {
        reaches_other[uf.find(e.u)] = 1;
        reaches_other[uf.find(e.v)] = 1;
      }
    }
    std::vector<NodeId> anchors;
    for (const Edge& e : cycle) {
      for (NodeId v : {e.u, e.v}) {
        if (reaches_other[uf.find(v)] &&
            std::find(anchors.begin(), anchors.end(), v) == anchors.end()) {
          anchors.push_back(v);
        }
      }
    }
    if (anchors.size() > 1) continue;
    for (const Edge& e : cycle) {
      if (anchors.empty() || !e.has(anchors.front())) {
        if (cycle_count[e.u] == 1 && cycle_count[e.v] == 1) return e;
      }
    }
  }
  throw StructuralError("no cycle with at most one anchor point");
}

}  // namespace coordgame
