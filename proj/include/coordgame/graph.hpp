#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace coordgame {

using NodeId = std::int32_t;

// Unordered node pair, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  bool has(NodeId x) const { return u == x || v == x; }
  NodeId other(NodeId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Builds the canonical (smaller endpoint first) edge. Throws InvalidArgument on
// a self-loop.
Edge make_edge(NodeId a, NodeId b);

// Undirected simple graph on nodes 0..n-1. Immutable once built.
class Graph {
 public:
  // Throws InvalidArgument on n < 1, out-of-range endpoints, self-loops or
  // duplicate edges.
  Graph(int node_count, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Sorted canonical edge list.
  std::span<const Edge> edges() const { return edges_; }
  // Sorted neighbor list N_i.
  std::span<const NodeId> neighbors(NodeId i) const { return adjacency_[i]; }
  int degree(NodeId i) const { return static_cast<int>(adjacency_[i].size()); }

  bool contains(NodeId i) const { return i >= 0 && i < node_count(); }
  bool has_edge(NodeId a, NodeId b) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

// G[K] relabeled to 0..|K|-1 (in increasing id order of K), with the map back
// to the parent graph's ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

// E[K]: edges with both endpoints in K.
std::vector<Edge> edges_within(const Graph& g, std::span<const NodeId> nodes);

// delta(K): edges with exactly one endpoint in K.
std::vector<Edge> boundary_edges(const Graph& g, std::span<const NodeId> nodes);

struct Components {
  std::vector<int> of_node;                  // component index per node
  std::vector<std::vector<NodeId>> members;  // sorted, ordered by smallest id

  int count() const { return static_cast<int>(members.size()); }
};

Components connected_components(const Graph& g);

// Size of a minimum feedback edge set: |E| - |V| + #components.
int feedback_edge_number(const Graph& g);

// A feedback edge set of minimum size (the complement of a BFS spanning
// forest).
std::vector<Edge> minimum_feedback_edge_set(const Graph& g);

bool is_forest(const Graph& g);

// Every component has at most one cycle.
bool is_pseudoforest(const Graph& g);

// Shortest cycle length; nullopt on forests.
std::optional<int> girth(const Graph& g);

// Edge sets of the biconnected components (bridges form singleton
// components). Each inner vector is sorted.
std::vector<std::vector<Edge>> biconnected_components(const Graph& g);

// No edge lies on two distinct cycles, i.e. every biconnected component that
// contains a cycle is itself a simple cycle.
bool cycles_pairwise_edge_disjoint(const Graph& g);

// The cycles of a graph whose cycles are pairwise edge-disjoint, each given
// as its sorted edge set. Throws StructuralError otherwise.
std::vector<std::vector<Edge>> disjoint_cycles(const Graph& g);

// The unique cycle of each cyclic component of a pseudoforest, as a node
// sequence i_1..i_k where consecutive nodes (and i_k, i_1) are adjacent. The
// sequence starts at the cycle's smallest node. Throws StructuralError if g is
// not a pseudoforest.
std::vector<std::vector<NodeId>> pseudoforest_cycles(const Graph& g);

// An edge that lies on a cycle and is node-disjoint from every other cycle;
// nullopt on forests. Requires pairwise edge-disjoint cycles (throws
// StructuralError otherwise). Picks the edge by the anchor-point argument: a
// cycle with at most one anchor point, and on it the smallest edge avoiding
// that anchor.
std::optional<Edge> private_edge(const Graph& g);

}  // namespace coordgame
