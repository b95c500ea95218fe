#include "coordgame/classify.hpp"

#include <string>

#include "coordgame/error.hpp"
#include "union_find.hpp"

namespace coordgame {

namespace {

void require_cover(const Graph& g, const ColorAssignment& a) {
  if (a.node_count() != g.node_count()) {
    throw InvalidArgument("color assignment covers " +
                          std::to_string(a.node_count()) +
                          " nodes but the graph has " +
                          std::to_string(g.node_count()));
  }
}

// Per color: node count, edge count and component sizes of G[V_x].
struct SliceShape {
  std::vector<int> component_nodes;
  std::vector<int> component_edges;
};

SliceShape slice_shape(const Graph& g, const ColorAssignment& a, ColorId x) {
  detail::UnionFind uf(g.node_count());
  for (const Edge& e : g.edges()) {
    if (a.allows(e.u, x) && a.allows(e.v, x)) uf.unite(e.u, e.v);
  }
  std::vector<int> index(g.node_count(), -1);
  SliceShape shape;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!a.allows(v, x)) continue;
    int root = uf.find(v);
    if (index[root] == -1) {
      index[root] = static_cast<int>(shape.component_nodes.size());
      shape.component_nodes.push_back(0);
      shape.component_edges.push_back(0);
    }
    ++shape.component_nodes[index[root]];
  }
  for (const Edge& e : g.edges()) {
    if (a.allows(e.u, x) && a.allows(e.v, x)) {
      ++shape.component_edges[index[uf.find(e.u)]];
    }
  }
  return shape;
}

}  // namespace

bool is_color_forest(const Graph& g, const ColorAssignment& a) {
  require_cover(g, a);
  for (ColorId x = 0; x < a.palette().size(); ++x) {
    SliceShape shape = slice_shape(g, a, x);
    for (std::size_t c = 0; c < shape.component_nodes.size(); ++c) {
      if (shape.component_edges[c] != shape.component_nodes[c] - 1) return false;
    }
  }
  return true;
}

bool is_color_complete(const Graph& g, const ColorAssignment& a) {
  require_cover(g, a);
  for (ColorId x = 0; x < a.palette().size(); ++x) {
    SliceShape shape = slice_shape(g, a, x);
    for (std::size_t c = 0; c < shape.component_nodes.size(); ++c) {
      long nodes = shape.component_nodes[c];
      if (shape.component_edges[c] != nodes * (nodes - 1) / 2) return false;
    }
  }
  return true;
}

GraphClass classify(const Graph& g, const ColorAssignment& a) {
  require_cover(g, a);
  GraphClass c;
  c.is_forest = is_forest(g);
  c.is_pseudoforest = is_pseudoforest(g);
  c.cycles_pairwise_edge_disjoint = cycles_pairwise_edge_disjoint(g);
  c.girth = girth(g);
  c.is_color_forest = is_color_forest(g, a);
  c.is_color_complete = is_color_complete(g, a);
  return c;
}

}  // namespace coordgame
