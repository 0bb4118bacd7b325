#ifndef OPTURAN_GRAPH_HPP
#define OPTURAN_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "opturan/errors.hpp"

namespace opturan {

/// Undirected edge stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// isolated vertices are represented by the order alone. Edges are kept
/// sorted, so iteration order (and everything derived from it) is
/// reproducible.
class Graph {
  public:
    Graph() = default; // the empty graph on 0 vertices

    /// Builds a graph from an explicit edge list.
    /// Throws VertexOutOfRangeError, LoopEdgeError or DuplicateEdgeError.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    /// Same validation, for callers that already hold canonical edges.
    static Graph from_edge_list(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, unique
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Partition of 0..n-1 into connected parts, each sorted, parts ordered by
/// smallest member. Empty graph gives an empty list.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff n >= 3, connected, and free of cut vertices.
bool is_biconnected(const Graph& g);

/// Standard block / cut-vertex decomposition. Every edge lies in exactly one
/// block; bridges are K2 blocks; isolated vertices belong to no block.
struct BlockDecomposition {
    std::vector<std::vector<Edge>> blocks; // each sorted; ordered by smallest edge
    std::vector<int> cut_vertices;         // sorted
};
BlockDecomposition biconnected_blocks(const Graph& g);

/// Subgraph spanned by an edge set, with its vertices relabeled densely in
/// increasing original order. vertex_labels maps new label -> original.
struct LabeledSubgraph {
    Graph graph;
    std::vector<int> vertex_labels;
};
LabeledSubgraph edge_induced_subgraph(const Graph& g, const std::vector<Edge>& edges);

/// Subgraph induced by a vertex set (sorted ascending), relabeled densely.
LabeledSubgraph vertex_induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Bit index of edge (u,v), u < v, inside a packed upper-triangle mask.
/// Usable for graphs with order <= 11 (45 bits).
inline int edge_bit_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

} // namespace opturan

#endif
