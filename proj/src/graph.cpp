#include "opturan/graph.hpp"

#include <algorithm>
#include <string>

namespace opturan {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw VertexOutOfRangeError("edge endpoint " + std::to_string(a < 0 || a >= n ? a : b) +
                                        " outside 0.." + std::to_string(n - 1));
        if (a == b)
            throw LoopEdgeError("loop at vertex " + std::to_string(a));
        edges.emplace_back(a, b);
    }
    return from_edge_list(n, std::move(edges));
}

Graph Graph::from_edge_list(int n, std::vector<Edge> edges) {
    if (n < 0)
        throw VertexOutOfRangeError("negative vertex count");
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.v >= n)
            throw VertexOutOfRangeError("edge endpoint outside 0.." + std::to_string(n - 1));
        if (e.u == e.v)
            throw LoopEdgeError("loop at vertex " + std::to_string(e.u));
        if (i > 0 && edges[i - 1] == e)
            throw DuplicateEdgeError("duplicate edge " + std::to_string(e.u) + "-" +
                                     std::to_string(e.v));
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), other);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> parts;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<int> part;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

namespace {

// Hopcroft-Tarjan lowpoint DFS; emits blocks off an edge stack.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> blocks;
    std::vector<bool> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.order(), -1), low(graph.order(), 0),
          is_cut(graph.order(), false) {}

    void pop_block(const Edge& until) {
        std::vector<Edge> blk;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(e);
            if (e == until)
                break;
        }
        std::sort(blk.begin(), blk.end());
        blocks.push_back(std::move(blk));
    }

    void dfs(int root) {
        // Iterative to keep certificate-scale inputs off the call stack.
        struct Frame {
            int v, parent;
            std::size_t next = 0;
            int children = 0;
        };
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (disc[w] == -1) {
                    ++f.children;
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent != -1) {
                    Frame& pf = stack.back();
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        pop_block(Edge(parent, v));
                        // A root cuts iff it has >= 2 tree children; any other
                        // vertex cuts iff some child cannot reach above it.
                        if (pf.parent != -1 || pf.children > 1)
                            is_cut[parent] = true;
                    }
                }
            }
        }
    }
};

} // namespace

BlockDecomposition biconnected_blocks(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.order(); ++v)
        if (finder.disc[v] == -1 && g.degree(v) > 0)
            finder.dfs(v);
    BlockDecomposition out;
    out.blocks = std::move(finder.blocks);
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int v = 0; v < g.order(); ++v)
        if (finder.is_cut[v])
            out.cut_vertices.push_back(v);
    return out;
}

bool is_biconnected(const Graph& g) {
    if (g.order() < 3 || !is_connected(g))
        return false;
    return biconnected_blocks(g).cut_vertices.empty();
}

LabeledSubgraph edge_induced_subgraph(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<int> labels;
    for (const Edge& e : edges) {
        labels.push_back(e.u);
        labels.push_back(e.v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        index[labels[i]] = static_cast<int>(i);
    std::vector<Edge> local;
    local.reserve(edges.size());
    for (const Edge& e : edges)
        local.emplace_back(index[e.u], index[e.v]);
    return {Graph::from_edge_list(static_cast<int>(labels.size()), std::move(local)), labels};
}

LabeledSubgraph vertex_induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> labels = vertices;
    std::sort(labels.begin(), labels.end());
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        index[labels[i]] = static_cast<int>(i);
    std::vector<Edge> local;
    for (const Edge& e : g.edges())
        if (index[e.u] != -1 && index[e.v] != -1)
            local.emplace_back(index[e.u], index[e.v]);
    return {Graph::from_edge_list(static_cast<int>(labels.size()), std::move(local)), labels};
}

std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges())
        mask |= std::uint64_t{1} << edge_bit_index(e.u, e.v);
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (mask >> edge_bit_index(u, v) & 1)
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, std::move(edges));
}

} // namespace opturan
