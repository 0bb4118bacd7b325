#include "opturan/kblock.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace opturan {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<Edge>> group_by_root(const std::vector<Edge>& edges, Dsu& dsu) {
    std::map<int, std::vector<Edge>> groups;
    for (std::size_t i = 0; i < edges.size(); ++i)
        groups[dsu.find(static_cast<int>(i))].push_back(edges[i]);
    std::vector<std::vector<Edge>> out;
    out.reserve(groups.size());
    for (auto& [root, grp] : groups) {
        std::sort(grp.begin(), grp.end());
        out.push_back(std::move(grp));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

} // namespace

std::vector<std::vector<Edge>> k_face_classes(const OuterplaneEmbedding& emb, int k) {
    if (k < 3)
        throw DomainError("k-face classes need k >= 3");
    const Graph g = emb.graph();
    const std::vector<Edge>& edges = g.edges();
    std::map<Edge, int> index;
    for (std::size_t i = 0; i < edges.size(); ++i)
        index[edges[i]] = static_cast<int>(i);

    Dsu dsu(static_cast<int>(edges.size()));
    if (!emb.is_degenerate()) {
        for (const InnerFace& face : inner_faces(emb)) {
            if (face.size() > k - 1)
                continue;
            const auto& b = face.boundary;
            const int first = index[Edge(b[0], b[1])];
            for (int j = 1; j < face.size(); ++j)
                dsu.unite(first, index[Edge(b[j], b[(j + 1) % face.size()])]);
        }
    }
    return group_by_root(edges, dsu);
}

KBlockDecomposition k_blocks(const Graph& g, int k) {
    if (k < 3)
        throw DomainError("k-block decomposition needs k >= 3");
    if (!is_connected(g))
        throw DisconnectedError("k-block decomposition needs a connected graph");
    if (!is_outerplanar(g))
        throw NotOuterplanarError("k-block decomposition needs an outerplanar graph");

    KBlockDecomposition out;
    out.k = k;
    for (const auto& block : biconnected_blocks(g).blocks) {
        if (block.size() == 1) {
            out.classes.push_back(block);
            continue;
        }
        LabeledSubgraph sub = edge_induced_subgraph(g, block);
        for (const auto& local_class : k_face_classes(embed(sub.graph), k)) {
            std::vector<Edge> cls;
            cls.reserve(local_class.size());
            for (const Edge& e : local_class)
                cls.emplace_back(sub.vertex_labels[e.u], sub.vertex_labels[e.v]);
            std::sort(cls.begin(), cls.end());
            out.classes.push_back(std::move(cls));
        }
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& cls : out.classes) {
        LabeledSubgraph sub = edge_induced_subgraph(g, cls);
        out.blocks.push_back(std::move(sub.graph));
        out.block_vertex_labels.push_back(std::move(sub.vertex_labels));
    }
    return out;
}

bool is_trivial_k_block(const Graph& g, int k) {
    if (k < 3)
        throw DomainError("trivial k-blocks need k >= 3");
    if (g.order() == 2 && g.size() == 1)
        return true;
    if (g.order() < 3 || !is_biconnected(g) || !is_outerplanar(g))
        return false;
    for (const InnerFace& face : inner_faces(embed(g)))
        if (face.size() > k - 1)
            return false;
    return true;
}

} // namespace opturan
