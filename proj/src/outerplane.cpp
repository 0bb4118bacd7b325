#include "opturan/outerplane.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

namespace opturan {

OuterplaneEmbedding::OuterplaneEmbedding(std::vector<int> outer, std::vector<Edge> chords) {
    const int n = static_cast<int>(outer.size());
    if (n < 3)
        throw NotOuterplanarError("outer cycle needs at least 3 vertices");
    pos_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = outer[i];
        if (v < 0 || v >= n || pos_[v] != -1)
            throw NotOuterplanarError("outer order is not a permutation of 0..n-1");
        pos_[v] = i;
    }
    std::sort(chords.begin(), chords.end());
    if (static_cast<int>(chords.size()) > n - 3)
        throw NotOuterplanarError("too many chords: e > 2n-3");

    // Normalize chords to position intervals [a,b), a < b.
    std::vector<std::pair<int, int>> spans;
    spans.reserve(chords.size());
    for (std::size_t i = 0; i < chords.size(); ++i) {
        const Edge& c = chords[i];
        if (i > 0 && chords[i - 1] == c)
            throw NotOuterplanarError("duplicate chord");
        int a = pos_[c.u], b = pos_[c.v];
        if (a > b)
            std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1))
            throw NotOuterplanarError("chord endpoints adjacent on the outer cycle");
        spans.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < spans.size(); ++i) {
        for (std::size_t j = i + 1; j < spans.size(); ++j) {
            auto [a, b] = spans[i];
            auto [c, d] = spans[j];
            const bool crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if (crossing)
                throw NotOuterplanarError("crossing chords");
        }
    }
    outer_ = std::move(outer);
    chords_ = std::move(chords);
}

OuterplaneEmbedding OuterplaneEmbedding::degenerate(int n) {
    if (n != 1 && n != 2)
        throw DomainError("degenerate embeddings exist only for K1 and K2");
    OuterplaneEmbedding emb;
    emb.degenerate_ = true;
    emb.outer_.resize(n);
    emb.pos_.resize(n);
    for (int i = 0; i < n; ++i)
        emb.outer_[i] = emb.pos_[i] = i;
    return emb;
}

Graph OuterplaneEmbedding::graph() const {
    const int n = order();
    std::vector<Edge> edges = chords_;
    if (degenerate_) {
        if (n == 2)
            edges.emplace_back(0, 1);
    } else {
        for (int i = 0; i < n; ++i)
            edges.emplace_back(outer_[i], outer_[(i + 1) % n]);
    }
    return Graph::from_edge_list(n, std::move(edges));
}

OuterplaneEmbedding embed(const Graph& g) {
    const int n = g.order();
    if (n == 0)
        throw NotBiconnectedError("empty graph has no embedding");
    if (n == 1)
        return OuterplaneEmbedding::degenerate(1);
    if (n == 2) {
        if (g.size() != 1)
            throw NotBiconnectedError("two vertices without an edge");
        return OuterplaneEmbedding::degenerate(2);
    }
    if (!is_biconnected(g))
        throw NotBiconnectedError("graph is not 2-connected");
    if (g.size() > 2 * n - 3)
        throw NotOuterplanarError("e > 2n-3");

    // Degree-2 ear reduction. Peeling a degree-2 vertex and shortcutting its
    // neighbors keeps the graph 2-connected outerplanar, and the unique
    // Hamilton cycle of the reduced graph contains the shortcut edge, so the
    // splice target is always a cycle edge when the input is outerplanar.
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<bool> alive(n, true);
    int alive_count = n;
    struct Splice {
        int v, a, b;
    };
    std::vector<Splice> splices;
    while (alive_count > 3) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (alive[u] && adj[u].size() == 2) {
                v = u;
                break;
            }
        }
        if (v == -1)
            throw NotOuterplanarError("no degree-2 vertex during reduction");
        auto it = adj[v].begin();
        int a = *it++;
        int b = *it;
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b); // no-op when the shortcut edge already exists
        adj[b].insert(a);
        alive[v] = false;
        --alive_count;
        splices.push_back({v, a, b});
    }

    std::vector<int> cycle;
    for (int u = 0; u < n; ++u)
        if (alive[u])
            cycle.push_back(u);
    for (int i = 0; i < 3; ++i)
        if (!adj[cycle[i]].count(cycle[(i + 1) % 3]))
            throw NotOuterplanarError("reduction core is not a triangle");

    std::vector<int> at(n, -1);
    for (int i = 0; i < 3; ++i)
        at[cycle[i]] = i;
    for (auto rec = splices.rbegin(); rec != splices.rend(); ++rec) {
        const int m = static_cast<int>(cycle.size());
        int pa = at[rec->a], pb = at[rec->b];
        if ((pa + 1) % m != pb && (pb + 1) % m != pa)
            throw NotOuterplanarError("splice target is not an outer edge");
        int after = ((pa + 1) % m == pb) ? pa : pb;
        cycle.insert(cycle.begin() + after + 1, rec->v);
        for (int i = after + 1; i < m + 1; ++i)
            at[cycle[i]] = i;
    }

    // Soundness: the reconstructed cycle must consist of real edges.
    std::set<Edge> on_cycle;
    for (int i = 0; i < n; ++i) {
        int u = cycle[i], w = cycle[(i + 1) % n];
        if (!g.has_edge(u, w))
            throw NotOuterplanarError("reduction produced a non-edge on the outer cycle");
        on_cycle.insert(Edge(u, w));
    }
    std::vector<Edge> chords;
    for (const Edge& e : g.edges())
        if (!on_cycle.count(e))
            chords.push_back(e);

    // Canonical rotation: start at 0, then the smaller cycle neighbor of 0.
    int z = at[0];
    std::vector<int> outer(n);
    const int next = cycle[(z + 1) % n], prev = cycle[(z + n - 1) % n];
    if (next < prev) {
        for (int i = 0; i < n; ++i)
            outer[i] = cycle[(z + i) % n];
    } else {
        for (int i = 0; i < n; ++i)
            outer[i] = cycle[(z + n - i) % n];
    }
    return OuterplaneEmbedding(std::move(outer), std::move(chords));
}

std::vector<InnerFace> inner_faces(const OuterplaneEmbedding& emb) {
    if (emb.is_degenerate())
        throw DomainError("degenerate embeddings have no faces");
    const int n = emb.order();

    // Rotation system of the convex drawing: neighbors of v ordered
    // counterclockwise, i.e. by cyclic distance of their positions.
    const Graph g = emb.graph();
    std::vector<std::vector<int>> rot(n);
    std::vector<std::unordered_map<int, int>> rot_index(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = g.neighbors(v);
        const int pv = emb.position(v);
        std::sort(rot[v].begin(), rot[v].end(), [&](int x, int y) {
            return (emb.position(x) - pv + n) % n < (emb.position(y) - pv + n) % n;
        });
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
            rot_index[v][rot[v][i]] = i;
    }

    // Darts indexed per tail vertex; faces are orbits of
    // (u -> v) |-> (v -> rotation-predecessor of u at v).
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v)
        offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    const int ndarts = offset[n];
    auto dart_id = [&](int u, int v) { return offset[u] + rot_index[u][v]; };

    std::vector<bool> visited(ndarts, false);
    const int outer_dart = dart_id(emb.outer()[1], emb.outer()[0]);
    std::vector<InnerFace> faces;
    int orbits = 0;
    for (int start = 0; start < ndarts; ++start) {
        if (visited[start])
            continue;
        ++orbits;
        std::vector<int> boundary;
        bool is_outer = false;
        int u = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), start) -
                                 offset.begin()) -
                1;
        int v = rot[u][start - offset[u]];
        int d = start;
        do {
            visited[d] = true;
            if (d == outer_dart)
                is_outer = true;
            boundary.push_back(u);
            const int deg = static_cast<int>(rot[v].size());
            int w = rot[v][(rot_index[v][u] + deg - 1) % deg];
            u = v;
            v = w;
            d = dart_id(u, v);
        } while (d != start);
        if (is_outer)
            continue;
        auto min_it = std::min_element(boundary.begin(), boundary.end());
        std::rotate(boundary.begin(), min_it, boundary.end());
        faces.push_back({std::move(boundary)});
    }
    if (orbits != g.size() - n + 2)
        throw std::logic_error("face count violates Euler's formula");
    std::sort(faces.begin(), faces.end(),
              [](const InnerFace& a, const InnerFace& b) { return a.boundary < b.boundary; });
    return faces;
}

bool is_outerplanar(const Graph& g) {
    const int n = g.order();
    if (n <= 2)
        return true;
    if (g.size() > 2 * n - 3)
        return false;
    for (const auto& block : biconnected_blocks(g).blocks) {
        if (block.size() == 1)
            continue;
        try {
            embed(edge_induced_subgraph(g, block).graph);
        } catch (const NotOuterplanarError&) {
            return false;
        }
    }
    return true;
}

bool is_maximal_outerplanar(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != 2 * n - 3)
        return false;
    if (n == 2)
        return true;
    return is_biconnected(g) && is_outerplanar(g);
}

} // namespace opturan
