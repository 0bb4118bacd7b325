#include "opturan/detect.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace opturan {

bool CycleSpectrum::contains(int l) const {
    return std::binary_search(lengths.begin(), lengths.end(), l);
}

CycleSpectrum cycle_spectrum(const OuterplaneEmbedding& emb) {
    if (emb.is_degenerate())
        throw NotBiconnectedError("cycle spectrum needs a 2-connected embedding");
    const int n = emb.order();
    const std::vector<InnerFace> faces = inner_faces(emb);
    const int f = static_cast<int>(faces.size());

    // Weak dual: faces sharing a chord are adjacent. Every chord lies on
    // exactly two inner faces.
    std::map<Edge, std::vector<int>> face_of_chord;
    for (int i = 0; i < f; ++i) {
        const auto& b = faces[i].boundary;
        const int m = faces[i].size();
        for (int j = 0; j < m; ++j) {
            Edge e(b[j], b[(j + 1) % m]);
            int pu = emb.position(e.u), pv = emb.position(e.v);
            int d = std::abs(pu - pv);
            if (d != 1 && d != n - 1)
                face_of_chord[e].push_back(i);
        }
    }
    std::vector<std::vector<int>> dual(f);
    for (const auto& [chord, pair] : face_of_chord) {
        if (pair.size() != 2)
            throw std::logic_error("chord not on exactly two inner faces");
        dual[pair[0]].push_back(pair[1]);
        dual[pair[1]].push_back(pair[0]);
    }

    // Iterative post-order over the dual tree; reachable[v][l] marks lengths
    // achievable by connected subtrees containing v inside v's subtree.
    std::vector<bool> any(n + 1, false);
    std::vector<std::vector<bool>> reach(f);
    std::vector<int> order, parent(f, -2), stack;
    if (f > 0) {
        parent[0] = -1;
        stack.push_back(0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : dual[v])
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
        if (static_cast<int>(order.size()) != f)
            throw std::logic_error("weak dual is not connected");
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        reach[v].assign(n + 1, false);
        reach[v][faces[v].size()] = true;
        for (int c : dual[v]) {
            if (parent[c] != v)
                continue;
            std::vector<bool> merged = reach[v];
            for (int x = 3; x <= n; ++x) {
                if (!reach[v][x])
                    continue;
                for (int y = 3; y <= n; ++y)
                    if (reach[c][y] && x + y - 2 <= n)
                        merged[x + y - 2] = true;
            }
            reach[v] = std::move(merged);
            reach[c].clear(); // no longer needed
        }
        for (int l = 3; l <= n; ++l)
            if (reach[v][l])
                any[l] = true;
    }

    CycleSpectrum spec;
    for (int l = 3; l <= n; ++l)
        if (any[l])
            spec.lengths.push_back(l);
    return spec;
}

namespace {

// Exact search for a cycle on exactly k vertices: anchor the smallest cycle
// vertex and extend paths through larger ones.
bool backtrack_cycle(const Graph& g, int k) {
    const int n = g.order();
    if (k > n)
        return false;
    std::vector<bool> used(n, false);

    struct Searcher {
        const Graph& g;
        int k, start;
        std::vector<bool>& used;
        bool run(int v, int depth) {
            if (depth == k)
                return g.has_edge(v, start);
            for (int w : g.neighbors(v)) {
                if (w > start && !used[w]) {
                    used[w] = true;
                    if (run(w, depth + 1))
                        return true;
                    used[w] = false;
                }
            }
            return false;
        }
    };
    for (int s = 0; s + k <= n; ++s) {
        used[s] = true;
        Searcher searcher{g, k, s, used};
        if (searcher.run(s, 1))
            return true;
        used[s] = false;
    }
    return false;
}

} // namespace

bool has_cycle_len(const Graph& g, int k) {
    if (k < 3)
        throw DomainError("cycles have at least 3 vertices");
    if (k > g.order())
        return false;
    for (const auto& block : biconnected_blocks(g).blocks) {
        if (block.size() == 1)
            continue;
        LabeledSubgraph sub = edge_induced_subgraph(g, block);
        if (sub.graph.order() < k)
            continue;
        try {
            if (cycle_spectrum(embed(sub.graph)).contains(k))
                return true;
        } catch (const NotOuterplanarError&) {
            if (backtrack_cycle(sub.graph, k))
                return true;
        }
    }
    return false;
}

namespace {

// Longest path by DFS; stops early at `target` edges when target >= 0.
struct PathSearcher {
    const Graph& g;
    int target; // -1: find the maximum
    std::vector<bool> used;
    int best = 0;

    explicit PathSearcher(const Graph& graph, int tgt)
        : g(graph), target(tgt), used(graph.order(), false) {}

    bool dfs(int v, int len) {
        if (len > best)
            best = len;
        if (target >= 0 && best >= target)
            return true;
        if (best == g.order() - 1)
            return true; // Hamilton path, nothing longer exists
        for (int w : g.neighbors(v)) {
            if (!used[w]) {
                used[w] = true;
                if (dfs(w, len + 1))
                    return true;
                used[w] = false;
            }
        }
        return false;
    }

    int run() {
        for (int s = 0; s < g.order(); ++s) {
            used.assign(g.order(), false);
            used[s] = true;
            if (dfs(s, 0))
                break;
        }
        return best;
    }
};

} // namespace

int longest_path_len(const Graph& g, int exact_bound) {
    if (g.order() > exact_bound)
        throw TooLargeError("exact path search capped at n = " + std::to_string(exact_bound));
    return PathSearcher(g, -1).run();
}

bool is_pk_free(const Graph& g, int k, int exact_bound) {
    if (k < 2)
        throw DomainError("paths have at least 2 vertices");
    if (k > g.order())
        return true; // not enough vertices for any P_k
    if (g.order() > exact_bound)
        throw TooLargeError("exact path search capped at n = " + std::to_string(exact_bound));
    PathSearcher searcher(g, k - 1);
    return searcher.run() <= k - 2;
}

} // namespace opturan
