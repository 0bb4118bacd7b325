#include "opturan/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "opturan/detect.hpp"
#include "opturan/outerplane.hpp"

namespace opturan {

Graph fan(int m) {
    if (m < 2)
        throw DomainError("fan needs order >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < m; ++i)
        edges.emplace_back(0, i);
    for (int i = 1; i + 1 < m; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(m, std::move(edges));
}

namespace {

// Disjoint-union workspace for edge-identification gluing. Vertices are
// allocated in construction order; identified vertices collapse to the
// earliest pool id, which becomes the smaller final label.
struct GluePool {
    std::vector<int> parent;

    int alloc(int count) {
        int first = static_cast<int>(parent.size());
        for (int i = 0; i < count; ++i)
            parent.push_back(first + i);
        return first;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

// A fan placed in the pool; `base` is the apex pool id, path vertices follow.
struct PooledFan {
    int base = 0;
    int order = 0;
    int apex() const { return base; }
    int path(int j) const { return base + j; } // j in 1..order-1
};

} // namespace

Graph assemble_blocks(const BlockSpec& spec) {
    const int t = static_cast<int>(spec.orders.size());
    const int k = spec.k;
    if (t < 1)
        throw DomainError("assembly needs at least one block");
    if (k < 3)
        throw DomainError("assembly needs k >= 3");
    for (int o : spec.orders)
        if (o < 2 || o > k - 1)
            throw DomainError("block orders must lie in [2, k-1], got " + std::to_string(o));

    const int a = (t - 1) / k;
    const int b = t - k * a; // 1 <= b <= k

    GluePool pool;
    std::vector<Edge> pool_edges; // in pool ids, duplicates collapse later

    auto add_fan = [&](int order) {
        PooledFan f{pool.alloc(order), order};
        for (int j = 1; j < order; ++j)
            pool_edges.emplace_back(f.apex(), f.path(j));
        for (int j = 1; j + 1 < order; ++j)
            pool_edges.emplace_back(f.path(j), f.path(j + 1));
        return f;
    };

    int next_block = 0;

    // Stage 0: a path on b edges, one fan identified onto each edge.
    const int path_base = pool.alloc(b + 1);
    for (int i = 0; i < b; ++i)
        pool_edges.emplace_back(path_base + i, path_base + i + 1);
    for (int i = 0; i < b; ++i) {
        PooledFan f = add_fan(spec.orders[next_block++]);
        pool.unite(f.apex(), path_base + i);
        pool.unite(f.path(1), path_base + i + 1);
    }
    // The hand-off edge of stage 0 is the last path edge.
    Edge handoff(path_base + b - 1, path_base + b);

    // Stages 1..a: a (k+1)-cycle with k fans identified onto k of its edges;
    // the uncovered cycle edge is identified with the previous hand-off.
    for (int s = 1; s <= a; ++s) {
        const int cyc = pool.alloc(k + 1);
        for (int j = 0; j <= k; ++j)
            pool_edges.emplace_back(cyc + j, cyc + (j + 1) % (k + 1));
        PooledFan first{};
        for (int j = 0; j < k; ++j) {
            PooledFan f = add_fan(spec.orders[next_block++]);
            if (j == 0)
                first = f;
            pool.unite(f.apex(), cyc + j);
            pool.unite(f.path(1), cyc + j + 1);
        }
        pool.unite(std::min(handoff.u, handoff.v), cyc);
        pool.unite(std::max(handoff.u, handoff.v), cyc + k);
        // Next hand-off must be an outer edge of this stage: the first
        // fan's free apex edge, or the carrier edge itself under a K2.
        if (first.order == 2)
            handoff = Edge(cyc, cyc + 1);
        else
            handoff = Edge(first.apex(), first.path(first.order - 1));
    }

    // Resolve identifications; final labels by first appearance.
    std::vector<int> label(pool.parent.size(), -1);
    int order = 0;
    for (int id = 0; id < static_cast<int>(pool.parent.size()); ++id) {
        int root = pool.find(id);
        if (label[root] == -1)
            label[root] = order++;
        label[id] = label[root];
    }
    std::set<Edge> edges;
    for (const Edge& e : pool_edges)
        edges.emplace(label[pool.find(e.u)], label[pool.find(e.v)]);

    long long order_sum = 0, size_sum = 0;
    for (int o : spec.orders) {
        order_sum += o;
        size_sum += 2 * o - 3;
    }
    if (order != order_sum - a - t + 1)
        throw std::logic_error("assembly order does not match the closed form");
    if (static_cast<long long>(edges.size()) != size_sum)
        throw std::logic_error("assembly size does not match the closed form");
    return Graph::from_edge_list(order, std::vector<Edge>(edges.begin(), edges.end()));
}

namespace {

// P_k-freeness verdict that scales to certificate sizes: exact search for
// small components, the hub-cactus longest-path bound for large ones.
bool pk_free_checked(const Graph& g, long long k) {
    for (const auto& comp : connected_components(g)) {
        LabeledSubgraph sub = vertex_induced_subgraph(g, comp);
        const int nc = sub.graph.order();
        if (k > nc)
            continue; // not enough vertices for any P_k
        if (nc <= kExactSearchBound) {
            if (!is_pk_free(sub.graph, static_cast<int>(k)))
                return false;
            continue;
        }
        // A large component qualifies only as a hub cactus: every block
        // contains one shared vertex and nothing else overlaps, so a path
        // meets at most two blocks and has at most first+second-2 edges.
        const auto blocks = biconnected_blocks(sub.graph).blocks;
        if (blocks.size() < 2)
            return false; // one 2-connected block this large carries a long path
        long long vertex_sum = 0, first = 0, second = 0;
        std::vector<std::vector<int>> block_vertices;
        for (const auto& blk : blocks) {
            LabeledSubgraph bs = edge_induced_subgraph(sub.graph, blk);
            const long long o = bs.graph.order();
            vertex_sum += o - 1;
            if (o > first) {
                second = first;
                first = o;
            } else if (o > second) {
                second = o;
            }
            block_vertices.push_back(std::move(bs.vertex_labels));
        }
        int hub = -1;
        for (int v : block_vertices[0]) {
            if (std::binary_search(block_vertices[1].begin(), block_vertices[1].end(), v)) {
                hub = v;
                break;
            }
        }
        if (hub == -1)
            return false;
        for (const auto& verts : block_vertices)
            if (!std::binary_search(verts.begin(), verts.end(), hub))
                return false;
        if (vertex_sum + 1 != nc)
            return false; // some blocks overlap beyond the hub
        if (first + second - 2 > k - 2)
            return false;
    }
    return true;
}

Certificate certify(Graph g, long long n, long long k, Family family, long long expected_size) {
    Certificate cert;
    cert.n = n;
    cert.k = k;
    cert.family = family;
    cert.claimed_order = n;
    cert.claimed_size = expected_size;
    cert.outerplanar_ok = is_outerplanar(g);
    if (family == Family::cycle)
        cert.forbidden_free_ok = k > g.order() || !has_cycle_len(g, static_cast<int>(k));
    else
        cert.forbidden_free_ok = pk_free_checked(g, k);
    cert.formula_ok = g.order() == n && g.size() == expected_size;
    cert.graph = std::move(g);
    return cert;
}

// Constructors materialize graphs; refuse orders that cannot possibly fit.
constexpr long long kMaxConstructOrder = 10'000'000;

void check_construct_order(long long n) {
    if (n > kMaxConstructOrder)
        throw DomainError("construction order capped at " + std::to_string(kMaxConstructOrder));
}

} // namespace

Certificate extremal_cycle_graph(long long n, long long k) {
    check_construct_order(n);
    if (k < 3)
        throw DomainError("extremal_cycle_graph needs k >= 3");
    if (n < 2)
        throw DomainError("extremal_cycle_graph needs n >= 2");
    const TuranValue tv = ex_cycle(n, k);
    if (n <= k - 1)
        return certify(fan(static_cast<int>(n)), n, k, Family::cycle, tv.value);

    const long long lam = *tv.lambda;
    const long long balance = n + (lam - 1) / k - (lam - 1) * (k - 2);
    if (balance < 2 || balance > k - 1)
        throw std::logic_error("balancing block order out of range");
    std::vector<int> orders(static_cast<std::size_t>(lam - 1), static_cast<int>(k - 1));
    orders.push_back(static_cast<int>(balance));
    if (lam % k == 0)
        orders.push_back(2);
    Graph g = assemble_blocks({std::move(orders), static_cast<int>(k)});
    return certify(std::move(g), n, k, Family::cycle, tv.value);
}

Graph cactus(const std::vector<int>& orders) {
    if (orders.empty())
        throw DomainError("cactus needs at least one block");
    for (int o : orders)
        if (o < 2)
            throw DomainError("cactus block orders must be >= 2");
    std::vector<Edge> edges;
    int next = 1; // vertex 0 is the shared hub (each fan's apex)
    for (int o : orders) {
        const int base = next; // path vertices base..base+o-2
        next += o - 1;
        for (int j = 0; j < o - 1; ++j)
            edges.emplace_back(0, base + j);
        for (int j = 0; j + 1 < o - 1; ++j)
            edges.emplace_back(base + j, base + j + 1);
    }
    return Graph::from_edge_list(next, std::move(edges));
}

Certificate extremal_path_connected_graph(long long n, long long k) {
    check_construct_order(n);
    if (k < 4)
        throw DomainError("extremal_path_connected_graph needs k >= 4");
    if (n < k)
        throw DomainError("extremal_path_connected_graph needs n >= k");
    const TuranValue tv = ex_path_connected(n, k);
    const long long half = k / 2;
    const long long t = *tv.min_t;
    const long long last = half - (t * (half - 1) - (n - k + 2 * half - 1));
    if (t < 3 || last < 2 || last > half)
        throw std::logic_error("cactus profile out of range");
    std::vector<int> orders;
    orders.push_back(static_cast<int>(k - half)); // = ceil(k/2)
    for (long long i = 2; i <= t - 1; ++i)
        orders.push_back(static_cast<int>(half));
    orders.push_back(static_cast<int>(last));
    long long span = 0;
    for (int o : orders)
        span += o - 1;
    if (span + 1 != n)
        throw std::logic_error("cactus profile does not span n vertices");
    return certify(cactus(orders), n, k, Family::path, tv.value);
}

Certificate extremal_path_bounded_graph(long long n, long long k) {
    check_construct_order(n);
    if (k < 4)
        throw DomainError("extremal_path_bounded_graph needs k >= 4");
    if (n < k)
        throw DomainError("extremal_path_bounded_graph needs n >= k");
    const TuranValue tv = ex_path_bounded(n, k);
    const long long s = (n + k - 2) / (k - 1); // ceil(n/(k-1))
    const long long remainder = n - (s - 1) * (k - 1);

    std::vector<Edge> edges;
    int base = 0;
    auto add_fan_at = [&](int order) {
        for (int j = 1; j < order; ++j)
            edges.emplace_back(base, base + j);
        for (int j = 1; j + 1 < order; ++j)
            edges.emplace_back(base + j, base + j + 1);
        base += order;
    };
    for (long long i = 0; i < s - 1; ++i)
        add_fan_at(static_cast<int>(k - 1));
    if (remainder >= 2)
        add_fan_at(static_cast<int>(remainder));
    else
        base += 1; // a single isolated vertex
    Graph g = Graph::from_edge_list(base, std::move(edges));
    return certify(std::move(g), n, k, Family::path, tv.value);
}

Certificate extremal_path_graph(long long n, long long k) {
    check_construct_order(n);
    if (k < 3)
        throw DomainError("extremal_path_graph needs k >= 3");
    if (n < k)
        throw DomainError("extremal_path_graph needs n >= k");
    const TuranValue tv = ex_path(n, k);
    if (k == 3) {
        std::vector<Edge> edges;
        for (long long i = 0; i + 1 < n; i += 2)
            edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
        Graph g = Graph::from_edge_list(static_cast<int>(n), std::move(edges));
        return certify(std::move(g), n, k, Family::path, tv.value);
    }
    Certificate cert = *tv.regime == PathRegime::connected_wins
                           ? extremal_path_connected_graph(n, k)
                           : extremal_path_bounded_graph(n, k);
    // Re-certify the edge count against the overall maximum.
    cert.formula_ok = cert.graph.order() == n && cert.graph.size() == tv.value;
    cert.claimed_size = tv.value;
    return cert;
}

Graph realize_block_profile(int n, int m, int k) {
    if (n < 1 || m < 0)
        throw DomainError("realize_block_profile needs n >= 1, m >= 0");
    if (k < 3)
        throw DomainError("realize_block_profile needs k >= 3");
    const long long t = 2LL * (n - 1) - m;
    if (t < 1 || t > n - 1 || n - 1 > t * (k - 2))
        throw InfeasibleError("no partition of n-1 into " + std::to_string(t) +
                              " parts within [1, k-2]");
    std::vector<int> orders;
    int left = n - 1;
    for (long long i = 0; i < t; ++i) {
        const int part = std::min<long long>(k - 2, left - (t - 1 - i));
        orders.push_back(part + 1);
        left -= part;
    }
    return cactus(orders);
}

} // namespace opturan
