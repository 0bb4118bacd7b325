#include "opturan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "opturan/detect.hpp"

namespace opturan {

TriangulationIter::TriangulationIter(int n) : n_(n) {
    if (n < 3)
        throw DomainError("triangulations need a polygon of order >= 3");
    // Interval DP over polygon slices: a triangulation of lo..hi picks the
    // apex of the triangle on the closing edge (lo,hi) and multiplies the
    // sub-slice triangulations. Each triangulation appears exactly once.
    // tri[lo][hi] holds all chord sets of the polygon slice lo..hi.
    std::vector<std::vector<std::vector<std::vector<Edge>>>> tri(
        n, std::vector<std::vector<std::vector<Edge>>>(n));
    for (int len = 1; len < n; ++len) {
        for (int lo = 0; lo + len < n; ++lo) {
            int hi = lo + len;
            auto& cell = tri[lo][hi];
            if (len < 2) {
                cell.push_back({});
                continue;
            }
            for (int apex = lo + 1; apex < hi; ++apex) {
                for (const auto& left : tri[lo][apex]) {
                    for (const auto& right : tri[apex][hi]) {
                        std::vector<Edge> chords = left;
                        chords.insert(chords.end(), right.begin(), right.end());
                        if (apex - lo >= 2)
                            chords.emplace_back(lo, apex);
                        if (hi - apex >= 2)
                            chords.emplace_back(apex, hi);
                        cell.push_back(std::move(chords));
                    }
                }
            }
        }
    }
    chord_sets_ = std::move(tri[0][n - 1]);
}

std::optional<OuterplaneEmbedding> TriangulationIter::next() {
    if (idx_ >= chord_sets_.size())
        return std::nullopt;
    std::vector<int> outer(n_);
    for (int i = 0; i < n_; ++i)
        outer[i] = i;
    return OuterplaneEmbedding(std::move(outer), chord_sets_[idx_++]);
}

TriangulationIter enumerate_triangulations(int n) {
    return TriangulationIter(n);
}

namespace {

// Descending-size subset scan of one edge universe. Updates best/witness with
// the largest admissible subgraph above the incoming best.
void scan_universe(int n, const std::vector<Edge>& universe,
                   const std::function<bool(const Graph&)>& admissible, long long& best,
                   Graph* witness) {
    const int m = static_cast<int>(universe.size());
    if (m <= best)
        return;
    for (int s = m; s > best; --s) {
        // Enumerate index combinations of size s in lexicographic order.
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i)
            idx[i] = i;
        bool found = false;
        while (true) {
            std::vector<Edge> edges;
            edges.reserve(s);
            for (int i : idx)
                edges.push_back(universe[i]);
            Graph g = Graph::from_edge_list(n, std::move(edges));
            if (admissible(g)) {
                best = s;
                if (witness)
                    *witness = std::move(g);
                found = true;
                break;
            }
            int i = s - 1;
            while (i >= 0 && idx[i] == m - s + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (found)
            break;
    }
}

BruteResult brute_ex_impl(int n, const std::function<bool(const Graph&)>& admissible,
                          int budget) {
    if (n < 1)
        throw DomainError("brute_ex needs n >= 1");
    if (n > budget)
        throw BudgetError("brute_ex budget is n <= " + std::to_string(budget));
    BruteResult result;
    result.witness = Graph::from_edge_list(n, {});
    if (n == 1)
        return result;
    if (n == 2) {
        Graph k2 = Graph::from_edges(2, {{0, 1}});
        if (admissible(k2)) {
            result.value = 1;
            result.witness = std::move(k2);
        }
        return result;
    }
    TriangulationIter iter(n);
    const long long max_edges = 2 * n - 3;
    while (auto emb = iter.next()) {
        const Graph full = emb->graph();
        scan_universe(n, full.edges(), admissible, result.value, &result.witness);
        if (result.value == max_edges)
            break;
    }
    return result;
}

} // namespace

long long brute_ex(int n, const std::function<bool(const Graph&)>& admissible, int budget) {
    return brute_ex_impl(n, admissible, budget).value;
}

BruteResult brute_ex_witness(int n, const std::function<bool(const Graph&)>& admissible,
                             int budget) {
    return brute_ex_impl(n, admissible, budget);
}

long long brute_ex_cycle(int n, int k, int budget) {
    if (k < 3)
        throw DomainError("brute_ex_cycle needs k >= 3");
    return brute_ex(n, [k](const Graph& g) { return !has_cycle_len(g, k); }, budget);
}

long long brute_ex_path(int n, int k, int budget) {
    if (k < 3)
        throw DomainError("brute_ex_path needs k >= 3");
    return brute_ex(n, [k](const Graph& g) { return is_pk_free(g, k); }, budget);
}

std::vector<std::uint64_t> all_outerplanar_masks(int n, int budget) {
    if (n < 1)
        throw DomainError("enumeration needs n >= 1");
    if (n > budget)
        throw BudgetError("all_outerplanar budget is n <= " + std::to_string(budget));
    if (n > 11)
        throw BudgetError("edge masks support n <= 11");

    std::vector<std::uint64_t> out;
    if (n <= 2) {
        out.push_back(0);
        if (n == 2)
            out.push_back(1);
        return out;
    }

    std::unordered_set<std::uint64_t> seen;
    TriangulationIter tri(n);
    std::vector<std::vector<Edge>> chord_sets;
    while (auto emb = tri.next())
        chord_sets.push_back(emb->chords());

    // Every cyclic order of the labels (vertex 0 first, reversal deduped),
    // every triangulation of the polygon, every edge subset.
    std::vector<int> rest(n - 1);
    for (int i = 0; i < n - 1; ++i)
        rest[i] = i + 1;
    std::vector<int> order(n);
    order[0] = 0;
    do {
        if (rest.front() > rest.back())
            continue;
        for (int i = 1; i < n; ++i)
            order[i] = rest[i - 1];
        for (const auto& chords : chord_sets) {
            std::vector<std::uint64_t> bit;
            bit.reserve(2 * n - 3);
            for (int i = 0; i < n; ++i)
                bit.push_back(std::uint64_t{1}
                              << edge_bit_index(order[i], order[(i + 1) % n]));
            for (const Edge& c : chords)
                bit.push_back(std::uint64_t{1} << edge_bit_index(order[c.u], order[c.v]));
            const int m = static_cast<int>(bit.size());
            // Gray-code walk over subsets: one bit flips per step.
            std::uint64_t mask = 0;
            seen.insert(mask);
            for (std::uint64_t code = 1; code < (std::uint64_t{1} << m); ++code) {
                mask ^= bit[std::countr_zero(code)];
                seen.insert(mask);
            }
        }
    } while (std::next_permutation(rest.begin(), rest.end()));

    out.assign(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

OuterplanarEnumerator::OuterplanarEnumerator(int n, int budget)
    : n_(n), masks_(all_outerplanar_masks(n, budget)) {}

std::optional<Graph> OuterplanarEnumerator::next() {
    if (idx_ >= masks_.size())
        return std::nullopt;
    return graph_from_mask(n_, masks_[idx_++]);
}

OuterplanarEnumerator all_outerplanar(int n, int budget) {
    return OuterplanarEnumerator(n, budget);
}

} // namespace opturan
