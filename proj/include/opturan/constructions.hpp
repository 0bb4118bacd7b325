#ifndef OPTURAN_CONSTRUCTIONS_HPP
#define OPTURAN_CONSTRUCTIONS_HPP

#include <vector>

#include "opturan/formulas.hpp"
#include "opturan/graph.hpp"

namespace opturan {

/// Orders of the trivial k-blocks to assemble, each realized as a fan.
/// Orders must lie in [2, k-1] so the assembly stays free of k-cycles.
struct BlockSpec {
    std::vector<int> orders;
    int k = 0;
};

/// An extremal graph plus machine-checkable evidence. A certificate is VALID
/// only when all three checks hold.
struct Certificate {
    Graph graph;
    long long n = 0;
    long long k = 0;
    Family family = Family::cycle;
    long long claimed_order = 0;
    long long claimed_size = 0;
    bool outerplanar_ok = false;
    bool forbidden_free_ok = false;
    bool formula_ok = false;

    bool valid() const { return outerplanar_ok && forbidden_free_ok && formula_ok; }
};

/// Fan: vertex 0 joined to every vertex of the path 1-2-...-(m-1).
/// fan(2) = K2; for m >= 3 it is maximal outerplanar with all-triangle
/// interior and cycle spectrum {3,...,m}.
Graph fan(int m);

/// Glues the fans fan(orders[i]) into a single connected outerplanar graph
/// with no k-cycle and the minimum possible order
///   sum(orders) - floor((t-1)/k) - t + 1,   t = orders.size().
/// The first b = t - k*floor((t-1)/k) fans ride the edges of a path; every
/// following group of k fans rides a (k+1)-cycle; stages are chained by edge
/// identification. Size is always sum(2*orders[i] - 3).
Graph assemble_blocks(const BlockSpec& spec);

/// Certified extremal graph with no C_k: fan(n) for 2 <= n < k, otherwise
/// the assembly of lambda-1 fans of order k-1, one balancing fan, and an
/// extra K2 when k divides lambda.
Certificate extremal_cycle_graph(long long n, long long k);

/// Fans of the given orders sharing vertex 0. Order sum(o_i - 1) + 1, size
/// sum(2*o_i - 3); for two or more blocks the longest path has
/// max_{i<j}(o_i + o_j) - 2 edges.
Graph cactus(const std::vector<int>& orders);

/// Certified connected P_k-free extremal graph: the cactus of ceil(k/2),
/// floor(k/2), ..., floor(k/2), remainder fans on n vertices.
Certificate extremal_path_connected_graph(long long n, long long k);

/// Certified P_k-free extremal graph among hosts whose components all have
/// order <= k-1: disjoint fans of order k-1 plus one remainder component.
Certificate extremal_path_bounded_graph(long long n, long long k);

/// Certified extremal P_k-free graph: floor(n/2) disjoint edges for k = 3,
/// otherwise whichever of the two regimes wins (ties go to the disjoint
/// construction).
Certificate extremal_path_graph(long long n, long long k);

/// A connected outerplanar graph of order n and size m whose inner faces are
/// all triangles and which has no C_k, built as a cactus of fans. Throws
/// InfeasibleError when no such graph exists.
Graph realize_block_profile(int n, int m, int k);

} // namespace opturan

#endif
