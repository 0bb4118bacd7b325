#ifndef OPTURAN_DETECT_HPP
#define OPTURAN_DETECT_HPP

#include <vector>

#include "opturan/graph.hpp"
#include "opturan/outerplane.hpp"

namespace opturan {

/// Exact set of cycle lengths present in a graph.
struct CycleSpectrum {
    std::vector<int> lengths; // sorted ascending, each in 3..n
    bool contains(int l) const;
    bool empty() const { return lengths.empty(); }
};

/// Cycle lengths of a 2-connected outerplane graph, computed by dynamic
/// programming over the weak dual tree: inner faces are nodes, shared chords
/// are tree edges, and every cycle is the boundary of a nonempty connected
/// subtree, of length (sum of face sizes) - 2 * (subtree edges).
/// Throws NotBiconnectedError for degenerate embeddings.
CycleSpectrum cycle_spectrum(const OuterplaneEmbedding& emb);

/// True iff g contains a cycle on exactly k vertices. Outerplanar blocks are
/// answered through cycle_spectrum; anything else falls back to exact
/// backtracking (desk scale).
bool has_cycle_len(const Graph& g, int k);

/// Default cap on exact path search; inputs above it raise TooLargeError.
inline constexpr int kExactSearchBound = 24;

/// Length (edge count) of a longest path, by exhaustive backtracking.
int longest_path_len(const Graph& g, int exact_bound = kExactSearchBound);

/// True iff g has no path on k vertices, i.e. longest_path_len(g) <= k-2.
/// Uses an early-exit search for the single threshold.
bool is_pk_free(const Graph& g, int k, int exact_bound = kExactSearchBound);

} // namespace opturan

#endif
