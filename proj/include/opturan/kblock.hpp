#ifndef OPTURAN_KBLOCK_HPP
#define OPTURAN_KBLOCK_HPP

#include <vector>

#include "opturan/graph.hpp"
#include "opturan/outerplane.hpp"

namespace opturan {

/// Partition of a connected outerplanar graph's edges into the classes of
/// the relation "joined by a chain of inner faces of size <= k-1", together
/// with the subgraph each class spans.
struct KBlockDecomposition {
    int k = 0;
    std::vector<std::vector<Edge>> classes;            // original labels
    std::vector<Graph> blocks;                         // dense relabelings
    std::vector<std::vector<int>> block_vertex_labels; // dense -> original
};

/// Edge classes of one embedding: two edges share a class iff some sequence
/// of inner faces of size <= k-1 links them. Computed by uniting the edges
/// of every such face.
std::vector<std::vector<Edge>> k_face_classes(const OuterplaneEmbedding& emb, int k);

/// Full decomposition, computed per biconnected block (edges in distinct
/// blocks never share an inner face); bridges become K2 classes.
/// Throws DisconnectedError / NotOuterplanarError / DomainError.
KBlockDecomposition k_blocks(const Graph& g, int k);

/// True iff g is K2, or 2-connected outerplanar with every inner face of
/// size <= k-1 (then k_blocks yields the single class E(g)).
bool is_trivial_k_block(const Graph& g, int k);

} // namespace opturan

#endif
