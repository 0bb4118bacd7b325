#ifndef OPTURAN_OUTERPLANE_HPP
#define OPTURAN_OUTERPLANE_HPP

#include <vector>

#include "opturan/graph.hpp"

namespace opturan {

/// Combinatorial outerplane embedding of a 2-connected outerplanar graph:
/// the outer Hamilton cycle order plus the non-crossing chords. K1 and K2
/// are carried as degenerate embeddings (no faces).
class OuterplaneEmbedding {
  public:
    /// Validating constructor for n >= 3. Checks that chords have
    /// cyclically non-adjacent endpoints, that no two chords cross, and
    /// that the total edge count stays within 2n-3.
    /// Throws NotOuterplanarError on violation.
    OuterplaneEmbedding(std::vector<int> outer, std::vector<Edge> chords);

    /// K1 (n=1) or K2 (n=2).
    static OuterplaneEmbedding degenerate(int n);

    int order() const { return static_cast<int>(outer_.size()); }
    bool is_degenerate() const { return degenerate_; }
    const std::vector<int>& outer() const { return outer_; }
    const std::vector<Edge>& chords() const { return chords_; }
    int position(int v) const { return pos_[v]; }

    /// Rebuilds the underlying graph (outer cycle edges plus chords).
    Graph graph() const;

  private:
    OuterplaneEmbedding() = default;
    std::vector<int> outer_;
    std::vector<Edge> chords_; // sorted canonically
    std::vector<int> pos_;     // vertex -> index in outer_
    bool degenerate_ = false;
};

/// Bounded face of an embedding. The boundary is a cycle listed in traversal
/// order, rotated so the smallest vertex comes first.
struct InnerFace {
    std::vector<int> boundary;
    int size() const { return static_cast<int>(boundary.size()); }
};

/// Decides outerplanarity (no K4 minor, no K2,3 minor) by attempting an
/// embedding of every biconnected block. Near-linear; handles constructed
/// graphs with hundreds of vertices.
bool is_outerplanar(const Graph& g);

/// Embeds a 2-connected outerplanar graph (or K1/K2). The Hamilton cycle of
/// such a graph is unique, so the result is canonical: it is rotated to
/// start at vertex 0 with the smaller neighbor second.
/// Throws NotBiconnectedError / NotOuterplanarError.
OuterplaneEmbedding embed(const Graph& g);

/// All bounded faces, each a cycle; there are exactly e - n + 1 of them.
/// Throws DomainError for degenerate embeddings.
std::vector<InnerFace> inner_faces(const OuterplaneEmbedding& emb);

/// True iff g is edge-maximal outerplanar: 2-connected (or K2) with
/// e = 2n - 3, equivalently every inner face is a triangle.
bool is_maximal_outerplanar(const Graph& g);

} // namespace opturan

#endif
