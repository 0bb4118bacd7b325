#ifndef OPTURAN_ORACLE_HPP
#define OPTURAN_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "opturan/graph.hpp"
#include "opturan/outerplane.hpp"

namespace opturan {

/// Cursor over all triangulations of the convex n-gon with outer cycle
/// 0,1,...,n-1. Yields exactly Catalan(n-2) embeddings, each maximal
/// outerplanar with 2n-3 edges; every maximal outerplanar graph on n
/// vertices appears among them up to isomorphism.
class TriangulationIter {
  public:
    explicit TriangulationIter(int n); // DomainError for n < 3

    std::optional<OuterplaneEmbedding> next();
    long long count() const { return static_cast<long long>(chord_sets_.size()); }
    int polygon_order() const { return n_; }
    void reset() { idx_ = 0; }

  private:
    int n_;
    std::size_t idx_ = 0;
    std::vector<std::vector<Edge>> chord_sets_;
};

TriangulationIter enumerate_triangulations(int n);

/// Default caps keeping the oracle interactive. brute_ex at n = 9, 10 is an
/// opt-in with runtimes in the minutes; all_outerplanar grows like
/// (n-1)!/2 * Catalan(n-2) * 2^(2n-3) and is capped one step earlier.
inline constexpr int kBruteBudget = 10;
inline constexpr int kEnumerationBudget = 7;

/// Ground truth by exhaustion: the maximum edge count over all spanning
/// subgraphs of all polygon triangulations that satisfy `admissible`.
/// The predicate must be closed under taking subgraphs (H-freeness is), which
/// licenses the descending-size scan with early stop.
/// Throws BudgetError for n > budget.
long long brute_ex(int n, const std::function<bool(const Graph&)>& admissible,
                   int budget = kBruteBudget);

/// brute_ex plus one graph attaining the maximum.
struct BruteResult {
    long long value = 0;
    Graph witness;
};
BruteResult brute_ex_witness(int n, const std::function<bool(const Graph&)>& admissible,
                             int budget = kBruteBudget);

/// Independent recomputations of the closed-form values, with the detect
/// module's exact searches as the admissibility predicates.
long long brute_ex_cycle(int n, int k, int budget = kBruteBudget);
long long brute_ex_path(int n, int k, int budget = kBruteBudget);

/// Every labeled n-vertex outerplanar graph exactly once, found as spanning
/// subgraphs of triangulations over every cyclic vertex order and
/// deduplicated by labeled edge set. Sorted by edge mask for reproducibility.
std::vector<std::uint64_t> all_outerplanar_masks(int n, int budget = kEnumerationBudget);

/// Iterator facade over all_outerplanar_masks.
class OuterplanarEnumerator {
  public:
    explicit OuterplanarEnumerator(int n, int budget = kEnumerationBudget);
    std::optional<Graph> next();
    long long count() const { return static_cast<long long>(masks_.size()); }

  private:
    int n_;
    std::size_t idx_ = 0;
    std::vector<std::uint64_t> masks_;
};

OuterplanarEnumerator all_outerplanar(int n, int budget = kEnumerationBudget);

} // namespace opturan

#endif
