#ifndef OPTURAN_FORMULAS_HPP
#define OPTURAN_FORMULAS_HPP

#include <optional>

#include "opturan/errors.hpp"

namespace opturan {

enum class Family { cycle, path };

enum class PathRegime { connected_wins, bounded_wins, tie };

/// A closed-form extremal value together with its derivation parameters.
/// All arithmetic is exact integer floor/ceiling; nothing here touches
/// floating point.
struct TuranValue {
    long long n = 0;
    long long k = 0;
    Family family = Family::cycle;
    long long value = 0;
    bool boundary = false; // outside the main theorem's stated domain

    // cycle family, n >= k
    std::optional<long long> lambda;

    // path family, k >= 4, n >= k
    std::optional<long long> ex_connected;
    std::optional<long long> ex_bounded;
    std::optional<long long> min_t;
    std::optional<PathRegime> regime;
};

/// lambda = floor((kn - 2k - 1) / (k^2 - 2k - 1)) + 1, for n >= k >= 3.
/// Always >= 2 on its domain.
long long lambda(long long n, long long k);

/// Maximum edges of an n-vertex outerplanar graph with no k-cycle.
/// n = 1 gives 0, 2 <= n <= k-1 gives 2n-3, n >= k uses the lambda formula
/// with its divisibility case split.
TuranValue ex_cycle(long long n, long long k);

/// Connected hosts: 2n - ceil((n-k+1)/(floor(k/2)-1)) - 4 for n >= k >= 4;
/// also reports min_t with value = 2n - min_t - 2.
TuranValue ex_path_connected(long long n, long long k);

/// Hosts with every component of order <= k-1: two-case formula on
/// n mod (k-1), for n >= k >= 4.
TuranValue ex_path_bounded(long long n, long long k);

/// Maximum edges of an n-vertex outerplanar graph with no path on k
/// vertices. k = 3 gives floor(n/2); n < k gives 2n-3; otherwise the larger
/// of the connected and bounded values, with the winning regime recorded.
TuranValue ex_path(long long n, long long k);

/// Sign of ex_path_connected - ex_path_bounded, for n >= k >= 4.
PathRegime path_regime(long long n, long long k);

} // namespace opturan

#endif
