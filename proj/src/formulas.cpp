#include "opturan/formulas.hpp"

#include <stdexcept>
#include <string>

namespace opturan {

namespace {

// Ceiling division for nonnegative operands only; the preconditions of every
// caller keep numerators nonnegative, which sidesteps the divergent negative
// floor/ceiling conventions.
long long ceil_div(long long a, long long b) {
    if (a < 0 || b <= 0)
        throw std::logic_error("ceil_div needs a >= 0, b > 0");
    return (a + b - 1) / b;
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw DomainError(what);
}

} // namespace

long long lambda(long long n, long long k) {
    require(k >= 3, "lambda needs k >= 3");
    require(n >= k, "lambda needs n >= k");
    return (k * n - 2 * k - 1) / (k * k - 2 * k - 1) + 1;
}

TuranValue ex_cycle(long long n, long long k) {
    require(k >= 3, "ex_cycle needs k >= 3");
    require(n >= 1, "ex_cycle needs n >= 1");
    TuranValue tv;
    tv.n = n;
    tv.k = k;
    tv.family = Family::cycle;
    if (n == 1) {
        tv.value = 0;
        tv.boundary = true;
        return tv;
    }
    if (n <= k - 1) {
        tv.value = 2 * n - 3; // every edge-maximal outerplanar graph qualifies
        tv.boundary = true;
        return tv;
    }
    const long long lam = lambda(n, k);
    tv.lambda = lam;
    tv.value = 2 * n - lam + 2 * (lam / k) - (lam % k == 0 ? 3 : 2);
    return tv;
}

TuranValue ex_path_connected(long long n, long long k) {
    require(k >= 4, "ex_path_connected needs k >= 4");
    require(n >= k, "ex_path_connected needs n >= k");
    const long long half = k / 2;
    const long long t = ceil_div(n - k + 2 * half - 1, half - 1);
    TuranValue tv;
    tv.n = n;
    tv.k = k;
    tv.family = Family::path;
    tv.min_t = t;
    tv.value = 2 * n - t - 2; // = 2n - ceil((n-k+1)/(half-1)) - 4
    tv.ex_connected = tv.value;
    return tv;
}

TuranValue ex_path_bounded(long long n, long long k) {
    require(k >= 4, "ex_path_bounded needs k >= 4");
    require(n >= k, "ex_path_bounded needs n >= k");
    const long long s = ceil_div(n, k - 1);
    TuranValue tv;
    tv.n = n;
    tv.k = k;
    tv.family = Family::path;
    tv.value = 2 * n - 3 * s + (n % (k - 1) == 1 ? 1 : 0);
    tv.ex_bounded = tv.value;
    return tv;
}

TuranValue ex_path(long long n, long long k) {
    require(k >= 3, "ex_path needs k >= 3");
    require(n >= 1, "ex_path needs n >= 1");
    TuranValue tv;
    tv.n = n;
    tv.k = k;
    tv.family = Family::path;
    if (k == 3) {
        tv.value = n / 2; // disjoint edges plus at most one isolated vertex
        tv.boundary = true;
        return tv;
    }
    if (n == 1) {
        tv.value = 0;
        tv.boundary = true;
        return tv;
    }
    if (n < k) {
        tv.value = 2 * n - 3; // every outerplanar graph on < k vertices qualifies
        tv.boundary = true;
        return tv;
    }
    const TuranValue conn = ex_path_connected(n, k);
    const TuranValue bounded = ex_path_bounded(n, k);
    tv.ex_connected = conn.value;
    tv.ex_bounded = bounded.value;
    tv.min_t = conn.min_t;
    tv.value = std::max(conn.value, bounded.value);
    tv.regime = conn.value > bounded.value  ? PathRegime::connected_wins
                : conn.value < bounded.value ? PathRegime::bounded_wins
                                             : PathRegime::tie;
    return tv;
}

PathRegime path_regime(long long n, long long k) {
    require(k >= 4, "path_regime needs k >= 4");
    require(n >= k, "path_regime needs n >= k");
    const long long diff = ex_path_connected(n, k).value - ex_path_bounded(n, k).value;
    return diff > 0 ? PathRegime::connected_wins
           : diff < 0 ? PathRegime::bounded_wins
                      : PathRegime::tie;
}

} // namespace opturan
