#pragma once

#include <optional>
#include <stdexcept>

#include "castel/bigint.hpp"
#include "castel/bounds.hpp"
#include "castel/combinatorics.hpp"
#include "castel/errors.hpp"

namespace castel {

// invariants of a k-dimensional subvariety of degree delta; q, when known,
// is the codimension of the subvariety in its linear span
struct Subvariety {
    long long k = 1;
    long long delta = 1;
    std::optional<long long> q;
};

inline void check_subvariety(const EmbeddedVariety& x, const Subvariety& y) {
    if (y.k < 1) throw DomainError("subvariety dimension k must be >= 1");
    if (y.delta < 1) throw DomainError("subvariety degree delta must be >= 1");
    if (y.q) {
        // delta >= q+1 and r >= q-1 hold for any linearly normal setup
        if (y.delta < *y.q + 1) throw DomainError("delta >= q+1 violated");
        if (x.r < *y.q - 1) throw DomainError("r >= q-1 violated");
    }
}

// integral form of (delta*t + k)/(t + k) * binom(t+k, k), the section
// count ceiling on the subvariety side of the comparison
inline BigInteger restricted_upper(long long delta, long long k, long long t) {
    return delta * binom(t + k - 1, k) + binom(t + k - 1, k - 1);
}

// true means a nonzero section of tL through Y is guaranteed; false means
// the criterion is inconclusive, never that sections are absent
inline bool section_guaranteed(const EmbeddedVariety& x, const Subvariety& y, long long t,
                               bool use_full_bound = false) {
    check_variety(x);
    check_subvariety(x, y);
    if (x.r < 1) throw DomainError("criterion needs codimension r >= 1");
    if (x.d < x.r + 1) throw DomainError("nondegenerate embedding needs d >= r+1");
    if (y.k > x.n - 1) throw DomainError("need 1 <= k <= n-1");
    if (t < 1) throw DomainError("t must be positive");
    BigInteger lower = use_full_bound ? castelnuovo_lower_bound(x, t)
                                      : simplified_lower_bound(x.n, x.r, t);
    return lower > restricted_upper(y.delta, y.k, t);
}

struct MinTResult {
    long long t;
    // set when no t in [1, delta+1] passed the criterion; delta+1 is then
    // still safe because the twisted ideal sheaf is spanned at delta
    bool mumford_fallback;
};

// linear scan; the lower bound is not known to be monotone in t, so no
// bisection
inline MinTResult min_t_guaranteed(const EmbeddedVariety& x, const Subvariety& y,
                                   bool use_full_bound = false) {
    for (long long t = 1; t <= y.delta + 1; ++t)
        if (section_guaranteed(x, y, t, use_full_bound)) return {t, false};
    return {y.delta + 1, true};
}

// least integer t >= 1 with t > n(delta-1)/(r+1) - n + 1, strict
inline long long divisor_threshold(long long n, long long r, long long delta) {
    if (n < 2) throw DomainError("divisor case needs n >= 2");
    if (r < 1) throw DomainError("need r >= 1");
    if (delta <= 1) throw DomainError("divisor degree must exceed 1");
    BigRational threshold = BigRational(n * (delta - 1), r + 1) - n + 1;
    BigInteger t = rational_floor(threshold) + 1;
    if (t < 1) return 1;
    return t.convert_to<long long>();
}

// discriminant for a nonzero section of (delta-1)L through a codimension 2
// subvariety, grouped by powers of delta:
//   (r+1)*delta^2 + (-n^2 + 2rn + 4n - 5r - 5)*delta
//   + (rn^2 + 3n^2 - 5rn - 9n + 6r + 6)
// Positive iff the defining bound comparison at t = delta-1, k = n-2
// succeeds; the suite pins the sign against that direct comparison and
// against an independently coded Horner evaluation.
inline BigInteger codim2_polynomial(long long n, long long r, long long delta) {
    BigInteger N = n, R = r, D = delta;
    BigInteger quad = (R + 1) * D * D;
    BigInteger lin = (-N * N + 2 * R * N + 4 * N - 5 * R - 5) * D;
    BigInteger cons = R * N * N + 3 * N * N - 5 * R * N - 9 * N + 6 * R + 6;
    return quad + lin + cons;
}

inline bool codim2_positive(long long n, long long r, long long delta) {
    if (n < 3) throw DomainError("codimension 2 case needs n >= 3");
    if (r < 1) throw DomainError("need r >= 1");
    if (delta < 1) throw DomainError("delta must be >= 1");
    return codim2_polynomial(n, r, delta) > 0;
}

// integer rearrangement of the defining inequality for the lower degree:
// prod_{j=n-1}^{N-1}(delta+j) - n*C <= C*d*(delta-1) with C = N!/n!
inline bool lower_degree_feasible(long long n, long long N, long long d, long long delta) {
    BigInteger C = 1;
    for (long long m = n + 1; m <= N; ++m) C *= m;
    BigInteger prod = 1;
    for (long long j = n - 1; j <= N - 1; ++j) prod *= delta + j;
    return prod - n * C <= C * d * (delta - 1);
}

// largest delta >= 2 satisfying the inequality, or 1 when delta = 2
// already fails. The left side grows strictly, so the scan stops at the
// first failure; a bounded probe guards the monotonicity assumption.
inline long long lower_degree_bound(long long n, long long N, long long d) {
    if (n < 1 || N <= n) throw DomainError("need N > n >= 1");
    if (d < 1) throw DomainError("degree must be >= 1");
    if (!lower_degree_feasible(n, N, d, 2)) return 1;
    long long delta = 2;
    while (lower_degree_feasible(n, N, d, delta + 1)) ++delta;
    for (long long probe = delta + 2; probe <= delta + 51; ++probe)
        if (lower_degree_feasible(n, N, d, probe))
            throw std::logic_error("lower degree feasibility re-entered past the first failure");
    return delta;
}

// surface specialization, delta^3 + 11 delta^2 + 46 delta + 96 <= 60 d
inline long long surface_lower_degree(long long d) {
    if (d < 1) throw DomainError("degree must be >= 1");
    auto ok = [&](long long delta) {
        BigInteger D = delta;
        return D * D * D + 11 * D * D + 46 * D + 96 <= BigInteger(60) * d;
    };
    if (!ok(2)) return 1;
    long long delta = 2;
    while (ok(delta + 1)) ++delta;
    return delta;
}

// threefold specializations: for N = 5 the quadratic
// delta^2 + 10 delta + 36 <= 20 d, for N >= 6 the cubic
// delta^3 + 15 delta^2 + 86 delta + 240 <= 120 d
inline long long threefold_lower_degree(long long d, long long N) {
    if (N < 5) throw DomainError("threefold bound needs N >= 5");
    if (d < 1) throw DomainError("degree must be >= 1");
    auto ok = [&](long long delta) {
        BigInteger D = delta;
        if (N == 5) return D * D + 10 * D + 36 <= BigInteger(20) * d;
        return D * D * D + 15 * D * D + 86 * D + 240 <= BigInteger(120) * d;
    };
    if (!ok(2)) return 1;
    long long delta = 2;
    while (ok(delta + 1)) ++delta;
    return delta;
}

}  // namespace castel
