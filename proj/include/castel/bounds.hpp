#pragma once

#include "castel/bigint.hpp"
#include "castel/combinatorics.hpp"
#include "castel/errors.hpp"

namespace castel {

// ambient invariants of an embedded n-fold: dimension n, codimension r in
// P^(n+r), degree d of the polarization
struct EmbeddedVariety {
    long long n = 1;
    long long r = 0;
    long long d = 1;
    bool kodaira_nonneg = false;
};

inline void check_variety(const EmbeddedVariety& v) {
    if (v.n < 1) throw DomainError("dimension n must be >= 1");
    if (v.r < 0) throw DomainError("codimension r must be >= 0");
    if (v.d < 1) throw DomainError("degree d must be >= 1");
}

// break point and remainder of the step function h(k) = min(d, kr+1):
// c = floor((d-1)/r), R = d-1-c*r, so 0 <= R < r
struct CastelnuovoProfile {
    long long c;
    long long R;
};

inline CastelnuovoProfile castelnuovo_profile(long long d, long long r) {
    if (r < 1) throw DomainError("profile needs r >= 1");
    if (d < 1) throw DomainError("profile needs d >= 1");
    long long c = (d - 1) / r;
    return {c, d - 1 - c * r};
}

// d*binom(t+n-1, n) + binom(t+n-1, n-1), the integral rearrangement of
// (dt+n)/(t+n) * binom(t+n, n)
inline BigInteger upper_bound_h0(const EmbeddedVariety& v, long long t) {
    check_variety(v);
    if (t < 0) throw DomainError("t must be >= 0");
    return v.d * binom(t + v.n - 1, v.n) + binom(t + v.n - 1, v.n - 1);
}

// binom(t+n+1, n+1); asserted only below the degree
inline BigInteger easy_lower_bound(const EmbeddedVariety& v, long long t) {
    check_variety(v);
    if (t < 0) throw DomainError("t must be >= 0");
    if (t >= v.d) throw DomainError("easy lower bound needs t < d");
    return binom(t + v.n + 1, v.n + 1);
}

// four-term closed form of the iterated step-function sum:
//   r*binom(n+t, n+1) + binom(n+t, n) - r*binom(n+t-c-1, n+1)
//   + (R-r)*binom(n+t-c-1, n)
// Out-of-range binomials vanish by convention, which is what makes the
// form valid for every t >= 0.
inline BigInteger castelnuovo_lower_bound(const EmbeddedVariety& v, long long t) {
    check_variety(v);
    if (v.r < 1) throw DomainError("lower bound needs codimension r >= 1");
    if (v.d < v.r + 1) throw DomainError("nondegenerate embedding needs d >= r+1");
    if (t < 0) throw DomainError("t must be >= 0");
    auto [c, R] = castelnuovo_profile(v.d, v.r);
    return v.r * binom(v.n + t, v.n + 1) + binom(v.n + t, v.n)
         - v.r * binom(v.n + t - c - 1, v.n + 1)
         + (R - v.r) * binom(v.n + t - c - 1, v.n);
}

// specialization of the closed form at R = 0, c = 1, where it is smallest;
// integral form of (tr+n+1)/(t+n+1)*binom(t+n+1, n+1) - r*binom(t+n-1, n+1)
inline BigInteger simplified_lower_bound(long long n, long long r, long long t) {
    if (n < 1 || r < 1) throw DomainError("simplified bound needs n >= 1 and r >= 1");
    if (t < 0) throw DomainError("t must be >= 0");
    return r * binom(t + n, n + 1) + binom(t + n, n) - r * binom(t + n - 1, n + 1);
}

// specialization at R = 0, c = n, valid once the profile break point
// reaches n, i.e. d >= rn+2
inline BigInteger kodaira_lower_bound(const EmbeddedVariety& v, long long t) {
    check_variety(v);
    if (!v.kodaira_nonneg) throw DomainError("kodaira variant needs the kodaira_nonneg flag");
    if (v.r < 1) throw DomainError("lower bound needs codimension r >= 1");
    if (v.d < v.r * v.n + 2) throw DomainError("kodaira variant needs d >= rn+2");
    if (t < 0) throw DomainError("t must be >= 0");
    return v.r * binom(t + v.n, v.n + 1) + binom(t + v.n, v.n) - v.r * binom(t, v.n + 1);
}

}  // namespace castel
