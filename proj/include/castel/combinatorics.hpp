#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "castel/bigint.hpp"
#include "castel/errors.hpp"

namespace castel {

// binom(m, q) with the zero convention: 0 whenever q < 0, q > m, or m < 0.
// Out-of-range terms in the bound formulas stand for empty sums, so they
// must vanish rather than extend to generalized binomials.
inline BigInteger binom(long long m, long long q) {
    if (q < 0 || m < 0 || q > m) return 0;
    long long k = std::min(q, m - q);
    BigInteger acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= m - k + i;
        acc /= i;  // exact: acc is binom(m-k+i, i) at every step
    }
    return acc;
}

// binom(b+m+1, q+1) - binom(m, q+1), which telescopes the column sum
// sum_{i=0}^{b} binom(i+m, q)
inline BigInteger hockey_stick(long long b, long long m, long long q) {
    return binom(b + m + 1, q + 1) - binom(m, q + 1);
}

// depth-fold nested sum of the step function h(k) = min(d, k*r + 1),
// outermost index running to t. One prefix-sum pass per nesting level;
// row[j] holds the level-p partial value at j after pass p.
inline BigInteger iterated_castel_sum(long long d, long long r, long long depth, long long t) {
    if (d < 1 || r < 1 || depth < 1) throw DomainError("iterated sum needs d, r, depth >= 1");
    if (t < 0) throw DomainError("iterated sum needs t >= 0");
    std::vector<BigInteger> row(static_cast<std::size_t>(t) + 1);
    for (long long k = 0; k <= t; ++k)
        row[static_cast<std::size_t>(k)] = std::min(d, k * r + 1);
    for (long long pass = 0; pass < depth; ++pass)
        for (std::size_t j = 1; j < row.size(); ++j) row[j] += row[j - 1];
    return row.back();
}

}  // namespace castel
