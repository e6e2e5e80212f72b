#pragma once

#include <cstddef>
#include <vector>

#include "castel/bigint.hpp"
#include "castel/combinatorics.hpp"
#include "castel/errors.hpp"

namespace castel {

// product of projective spaces P^{p_1} x ... x P^{p_m}
struct MultiProjective {
    std::vector<long long> factor_dims;

    long long total_dim() const {
        long long n = 0;
        for (long long p : factor_dims) n += p;
        return n;
    }
};

inline void check_space(const MultiProjective& s) {
    if (s.factor_dims.empty()) throw DomainError("need at least one factor");
    for (long long p : s.factor_dims)
        if (p < 1) throw DomainError("factor dimensions must be positive");
}

// line bundle class O(a_1, ..., a_m)
struct Multidegree {
    std::vector<BigInteger> degrees;
};

inline Multidegree uniform_degree(const MultiProjective& s, const BigInteger& a) {
    return {std::vector<BigInteger>(s.factor_dims.size(), a)};
}

// monomial count: product over factors of binom(a_i + p_i, p_i), zero as
// soon as one a_i is negative
inline BigInteger h0_multidegree(const MultiProjective& space, const Multidegree& deg) {
    check_space(space);
    if (deg.degrees.size() != space.factor_dims.size())
        throw DomainError("multidegree length must match the factor count");
    BigInteger acc = 1;
    for (std::size_t i = 0; i < deg.degrees.size(); ++i) {
        const BigInteger& a = deg.degrees[i];
        if (a < 0) return 0;
        long long p = space.factor_dims[i];
        // binom(a+p, p) as a running product, exact division at each step
        BigInteger f = 1;
        for (long long j = 1; j <= p; ++j) {
            f *= a + j;
            f /= j;
        }
        acc *= f;
    }
    return acc;
}

// coefficient of H_1^{p_1}...H_m^{p_m} in prod_i (sum_j a_ij H_j), taken
// in the ring truncated by H_j^{p_j+1} = 0. Dense mixed-radix layout, the
// top monomial sits at the last index.
inline BigInteger intersection_number(const MultiProjective& space,
                                      const std::vector<Multidegree>& classes) {
    check_space(space);
    const std::size_t m = space.factor_dims.size();
    const long long n = space.total_dim();
    if (static_cast<long long>(classes.size()) != n)
        throw DomainError("need exactly n = total dimension classes");
    for (const auto& c : classes)
        if (c.degrees.size() != m)
            throw DomainError("multidegree length must match the factor count");

    std::vector<std::size_t> stride(m);
    std::size_t size = 1;
    for (std::size_t j = 0; j < m; ++j) {
        stride[j] = size;
        size *= static_cast<std::size_t>(space.factor_dims[j]) + 1;
    }

    std::vector<BigInteger> poly(size), next(size);
    poly[0] = 1;
    std::vector<std::size_t> expo(m);
    for (const auto& c : classes) {
        std::fill(next.begin(), next.end(), BigInteger(0));
        expo.assign(m, 0);
        for (std::size_t idx = 0; idx < size; ++idx) {
            const BigInteger& coef = poly[idx];
            if (coef != 0) {
                for (std::size_t j = 0; j < m; ++j) {
                    if (expo[j] == static_cast<std::size_t>(space.factor_dims[j]))
                        continue;  // H_j^(p_j+1) = 0
                    if (c.degrees[j] != 0) next[idx + stride[j]] += coef * c.degrees[j];
                }
            }
            // advance the mixed-radix exponent vector alongside idx
            for (std::size_t j = 0; j < m; ++j) {
                if (++expo[j] <= static_cast<std::size_t>(space.factor_dims[j])) break;
                expo[j] = 0;
            }
        }
        poly.swap(next);
    }
    return poly[size - 1];
}

// degree of the Segre embedding, n copies of O(1,...,1); equals the
// multinomial n!/(p_1!...p_m!)
inline BigInteger segre_degree(const MultiProjective& space) {
    check_space(space);
    std::vector<Multidegree> ones(static_cast<std::size_t>(space.total_dim()),
                                  uniform_degree(space, 1));
    return intersection_number(space, ones);
}

}  // namespace castel
