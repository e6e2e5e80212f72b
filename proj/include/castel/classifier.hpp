#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "castel/bigint.hpp"
#include "castel/bounds.hpp"
#include "castel/citations.hpp"
#include "castel/combinatorics.hpp"
#include "castel/errors.hpp"
#include "castel/existence.hpp"

namespace castel {

// declared hypotheses about the center of projection. Nothing here is
// inferred; the rules only consume what the caller asserts.
struct SubvarietyProfile {
    long long k = 1;
    bool is_linear_pk = false;     // degree 1 and isomorphic to P^k
    bool pic_rank_one = false;     // algebraic h^2 equals 1
    std::optional<long long> cohomology_like_pk_through;  // h^{2j} algebraic = 1 for j <= this
    bool is_k_pi_1 = false;

    bool has_pic_rank_one() const { return pic_rank_one || is_linear_pk; }
    bool cohomology_through(long long j) const {
        if (is_linear_pk) return true;
        return cohomology_like_pk_through.has_value() && *cohomology_like_pk_through >= j;
    }
};

struct DimZBound {
    BigRational exact;
    long long ceiling;       // the operative integer bound
    bool conditional;
    std::string condition;   // empty when unconditional
    Rule rule;
};

struct StructuralVerdict {
    std::string tag;
    Rule rule;
};

struct ClassificationVerdict {
    std::vector<DimZBound> dim_z_lower_bounds;
    std::vector<StructuralVerdict> structural;
    std::vector<std::string> contradictions;
    std::vector<std::string> warnings;
};

namespace detail {
inline void push_bound(ClassificationVerdict& v, BigRational value, Rule rule,
                       bool conditional = false, std::string condition = {}) {
    long long ceiling = rational_ceiling(value).convert_to<long long>();
    v.dim_z_lower_bounds.push_back({std::move(value), ceiling, conditional,
                                    std::move(condition), rule});
}
}  // namespace detail

// lower bounds for the image dimension of the projection away from the
// declared center. Every applicable rule contributes one entry; rational
// bounds carry both the exact value and the integer ceiling.
inline ClassificationVerdict dim_z_bounds(long long n, const SubvarietyProfile& y,
                                          bool assume_hartshorne, bool x_is_ci) {
    long long k = y.k;
    if (n < 2) throw DomainError("need ambient dimension n >= 2");
    if (k < 1 || k > n - 1) throw DomainError("need 1 <= k <= n-1");
    ClassificationVerdict out;

    detail::push_bound(out, BigRational(n - k - 1), Rule::Dimension);

    if (y.is_k_pi_1 && k >= 2 && n >= 3)
        detail::push_bound(out, BigRational(n - k), Rule::KP1);

    if (y.has_pic_rank_one()) {
        detail::push_bound(out, BigRational(n - k) + BigRational(k, n - k) - 1,
                           Rule::BetterB, true, "applies when dim Z >= n-k");
        if (n < 2 * k)
            out.contradictions.push_back(
                "dim Z = n-k forces n >= 2k; here n = " + std::to_string(n) + " < "
                + std::to_string(2 * k) + " = 2k, so dim Z = n-k cannot occur");
    }

    if (y.cohomology_through(n - k)) {
        detail::push_bound(out, BigRational(k), Rule::ThmB, true,
                           "unless Z = P^(n-k-1) and Y is the complete intersection of "
                           "n-k members of |L|");
        if (!x_is_ci)
            detail::push_bound(out, BigRational(n, 2), Rule::Ceil, true,
                               "assumes Y is not a complete intersection");
    }

    if (y.is_linear_pk)
        detail::push_bound(out, BigRational(k), Rule::HardCor, true,
                           "unless Z = P^(n-k-1) with (X,L) = (P^n, O(1))");

    if (assume_hartshorne && !x_is_ci && y.is_linear_pk)
        detail::push_bound(out, BigRational(n - k) + BigRational(k, 3) - 1, Rule::HartC,
                           true,
                           "conditional on Hartshorne's conjecture; assumes X is not a "
                           "complete intersection");
    return out;
}

// structural consequences of a declared image dimension
inline ClassificationVerdict classify_at_dim(long long n, const SubvarietyProfile& y,
                                             long long dim_z) {
    long long k = y.k;
    if (n < 2) throw DomainError("need ambient dimension n >= 2");
    if (k < 1 || k > n - 1) throw DomainError("need 1 <= k <= n-1");
    if (dim_z < n - k - 1) throw DomainError("dim Z < n-k-1 is impossible");
    if (dim_z > n) throw DomainError("dim Z cannot exceed n");
    ClassificationVerdict out;
    if (dim_z == n - k - 1) {
        out.structural.push_back(
            {"Z = P^(" + std::to_string(n - k - 1) + "); Y is the complete intersection of "
             + std::to_string(n - k) + " members of |L|",
             Rule::Dimension});
        if (y.is_linear_pk)
            out.structural.push_back(
                {"(X, L) = (P^" + std::to_string(n) + ", O(1))", Rule::Pk});
        if (y.is_k_pi_1 && k >= 2 && n >= 3)
            out.contradictions.push_back(
                "a K(pi,1) of dimension >= 2 cannot be the required complete "
                "intersection, so dim Z = n-k-1 is impossible");
    }
    if (dim_z == n - k && y.is_linear_pk && k >= 2)
        out.structural.push_back(
            {"X is a hypersurface in P^(" + std::to_string(n + 1) + "); h0(L) <= "
             + std::to_string(n + 2),
             Rule::Alan});
    return out;
}

// divisor-case verdicts for the adjoint-type bundle delta*L - D. The
// conjectural branch needs q, the codimension of D in its linear span.
inline ClassificationVerdict divisor_rules(const EmbeddedVariety& x, const Subvariety& dv,
                                           bool assume_castelnuovo_conjecture = false) {
    check_variety(x);
    if (x.n < 2) throw DomainError("divisor rules need n >= 2");
    if (dv.k != x.n - 1) throw DomainError("divisor case needs k = n-1");
    check_subvariety(x, dv);
    if (assume_castelnuovo_conjecture && !dv.q)
        throw DomainError("conjectural branch needs q");

    ClassificationVerdict out;
    out.structural.push_back(
        {"delta*L - D is 1-ample unless (X, L, O(D)) = (P^n, O(1), O(delta))",
         Rule::OneAmple});

    if (dv.delta > 1) {
        out.structural.push_back(
            {"the morphism of |delta*L - D| is birational, the P^n triple excluded",
             Rule::Properties});
        if (x.n >= x.r + 2)
            out.structural.push_back(
                {"delta*L - D is very ample since n >= r+2", Rule::Properties});
    } else {
        out.warnings.push_back(
            "delta = 1: birationality and very-ampleness criteria need delta > 1; "
            "only the 1-ampleness verdict applies");
    }

    if (assume_castelnuovo_conjecture && dv.delta > 1) {
        long long q = *dv.q;
        if (x.n >= x.r + 2) {
            out.structural.push_back(
                {"(delta-q+1)L - D is very ample unless X = P^n with D = delta*L",
                 Rule::PropertiesCast});
        } else {
            bool exceptional = q == x.r + 1
                && (x.n == x.r + 1 || (x.n < x.r + 1 && dv.delta == x.r + 2));
            if (exceptional)
                out.structural.push_back(
                    {"exceptional case q = r+1: birationality of |(delta-q+1)L - D| is "
                     "not guaranteed",
                     Rule::PropertiesCast});
            else
                out.structural.push_back(
                    {"the morphism of |(delta-q+1)L - D| is birational",
                     Rule::PropertiesCast});
        }
    } else if (assume_castelnuovo_conjecture) {
        out.warnings.push_back(
            "delta = 1: the conjectural branch needs delta > 1 and is skipped");
    }
    return out;
}

// bound on the first Chern class of the normal bundle of a linear P^k
// center; the caller asserts none of the listed exception cases hold
inline long long chern_bound(long long n, long long k) {
    if (n < 2) throw DomainError("need n >= 2");
    if (k < 1 || k > n - 1) throw DomainError("need 1 <= k <= n-1");
    return n - 2 - k;
}

// exception list for spannedness of K_X + (n-1)L over a linear P^k
// center, filtered by the side constraints each case carries
inline std::vector<StructuralVerdict> adjoint_exceptions(long long n,
                                                         const SubvarietyProfile& y) {
    if (!y.is_linear_pk) throw DomainError("exception list needs a linear P^k center");
    long long k = y.k;
    if (n < 2) throw DomainError("need n >= 2");
    if (k < 1 || k > n - 1) throw DomainError("need 1 <= k <= n-1");
    std::vector<StructuralVerdict> out;
    out.push_back({"(X, L) = (P^" + std::to_string(n) + ", O(1)) with dim Z = "
                   + std::to_string(n - k - 1),
                   Rule::Easy});
    if (k <= n / 2)
        out.push_back({"(X, L) = quadric in P^" + std::to_string(n + 1) + " with dim Z = "
                       + std::to_string(n - k),
                       Rule::Easy});
    if (k == 1)
        out.push_back({"scroll over a smooth curve with Y a section of the projection",
                       Rule::Easy});
    if (k == n - 1)
        out.push_back({"(X, L) = (P^" + std::to_string(n - 1) + " x P^1, O(1,1))",
                       Rule::Easy});
    return out;
}

// degree of the polarization for a degenerate triple with normal bundle
// twist s: sum_{j=1}^{n} binom(n,j) s^(j-1), which is n at s = 0 and
// ((s+1)^n - 1)/s for s >= 1
inline BigInteger degree_formula(long long n, long long s) {
    if (n < 1) throw DomainError("need n >= 1");
    if (s < 0) throw DomainError("degree formula needs s >= 0");
    BigInteger acc = 0, pw = 1;
    for (long long j = 1; j <= n; ++j) {
        acc += binom(n, j) * pw;
        pw *= s;
    }
    return acc;
}

// one factorization of (s+1)^(n-1) into fiber degree and base degree
struct DegenerateTriple {
    long long n;
    long long s;
    BigInteger fiber_deg;
    BigInteger base_deg;
};

struct TripleAnalysis {
    BigInteger degree;
    std::vector<DegenerateTriple> pairs;
    ClassificationVerdict verdicts;
};

namespace detail {

// distinct prime factors with multiplicity, trial division
inline std::vector<std::pair<long long, long long>> factorize(long long v) {
    std::vector<std::pair<long long, long long>> out;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        long long e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (v > 1) out.push_back({v, 1});
    return out;
}

inline std::vector<BigInteger> divisors_of_power(long long base, long long exp,
                                                 std::size_t cap) {
    std::vector<BigInteger> divs{1};
    for (auto [p, e] : factorize(base)) {
        long long total = e * exp;
        std::size_t grown = divs.size() * static_cast<std::size_t>(total + 1);
        if (grown > cap) throw DomainError("divisor enumeration exceeds the cap");
        std::vector<BigInteger> next;
        next.reserve(grown);
        BigInteger pw = 1;
        for (long long i = 0; i <= total; ++i) {
            for (const auto& d : divs) next.push_back(d * pw);
            pw *= p;
        }
        divs.swap(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

// arithmetic of a degenerate triple: the degree, every fiber/base degree
// factorization compatible with the product relation, and the structural
// verdicts the surviving factorizations admit
inline TripleAnalysis degenerate_triple_analyze(long long n, long long s) {
    if (n < 2) throw DomainError("degenerate triple needs n >= 2");
    if (s < -1) throw DomainError("normal bundle twist must satisfy s >= -1");
    TripleAnalysis out;
    if (s == -1) {
        out.degree = 1;
        out.verdicts.structural.push_back({"(X, L) = (P^n, O(1))", Rule::Kn1});
        return out;
    }
    out.degree = degree_formula(n, s);

    BigInteger target = 1;
    for (long long i = 0; i < n - 1; ++i) target *= s + 1;
    std::vector<BigInteger> divs = detail::divisors_of_power(s + 1, n - 1, 1 << 14);

    bool removed_two = false;
    for (const auto& t : divs) {
        if (n == 3 && s >= 1 && t == 2) {
            removed_two = true;
            continue;
        }
        out.pairs.push_back({n, s, t, target / t});
    }

    out.verdicts.structural.push_back(
        {"fiber degree 1: X = P(O(" + std::to_string(s + 1) + ") + O(1)) over P^("
         + std::to_string(n - 1) + ")",
         Rule::ExTh});
    if (s == 0)
        out.verdicts.structural.push_back(
            {"(X, L) = (P^" + std::to_string(n - 1) + " x P^1, O(1,1))", Rule::ExCor});
    if (removed_two)
        out.verdicts.structural.push_back(
            {"fiber degree 2 removed for n = 3, s >= 1",
             s == 1 ? Rule::Threer1 : Rule::Caset2});
    if (n == 3 && s == 1)
        out.verdicts.structural.push_back(
            {"fiber degree 4: X is the blowup at one point of the complete intersection "
             "of three quadrics in P^6",
             Rule::Threer1});
    if (n >= 3 && s == 1)
        out.verdicts.structural.push_back(
            {"the first reduction exists; the reduction map is an isomorphism unless it "
             "contracts exactly P to a point",
             Rule::MoreAdj});
    return out;
}

}  // namespace castel
