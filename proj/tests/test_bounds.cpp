#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "castel/bounds.hpp"
#include "castel/combinatorics.hpp"
#include "castel/errors.hpp"

using castel::BigInteger;
using castel::binom;
using castel::castelnuovo_lower_bound;
using castel::castelnuovo_profile;
using castel::DomainError;
using castel::easy_lower_bound;
using castel::EmbeddedVariety;
using castel::iterated_castel_sum;
using castel::kodaira_lower_bound;
using castel::simplified_lower_bound;
using castel::upper_bound_h0;

TEST_CASE("degree profile") {
    auto p = castelnuovo_profile(8, 3);
    CHECK(p.c == 2);
    CHECK(p.R == 1);
    p = castelnuovo_profile(7, 3);
    CHECK(p.c == 2);
    CHECK(p.R == 0);
    CHECK_THROWS_AS(castelnuovo_profile(0, 3), DomainError);
    CHECK_THROWS_AS(castelnuovo_profile(5, 0), DomainError);
}

TEST_CASE("upper bound spot values and rational form") {
    CHECK(upper_bound_h0({1, 0, 5}, 3) == 16);
    CHECK(upper_bound_h0({7, 0, 3}, 0) == 1);
    CHECK(upper_bound_h0({2, 0, 2}, 3) == 16);
    // (dt+n) * C(t+n, n) is divisible by t+n and the quotient is the bound
    long long bad = 0;
    for (long long n = 1; n <= 6; ++n)
        for (long long d = 1; d <= 40; ++d)
            for (long long t = 0; t <= 12; ++t) {
                BigInteger num = (BigInteger(d) * t + n) * binom(t + n, n);
                if (num % (t + n) != 0) ++bad;
                else if (num / (t + n) != upper_bound_h0({n, 0, d}, t)) ++bad;
            }
    CHECK(bad == 0);
}

TEST_CASE("elementary lower bound") {
    CHECK(easy_lower_bound({2, 0, 9}, 1) == 4);
    CHECK(easy_lower_bound({5, 0, 2}, 0) == 1);
    CHECK(easy_lower_bound({3, 0, 7}, 2) == 15);
    CHECK_THROWS_AS(easy_lower_bound({2, 0, 3}, 3), DomainError);
    CHECK_THROWS_AS(easy_lower_bound({2, 0, 3}, 5), DomainError);
}

TEST_CASE("degree-aware lower bound spot values") {
    CHECK(castelnuovo_lower_bound({2, 3, 8}, 2) == 18);
    CHECK(castelnuovo_lower_bound({3, 2, 3}, 1) == 6);
    CHECK(castelnuovo_lower_bound({4, 3, 10}, 0) == 1);
    CHECK_THROWS_AS(castelnuovo_lower_bound({2, 0, 5}, 1), DomainError);
    CHECK_THROWS_AS(castelnuovo_lower_bound({2, 3, 3}, 1), DomainError);  // d < r+1
    CHECK_THROWS_AS(castelnuovo_lower_bound({2, 3, 8}, -1), DomainError);
}

TEST_CASE("closed form equals iterated sum on a medium grid") {
    long long bad = 0;
    std::string first;
    for (long long n = 1; n <= 4; ++n)
        for (long long r = 1; r <= 4; ++r)
            for (long long d = r + 1; d <= 20; ++d)
                for (long long t = 0; t <= 8; ++t)
                    if (castelnuovo_lower_bound({n, r, d}, t)
                        != iterated_castel_sum(d, r, n, t)) {
                        if (bad == 0)
                            first = "n=" + std::to_string(n) + " r=" + std::to_string(r)
                                    + " d=" + std::to_string(d) + " t="
                                    + std::to_string(t);
                        ++bad;
                    }
    INFO(first);
    CHECK(bad == 0);
}

TEST_CASE("large degree freezes the bound") {
    // once d > rt the clipped column never triggers: the bound equals
    // r*C(n+t, n+1) + C(n+t, n) independently of d
    long long bad = 0;
    for (long long n = 1; n <= 5; ++n)
        for (long long r = 1; r <= 5; ++r)
            for (long long t = 0; t <= 10; ++t) {
                BigInteger flat = r * binom(n + t, n + 1) + binom(n + t, n);
                for (long long d : {r * t + 1, r * t + 100, n * r * t + 2}) {
                    if (d < r + 1) continue;
                    if (castelnuovo_lower_bound({n, r, d}, t) != flat) ++bad;
                    if (iterated_castel_sum(d, r, n, t) != flat) ++bad;
                }
            }
    CHECK(bad == 0);
}

TEST_CASE("degree-free form spot values and specialization") {
    CHECK(simplified_lower_bound(4, 4, 2) == 35);
    CHECK(simplified_lower_bound(4, 4, 1) == 9);
    CHECK(simplified_lower_bound(3, 2, 0) == 1);
    // equals the degree-aware bound at the minimal degree d = r+1
    long long bad = 0;
    for (long long n = 1; n <= 5; ++n)
        for (long long r = 1; r <= 6; ++r)
            for (long long t = 0; t <= 12; ++t)
                if (simplified_lower_bound(n, r, t)
                    != castelnuovo_lower_bound({n, r, r + 1}, t))
                    ++bad;
    CHECK(bad == 0);
}

TEST_CASE("degree-free form is a lower envelope") {
    long long bad = 0;
    for (long long n = 1; n <= 5; ++n)
        for (long long r = 1; r <= 6; ++r)
            for (long long d = r + 1; d <= 40; ++d)
                for (long long t = 0; t <= 12; ++t)
                    if (simplified_lower_bound(n, r, t)
                        > castelnuovo_lower_bound({n, r, d}, t))
                        ++bad;
    CHECK(bad == 0);
}

TEST_CASE("Kodaira-case bound") {
    CHECK(kodaira_lower_bound({2, 1, 4, true}, 1) == 4);
    CHECK(kodaira_lower_bound({5, 2, 12, true}, 0) == 1);
    CHECK(kodaira_lower_bound({2, 2, 8, true}, 3) == 28);
    CHECK_THROWS_AS(kodaira_lower_bound({2, 1, 4, false}, 1), DomainError);
    CHECK_THROWS_AS(kodaira_lower_bound({2, 1, 3, true}, 1), DomainError);  // d < rn+2
    CHECK_THROWS_AS(kodaira_lower_bound({2, 0, 4, true}, 1), DomainError);
}

TEST_CASE("Kodaira-case bound equals the clipped bound at d = rn+1") {
    // the formula drops d, so it must match the degree-aware bound
    // evaluated where c = n and R = 0
    long long bad = 0;
    for (long long n = 1; n <= 5; ++n)
        for (long long r = 1; r <= 6; ++r)
            for (long long t = 0; t <= 12; ++t)
                if (kodaira_lower_bound({n, r, n * r + 2, true}, t)
                    != castelnuovo_lower_bound({n, r, n * r + 1}, t))
                    ++bad;
    CHECK(bad == 0);
}

TEST_CASE("variety validation") {
    CHECK_THROWS_AS(upper_bound_h0({0, 0, 1}, 1), DomainError);
    CHECK_THROWS_AS(upper_bound_h0({1, -1, 1}, 1), DomainError);
    CHECK_THROWS_AS(upper_bound_h0({1, 0, 0}, 1), DomainError);
    CHECK_THROWS_AS(upper_bound_h0({1, 0, 1}, -1), DomainError);
}
