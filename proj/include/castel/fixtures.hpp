#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "castel/bigint.hpp"
#include "castel/citations.hpp"
#include "castel/classifier.hpp"
#include "castel/combinatorics.hpp"
#include "castel/errors.hpp"
#include "castel/existence.hpp"
#include "castel/fixtures_corpus.hpp"
#include "castel/oracle.hpp"

namespace castel {

struct CheckResult {
    std::string description;  // the directive line that was evaluated
    Rule rule;
    bool passed;
    std::string detail;
};

struct FixtureReport {
    std::string name;
    std::string note;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// one parsed record; check lines stay tokenized and are interpreted by the
// runner so a report always covers every line
struct FixtureData {
    std::string name;
    std::string note;
    std::optional<MultiProjective> space;
    std::map<std::string, Multidegree> bundles;
    std::vector<std::vector<std::string>> checks;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(std::move(t));
    return out;
}

inline long long to_ll(const std::string& s) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("bad integer token: " + s);
}

inline BigInteger to_big(const std::string& s) {
    try {
        return BigInteger(s);
    } catch (const std::exception&) {
        throw DomainError("bad integer token: " + s);
    }
}

inline bool known_check(const std::string& d) {
    static const char* const names[] = {"segre",
                                        "h0",
                                        "intersect",
                                        "section-iff",
                                        "divisor-threshold",
                                        "min-t",
                                        "embed",
                                        "degree-formula",
                                        "base-degree-unit",
                                        "prod-rel",
                                        "image-dim",
                                        "hypersurface-contains-linear",
                                        "linear-section-bundle"};
    for (const char* n : names)
        if (d == n) return true;
    return false;
}

}  // namespace detail

inline std::vector<FixtureData> parse_fixtures(std::istream& in) {
    std::vector<FixtureData> out;
    std::optional<FixtureData> cur;
    std::string line;
    int lineno = 0;
    auto where = [&lineno] { return " (fixtures line " + std::to_string(lineno) + ")"; };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tok = detail::split_ws(line);
        if (tok.empty()) continue;
        const std::string& d = tok[0];
        if (d == "fixture") {
            if (cur) throw DomainError("record not closed before a new one" + where());
            if (tok.size() != 2) throw DomainError("fixture needs exactly a name" + where());
            cur.emplace();
            cur->name = tok[1];
            continue;
        }
        if (!cur) throw DomainError("directive outside a fixture record" + where());
        if (d == "end") {
            out.push_back(std::move(*cur));
            cur.reset();
        } else if (d == "note") {
            std::string rest;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (i > 1) rest += ' ';
                rest += tok[i];
            }
            if (!cur->note.empty() && !rest.empty()) cur->note += ' ';
            cur->note += rest;
        } else if (d == "space") {
            if (cur->space) throw DomainError("duplicate space line" + where());
            if (tok.size() < 2) throw DomainError("space needs factor dimensions" + where());
            MultiProjective s;
            for (std::size_t i = 1; i < tok.size(); ++i)
                s.factor_dims.push_back(detail::to_ll(tok[i]));
            check_space(s);
            cur->space = std::move(s);
        } else if (d == "bundle") {
            if (tok.size() < 3) throw DomainError("bundle needs a name and degrees" + where());
            if (!cur->space) throw DomainError("bundle line before the space line" + where());
            Multidegree m;
            for (std::size_t i = 2; i < tok.size(); ++i)
                m.degrees.push_back(detail::to_big(tok[i]));
            if (m.degrees.size() != cur->space->factor_dims.size())
                throw DomainError("bundle length must match the factor count" + where());
            cur->bundles[tok[1]] = std::move(m);
        } else if (detail::known_check(d)) {
            if (tok.size() < 3 || tok[tok.size() - 2] != "cite")
                throw DomainError("check line must end with: cite <key>" + where());
            if (!find_citation(tok.back()))
                throw DomainError("unknown citation key " + tok.back() + where());
            cur->checks.push_back(std::move(tok));
        } else {
            throw DomainError("unrecognized directive " + d + where());
        }
    }
    if (cur) throw DomainError("unterminated fixture record " + cur->name);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].name == out[j].name)
                throw DomainError("duplicate fixture name " + out[i].name);
    return out;
}

// the env var points at an alternate corpus; read on every call so tests
// can flip it without a process restart
inline std::string corpus_text() {
    if (const char* p = std::getenv("CASTEL_FIXTURES")) {
        std::ifstream f(p, std::ios::binary);
        if (!f) throw DomainError(std::string("cannot read fixture file: ") + p);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    }
    return kFixtureCorpus;
}

inline std::vector<FixtureData> load_fixtures() {
    std::istringstream in(corpus_text());
    return parse_fixtures(in);
}

inline std::vector<std::string> list_fixtures() {
    std::vector<std::string> names;
    for (const auto& f : load_fixtures()) names.push_back(f.name);
    return names;
}

namespace detail {

inline const MultiProjective& need_space(const FixtureData& fx) {
    if (!fx.space) throw DomainError("this check needs a space line");
    return *fx.space;
}

inline const Multidegree& need_bundle(const FixtureData& fx, const std::string& name) {
    auto it = fx.bundles.find(name);
    if (it == fx.bundles.end()) throw DomainError("unknown bundle " + name);
    return it->second;
}

// term grammar: [+|-][mult]<bundle>, e.g. 2L, -D, +3H
inline Multidegree combine_terms(const FixtureData& fx,
                                 const std::vector<std::string>& terms) {
    Multidegree acc;
    acc.degrees.assign(need_space(fx).factor_dims.size(), BigInteger(0));
    for (const auto& t : terms) {
        std::size_t i = 0;
        BigInteger sign = 1;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
            if (t[i] == '-') sign = -1;
            ++i;
        }
        std::size_t ds = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        BigInteger mult = i > ds ? to_big(t.substr(ds, i - ds)) : BigInteger(1);
        const Multidegree& b = need_bundle(fx, t.substr(i));
        for (std::size_t j = 0; j < acc.degrees.size(); ++j)
            acc.degrees[j] += sign * mult * b.degrees[j];
    }
    return acc;
}

struct Outcome {
    bool passed;
    std::string detail;
};

inline Outcome got_want(const BigInteger& got, const BigInteger& want) {
    if (got == want) return {true, "got " + to_decimal(got)};
    return {false, "got " + to_decimal(got) + ", want " + to_decimal(want)};
}

// arg excludes the directive and the trailing "cite <key>"
inline Outcome evaluate_check(const FixtureData& fx, const std::string& d,
                              const std::vector<std::string>& arg) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (arg.size() < lo || arg.size() > hi)
            throw DomainError("wrong argument count for " + d);
    };
    auto kw = [&](std::size_t i, const char* w) {
        if (arg.at(i) != w) throw DomainError(d + " expects keyword " + w);
    };

    if (d == "segre") {
        need(2, 2);
        kw(0, "expect");
        return got_want(segre_degree(need_space(fx)), to_big(arg[1]));
    }
    if (d == "h0") {
        need(3, 16);
        kw(arg.size() - 2, "expect");
        std::vector<std::string> terms(arg.begin(), arg.end() - 2);
        return got_want(h0_multidegree(need_space(fx), combine_terms(fx, terms)),
                        to_big(arg.back()));
    }
    if (d == "intersect") {
        need(3, 16);
        kw(arg.size() - 2, "expect");
        std::vector<Multidegree> classes;
        for (std::size_t i = 0; i + 2 < arg.size(); ++i) {
            const std::string& f = arg[i];
            auto caret = f.find('^');
            std::string name = f.substr(0, caret);
            long long pow = caret == std::string::npos
                                ? 1
                                : to_ll(f.substr(caret + 1));
            if (pow < 1) throw DomainError("intersection power must be >= 1");
            for (long long p = 0; p < pow; ++p)
                classes.push_back(need_bundle(fx, name));
        }
        return got_want(intersection_number(need_space(fx), classes), to_big(arg.back()));
    }
    if (d == "section-iff") {
        need(6, 6);
        kw(2, "threshold");
        kw(4, "tmax");
        const Multidegree& a = need_bundle(fx, arg[0]);
        const Multidegree& b = need_bundle(fx, arg[1]);
        long long t0 = to_ll(arg[3]), tmax = to_ll(arg[5]);
        for (long long t = 1; t <= tmax; ++t) {
            Multidegree m;
            for (std::size_t j = 0; j < a.degrees.size(); ++j)
                m.degrees.push_back(t * a.degrees[j] - b.degrees[j]);
            bool has = h0_multidegree(need_space(fx), m) > 0;
            if (has != (t >= t0))
                return {false, "section test disagrees at t = " + std::to_string(t)};
        }
        return {true, "holds for 1 <= t <= " + std::to_string(tmax)};
    }
    if (d == "divisor-threshold") {
        need(5, 5);
        kw(3, "expect");
        long long got = divisor_threshold(to_ll(arg[0]), to_ll(arg[1]), to_ll(arg[2]));
        return got_want(got, to_big(arg[4]));
    }
    if (d == "min-t") {
        need(7, 7);
        kw(5, "expect");
        EmbeddedVariety x{to_ll(arg[0]), to_ll(arg[1]), to_ll(arg[2])};
        Subvariety y{to_ll(arg[3]), to_ll(arg[4])};
        MinTResult res = min_t_guaranteed(x, y);
        if (res.mumford_fallback)
            return {false, "fell back to delta+1 = " + std::to_string(res.t)};
        return got_want(res.t, to_big(arg[6]));
    }
    if (d == "embed") {
        need(5, 6);
        long long n = to_ll(arg[0]), h0 = to_ll(arg[1]), r = to_ll(arg[2]);
        long long q = to_ll(arg[3]), delta = to_ll(arg[4]);
        if (r != h0 - 1 - n) return {false, "r != h0 - 1 - n"};
        if (q != r + 1) return {false, "q != r + 1"};
        if (delta != q + 1) return {false, "delta != q + 1"};
        if (arg.size() == 6 && to_ll(arg[5]) < r + 1) return {false, "d < r + 1"};
        return {true, "embedding invariants consistent"};
    }
    if (d == "degree-formula") {
        need(4, 4);
        kw(2, "expect");
        return got_want(degree_formula(to_ll(arg[0]), to_ll(arg[1])), to_big(arg[3]));
    }
    if (d == "base-degree-unit") {
        need(3, 3);
        kw(1, "expect");
        long long n = to_ll(arg[0]);
        if (n < 2) throw DomainError("base-degree-unit needs n >= 2");
        long long h = 0;
        while (binom(h + n, n - 1) <= n) ++h;  // binom((h+1)+n-1, n-1)
        return got_want(h, to_big(arg[2]));
    }
    if (d == "prod-rel") {
        need(5, 5);
        kw(3, "expect-fiber");
        long long n = to_ll(arg[0]), s = to_ll(arg[1]);
        BigInteger base = to_big(arg[2]);
        if (n < 2 || s < 0 || base < 1) throw DomainError("prod-rel needs n >= 2, s >= 0, base >= 1");
        BigInteger target = 1;
        for (long long i = 0; i < n - 1; ++i) target *= s + 1;
        if (target % base != 0)
            return {false, "base does not divide (s+1)^(n-1) = " + to_decimal(target)};
        return got_want(target / base, to_big(arg[4]));
    }
    if (d == "image-dim") {
        need(3, 3);
        long long n = to_ll(arg[0]), k = to_ll(arg[1]), s = to_ll(arg[2]);
        if (s < 0 || s > k) throw DomainError("image-dim needs 0 <= s <= k");
        long long dim = n - k + s - 1;
        if (dim < n - k - 1) return {false, "dim below the universal floor"};
        if ((dim == n - k - 1) != (s == 0))
            return {false, "floor case must coincide with s = 0"};
        // section count through the center drops to dim + 1
        if (n - k + s != dim + 1) return {false, "section drop mismatch"};
        classify_at_dim(n, SubvarietyProfile{k}, dim);  // must be a legal dimension
        return {true, "dim Z = " + std::to_string(dim) + ", sections through center = "
                          + std::to_string(dim + 1)};
    }
    if (d == "hypersurface-contains-linear") {
        need(1, 1);
        long long k = to_ll(arg[0]);
        if (k < 1) throw DomainError("needs k >= 1");
        // every monomial x_j x_(2k+1-j)^(d-1) has a variable of index > k
        for (long long j = 0; j <= 2 * k + 1; ++j)
            if (j < k + 1 && 2 * k + 1 - j < k + 1)
                return {false, "monomial j = " + std::to_string(j)
                                   + " survives on the linear subspace"};
        if (k >= 2) {
            SubvarietyProfile y{k};
            y.is_linear_pk = true;
            bool saw = false;
            for (const auto& v : classify_at_dim(2 * k, y, k).structural)
                if (v.rule == Rule::Alan) saw = true;
            if (!saw) return {false, "hypersurface verdict missing at dim Z = k"};
        }
        return {true, "linear subspace lies on the hypersurface"};
    }
    if (d == "linear-section-bundle") {
        need(2, 2);
        long long k = to_ll(arg[0]), r = to_ll(arg[1]);
        if (k < 1 || r < 1) throw DomainError("needs k >= 1 and r >= 1");
        long long n = k + r;
        SubvarietyProfile y{k};
        y.is_linear_pk = true;
        for (const auto& b : dim_z_bounds(n, y, false, false).dim_z_lower_bounds)
            if (!b.conditional && b.exact == n - k - 1)
                return {true, "floor n-k-1 = " + std::to_string(n - k - 1)
                                  + " emitted; a degree-one image attains it"};
        return {false, "universal floor missing from the bound list"};
    }
    throw DomainError("unrecognized check " + d);
}

}  // namespace detail

inline FixtureReport run_fixture_data(const FixtureData& fx) {
    FixtureReport rep{fx.name, fx.note, {}};
    for (const auto& tok : fx.checks) {
        std::string desc;
        for (const auto& t : tok) {
            if (!desc.empty()) desc += ' ';
            desc += t;
        }
        Rule rule = rule_of(*find_citation(tok.back()));
        std::vector<std::string> arg(tok.begin() + 1, tok.end() - 2);
        try {
            detail::Outcome o = detail::evaluate_check(fx, tok[0], arg);
            rep.checks.push_back({desc, rule, o.passed, o.detail});
        } catch (const std::exception& e) {
            rep.checks.push_back({desc, rule, false, std::string("error: ") + e.what()});
        }
    }
    return rep;
}

inline FixtureReport run_fixture(const std::string& name) {
    for (const auto& fx : load_fixtures())
        if (fx.name == name) return run_fixture_data(fx);
    throw UnknownFixtureError(name);
}

inline std::vector<FixtureReport> run_all_fixture_reports() {
    std::vector<FixtureReport> out;
    for (const auto& fx : load_fixtures()) out.push_back(run_fixture_data(fx));
    return out;
}

}  // namespace castel
