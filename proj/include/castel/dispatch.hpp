#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "castel/bigint.hpp"
#include "castel/bounds.hpp"
#include "castel/citations.hpp"
#include "castel/classifier.hpp"
#include "castel/combinatorics.hpp"
#include "castel/envelope.hpp"
#include "castel/errors.hpp"
#include "castel/existence.hpp"
#include "castel/fixtures.hpp"
#include "castel/oracle.hpp"

namespace castel {

// a validated command line: group, operation, name -> value parameters.
// Flags are stored with the value "true".
struct CommandRequest {
    std::string group;
    std::string op;
    std::map<std::string, std::string> params;
};

namespace detail {

inline std::optional<long long> param_opt_ll(const CommandRequest& r,
                                             const std::string& name) {
    auto it = r.params.find(name);
    if (it == r.params.end()) return std::nullopt;
    return to_ll(it->second);
}

inline long long param_ll(const CommandRequest& r, const std::string& name) {
    auto v = param_opt_ll(r, name);
    if (!v) throw DomainError("missing parameter --" + name);
    return *v;
}

inline long long param_ll_or(const CommandRequest& r, const std::string& name,
                             long long dflt) {
    auto v = param_opt_ll(r, name);
    return v ? *v : dflt;
}

inline bool param_flag(const CommandRequest& r, const std::string& name) {
    auto it = r.params.find(name);
    return it != r.params.end() && it->second != "false";
}

inline std::string param_str(const CommandRequest& r, const std::string& name) {
    auto it = r.params.find(name);
    if (it == r.params.end()) throw DomainError("missing parameter --" + name);
    return it->second;
}

inline std::vector<long long> split_ll(const std::string& s, char sep) {
    std::vector<long long> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(to_ll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(to_ll(cur));
    return out;
}

inline MultiProjective space_from(const CommandRequest& r) {
    MultiProjective s{split_ll(param_str(r, "dims"), ',')};
    check_space(s);
    return s;
}

inline Multidegree degree_from(const std::string& s) {
    Multidegree m;
    for (long long a : split_ll(s, ',')) m.degrees.push_back(a);
    return m;
}

inline EmbeddedVariety variety_from(const CommandRequest& r) {
    // r defaults to 0; operations that need a positive codimension guard it
    return {param_ll(r, "n"), param_ll_or(r, "r", 0), param_ll(r, "d"),
            param_flag(r, "kodaira-nonneg")};
}

inline Subvariety center_from(const CommandRequest& r) {
    Subvariety y{param_ll(r, "k"), param_ll(r, "delta")};
    y.q = param_opt_ll(r, "q");
    return y;
}

inline SubvarietyProfile profile_from(const CommandRequest& r) {
    SubvarietyProfile y;
    y.k = param_ll(r, "k");
    y.is_linear_pk = param_flag(r, "linear");
    y.pic_rank_one = param_flag(r, "pic-rank-one");
    y.is_k_pi_1 = param_flag(r, "kpi1");
    y.cohomology_like_pk_through = param_opt_ll(r, "cohomology-through");
    return y;
}

inline void render_structural(ResultEnvelope& e,
                              const std::vector<StructuralVerdict>& list) {
    std::size_t i = 0;
    for (const auto& s : list) {
        std::string base = indexed("verdict", i++);
        e.put(base + ".tag", s.tag);
        e.put(base + ".rule", std::string(cite(s.rule).label));
        e.cite_rule(s.rule);
    }
}

inline void render_verdict(ResultEnvelope& e, const ClassificationVerdict& v) {
    std::size_t i = 0;
    for (const auto& b : v.dim_z_lower_bounds) {
        std::string base = indexed("bound", i++);
        e.put(base + ".exact", b.exact);
        e.put(base + ".ceiling", b.ceiling);
        if (b.conditional) e.put(base + ".condition", b.condition);
        e.put(base + ".rule", std::string(cite(b.rule).label));
        e.cite_rule(b.rule);
    }
    render_structural(e, v.structural);
    i = 0;
    for (const auto& c : v.contradictions) e.put(indexed("contradiction", i++), c);
    for (const auto& w : v.warnings) e.warnings.push_back(w);
}

inline void render_report(ResultEnvelope& e, const FixtureReport& rep,
                          const std::string& prefix, std::size_t slot) {
    std::string base = indexed(prefix, slot);
    e.put(base + ".name", rep.name);
    if (!rep.note.empty()) e.put(base + ".note", rep.note);
    std::size_t i = 0;
    for (const auto& c : rep.checks) {
        std::string cb = base + "." + indexed("check", i++);
        e.put(cb + ".what", c.description);
        e.put(cb + ".passed", c.passed);
        e.put(cb + ".detail", c.detail);
        e.cite_rule(c.rule);
        if (!c.passed) ++e.checks_failed;
    }
}

// quick cross-module sweeps run by `verify --all`; the heavy grids live in
// the test suite, these are smoke-sized
inline FixtureReport consistency_report() {
    FixtureReport rep{"consistency", "cross-module sweeps", {}};

    bool ok = true;
    for (long long n = 1; n <= 3 && ok; ++n)
        for (long long r = 1; r <= 3 && ok; ++r)
            for (long long d = r + 1; d <= 12 && ok; ++d)
                for (long long t = 0; t <= 6 && ok; ++t)
                    ok = castelnuovo_lower_bound({n, r, d}, t)
                         == iterated_castel_sum(d, r, n, t);
    rep.checks.push_back({"closed form equals iterated sum, n <= 3, d <= 12",
                          Rule::CastelL, ok, ok ? "match" : "mismatch"});

    ok = true;
    for (long long p = 1; p <= 3 && ok; ++p) {
        MultiProjective s{{1, p}};
        long long n = p + 1, d = n;
        EmbeddedVariety v{n, p, d};
        for (long long t = 1; t < d && ok; ++t) {
            BigInteger h0 = h0_multidegree(s, uniform_degree(s, t));
            ok = easy_lower_bound(v, t) <= castelnuovo_lower_bound(v, t)
                 && castelnuovo_lower_bound(v, t) <= h0 && h0 <= upper_bound_h0(v, t);
        }
    }
    rep.checks.push_back({"bound sandwich on Segre products P^1 x P^p, p <= 3",
                          Rule::Upper, ok, ok ? "ordered" : "violated"});

    ok = true;
    for (long long n = 2; n <= 5 && ok; ++n)
        for (long long s = 0; s <= 6 && ok; s += 2)
            for (const auto& pr : degenerate_triple_analyze(n, s).pairs)
                if (pr.fiber_deg == 2) ok = false;
    rep.checks.push_back({"no fiber degree 2 for even twist, n <= 5, s <= 6",
                          Rule::Caset2, ok, ok ? "absent" : "present"});

    ok = true;
    for (long long n = 1; n <= 12 && ok; ++n)
        for (long long s = 1; s <= 12 && ok; ++s) {
            BigInteger pw = 1;
            for (long long i = 0; i < n; ++i) pw *= s + 1;
            ok = degree_formula(n, s) * s + 1 == pw;
        }
    rep.checks.push_back({"degree sum matches the closed form, n, s <= 12", Rule::Kn1,
                          ok, ok ? "match" : "mismatch"});
    return rep;
}

inline void route(const CommandRequest& req, ResultEnvelope& e) {
    const std::string& g = req.group;
    const std::string& op = req.op;

    if (g == "bounds") {
        if (op == "upper") {
            e.put("value", upper_bound_h0(variety_from(req), param_ll(req, "t")));
            e.cite_rule(Rule::Upper);
        } else if (op == "easy") {
            e.put("value", easy_lower_bound(variety_from(req), param_ll(req, "t")));
            e.cite_rule(Rule::EasyLower);
        } else if (op == "lower") {
            e.put("value", castelnuovo_lower_bound(variety_from(req), param_ll(req, "t")));
            e.cite_rule(Rule::CastelL);
        } else if (op == "simplified") {
            e.put("value", simplified_lower_bound(param_ll(req, "n"), param_ll(req, "r"),
                                                  param_ll(req, "t")));
            e.cite_rule(Rule::Rckod);
        } else if (op == "kodaira") {
            EmbeddedVariety v = variety_from(req);
            v.kodaira_nonneg = true;  // the subcommand asserts it
            e.put("value", kodaira_lower_bound(v, param_ll(req, "t")));
            e.cite_rule(Rule::Rckod);
        } else if (op == "iterated") {
            e.put("value", iterated_castel_sum(param_ll(req, "d"), param_ll(req, "r"),
                                               param_ll(req, "n"), param_ll(req, "t")));
            e.cite_rule(Rule::CastelL);
        } else {
            throw DomainError("unknown bounds operation: " + op);
        }
        return;
    }

    if (g == "exists") {
        if (op == "section") {
            bool full = param_flag(req, "full");
            bool got = section_guaranteed(variety_from(req), center_from(req),
                                          param_ll(req, "t"), full);
            e.put("guaranteed", got);
            e.cite_rule(Rule::CastelGen);
            e.cite_rule(full ? Rule::CastelL : Rule::Rckod);
            if (!got)
                e.warnings.push_back(
                    "criterion inconclusive, this does not assert non-existence");
        } else if (op == "min-t") {
            MinTResult res = min_t_guaranteed(variety_from(req), center_from(req),
                                              param_flag(req, "full"));
            e.put("t", res.t);
            e.put("mumford_fallback", res.mumford_fallback);
            e.cite_rule(Rule::CastelGen);
            if (res.mumford_fallback) {
                e.warnings.push_back("mumford-fallback");
                e.cite_rule(Rule::Mumford);
            }
        } else if (op == "divisor-threshold") {
            e.put("t", divisor_threshold(param_ll(req, "n"), param_ll(req, "r"),
                                         param_ll(req, "delta")));
            e.cite_rule(Rule::CastelP);
        } else if (op == "codim2") {
            long long n = param_ll(req, "n"), r = param_ll(req, "r");
            long long delta = param_ll(req, "delta");
            e.put("positive", codim2_positive(n, r, delta));
            e.put("value", codim2_polynomial(n, r, delta));
            e.cite_rule(Rule::Cod2);
        } else {
            throw DomainError("unknown exists operation: " + op);
        }
        return;
    }

    if (g == "lower-degree") {
        if (op == "general") {
            e.put("value", lower_degree_bound(param_ll(req, "n"), param_ll(req, "N"),
                                              param_ll(req, "d")));
            e.cite_rule(Rule::LowerBound);
        } else if (op == "surface") {
            e.put("value", surface_lower_degree(param_ll(req, "d")));
            e.cite_rule(Rule::LbSurf);
        } else if (op == "threefold") {
            e.put("value", threefold_lower_degree(param_ll(req, "d"), param_ll(req, "N")));
            e.cite_rule(Rule::LowerBound);
        } else {
            throw DomainError("unknown lower-degree operation: " + op);
        }
        return;
    }

    if (g == "classify") {
        if (op == "dims") {
            render_verdict(e, dim_z_bounds(param_ll(req, "n"), profile_from(req),
                                           param_flag(req, "hartshorne"),
                                           param_flag(req, "x-ci")));
        } else if (op == "at-dim") {
            render_verdict(e, classify_at_dim(param_ll(req, "n"), profile_from(req),
                                              param_ll(req, "dim-z")));
        } else if (op == "divisor") {
            long long n = param_ll(req, "n");
            Subvariety dv{n - 1, param_ll(req, "delta")};
            dv.q = param_opt_ll(req, "q");
            render_verdict(e, divisor_rules(variety_from(req), dv,
                                            param_flag(req, "conjecture")));
        } else if (op == "chern") {
            e.put("value", chern_bound(param_ll(req, "n"), param_ll(req, "k")));
            e.cite_rule(Rule::Chern1);
        } else if (op == "adjoint") {
            SubvarietyProfile y{param_ll(req, "k")};
            y.is_linear_pk = true;  // the subcommand asserts a linear center
            render_structural(e, adjoint_exceptions(param_ll(req, "n"), y));
        } else {
            throw DomainError("unknown classify operation: " + op);
        }
        return;
    }

    if (g == "triple") {
        if (op == "analyze") {
            TripleAnalysis a =
                degenerate_triple_analyze(param_ll(req, "n"), param_ll(req, "s"));
            e.put("degree", a.degree);
            std::size_t i = 0;
            for (const auto& pr : a.pairs) {
                std::string base = indexed("pair", i++);
                e.put(base + ".fiber", pr.fiber_deg);
                e.put(base + ".base", pr.base_deg);
            }
            e.cite_rule(Rule::Kn1);
            e.cite_rule(Rule::ProdRel);
            render_verdict(e, a.verdicts);
        } else if (op == "degree") {
            e.put("value", degree_formula(param_ll(req, "n"), param_ll(req, "s")));
            e.cite_rule(Rule::Kn1);
        } else {
            throw DomainError("unknown triple operation: " + op);
        }
        return;
    }

    if (g == "oracle") {
        if (op == "h0") {
            e.put("value", h0_multidegree(space_from(req),
                                          degree_from(param_str(req, "degrees"))));
        } else if (op == "intersect") {
            std::vector<Multidegree> classes;
            std::string cur;
            std::string all = param_str(req, "classes");
            for (std::size_t i = 0; i <= all.size(); ++i) {
                if (i == all.size() || all[i] == ';') {
                    classes.push_back(degree_from(cur));
                    cur.clear();
                } else {
                    cur += all[i];
                }
            }
            e.put("value", intersection_number(space_from(req), classes));
        } else if (op == "segre") {
            e.put("value", segre_degree(space_from(req)));
        } else {
            throw DomainError("unknown oracle operation: " + op);
        }
        return;
    }

    if (g == "verify") {
        if (param_flag(req, "list")) {
            std::size_t i = 0;
            for (const auto& name : list_fixtures()) e.put(indexed("fixture", i++), name);
        } else if (param_flag(req, "all")) {
            std::size_t slot = 0;
            for (const auto& rep : run_all_fixture_reports())
                render_report(e, rep, "fixture", slot++);
            render_report(e, consistency_report(), "fixture", slot++);
        } else {
            render_report(e, run_fixture(param_str(req, "fixture")), "fixture", 0);
        }
        e.put("checks_failed", e.checks_failed);
        return;
    }

    throw DomainError("unknown command group: " + g);
}

}  // namespace detail

// precondition violations come back as ok = false envelopes; anything else
// (internal invariant breaks) propagates to the caller
inline ResultEnvelope dispatch(const CommandRequest& req) {
    ResultEnvelope e;
    e.command = req.op.empty() ? req.group : req.group + " " + req.op;
    try {
        detail::route(req, e);
    } catch (const DomainError& ex) {
        e.ok = false;
        e.error = ex.what();
    } catch (const UnknownFixtureError& ex) {
        e.ok = false;
        e.error = ex.what();
    }
    return e;
}

inline ResultEnvelope run_all_fixtures() {
    CommandRequest req{"verify", "", {{"all", "true"}}};
    return dispatch(req);
}

// 0 success, 2 rejected input, 1 completed with failed checks
inline int exit_code_for(const ResultEnvelope& e) {
    if (!e.ok) return 2;
    if (e.checks_failed > 0) return 1;
    return 0;
}

}  // namespace castel
