#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "castel/castel.hpp"

using namespace castel;

namespace {

using Params = std::map<std::string, std::string>;

ResultEnvelope run(const std::string& g, const std::string& op, Params p = {}) {
    return dispatch(CommandRequest{g, op, std::move(p)});
}

std::string S(long long v) { return std::to_string(v); }

}  // namespace

TEST_CASE("dispatched values agree with direct library calls") {
    std::mt19937 g(4242);
    long long bad = 0;
    for (int rep = 0; rep < 100 && bad == 0; ++rep) {
        switch (rep % 10) {
            case 0: {
                long long n = 1 + g() % 6, d = 1 + g() % 12, t = g() % 11;
                ResultEnvelope e = run("bounds", "upper",
                                       {{"n", S(n)}, {"d", S(d)}, {"t", S(t)}});
                if (!e.ok || e.values.at("value")
                                 != to_decimal(upper_bound_h0({n, 0, d}, t))) ++bad;
                break;
            }
            case 1: {
                long long n = 1 + g() % 6, d = 2 + g() % 12, t = g() % d;
                ResultEnvelope e = run("bounds", "easy",
                                       {{"n", S(n)}, {"d", S(d)}, {"t", S(t)}});
                if (!e.ok || e.values.at("value")
                                 != to_decimal(easy_lower_bound({n, 0, d}, t))) ++bad;
                break;
            }
            case 2: {
                long long n = 1 + g() % 5, r = 1 + g() % 4;
                long long d = r + 1 + g() % 15, t = g() % 9;
                ResultEnvelope e = run("bounds", "lower",
                                       {{"n", S(n)}, {"r", S(r)}, {"d", S(d)}, {"t", S(t)}});
                bool ok = e.ok
                       && e.values.at("value")
                              == to_decimal(castelnuovo_lower_bound({n, r, d}, t))
                       && e.citations.size() == 1 && e.citations[0] == Rule::CastelL;
                if (!ok) ++bad;
                break;
            }
            case 3: {
                long long n = 1 + g() % 5, r = 1 + g() % 5, t = g() % 10;
                ResultEnvelope e = run("bounds", "simplified",
                                       {{"n", S(n)}, {"r", S(r)}, {"t", S(t)}});
                if (!e.ok || e.values.at("value")
                                 != to_decimal(simplified_lower_bound(n, r, t))) ++bad;
                break;
            }
            case 4: {
                long long n = 1 + g() % 4, r = 1 + g() % 3;
                long long d = r * n + 2 + g() % 10, t = g() % 9;
                ResultEnvelope e = run("bounds", "kodaira",
                                       {{"n", S(n)}, {"r", S(r)}, {"d", S(d)}, {"t", S(t)}});
                if (!e.ok || e.values.at("value")
                                 != to_decimal(kodaira_lower_bound({n, r, d, true}, t)))
                    ++bad;
                break;
            }
            case 5: {
                long long d = 1 + g() % 20, r = 1 + g() % 4;
                long long n = 1 + g() % 4, t = g() % 9;
                ResultEnvelope e = run("bounds", "iterated",
                                       {{"d", S(d)}, {"r", S(r)}, {"n", S(n)}, {"t", S(t)}});
                if (!e.ok || e.values.at("value")
                                 != to_decimal(iterated_castel_sum(d, r, n, t))) ++bad;
                break;
            }
            case 6: {
                long long n = 2 + g() % 6, r = 1 + g() % 6, delta = 2 + g() % 29;
                ResultEnvelope e = run("exists", "divisor-threshold",
                                       {{"n", S(n)}, {"r", S(r)}, {"delta", S(delta)}});
                if (!e.ok || e.values.at("t") != S(divisor_threshold(n, r, delta))) ++bad;
                break;
            }
            case 7: {
                long long n = 3 + g() % 6, r = 1 + g() % 6, delta = 1 + g() % 20;
                ResultEnvelope e = run("exists", "codim2",
                                       {{"n", S(n)}, {"r", S(r)}, {"delta", S(delta)}});
                bool ok = e.ok
                       && e.values.at("positive")
                              == (codim2_positive(n, r, delta) ? "true" : "false")
                       && e.values.at("value")
                              == to_decimal(codim2_polynomial(n, r, delta));
                if (!ok) ++bad;
                break;
            }
            case 8: {
                long long n = 1 + g() % 4, N = n + 1 + g() % 5, d = 1 + g() % 100;
                ResultEnvelope e = run("lower-degree", "general",
                                       {{"n", S(n)}, {"N", S(N)}, {"d", S(d)}});
                if (!e.ok || e.values.at("value") != S(lower_degree_bound(n, N, d))) ++bad;
                break;
            }
            default: {
                long long n = 1 + g() % 8, s = g() % 9;
                ResultEnvelope e = run("triple", "degree", {{"n", S(n)}, {"s", S(s)}});
                if (!e.ok || e.values.at("value") != to_decimal(degree_formula(n, s)))
                    ++bad;
                break;
            }
        }
        if (bad) INFO("rep=" << rep << " family=" << rep % 10);
    }
    CHECK(bad == 0);
}

TEST_CASE("section existence envelopes") {
    ResultEnvelope yes = run("exists", "section",
                             {{"n", "4"}, {"r", "4"}, {"d", "6"}, {"k", "3"},
                              {"delta", "6"}, {"t", "2"}});
    CHECK(yes.ok);
    CHECK(yes.values.at("guaranteed") == "true");
    CHECK(yes.warnings.empty());

    ResultEnvelope no = run("exists", "section",
                            {{"n", "4"}, {"r", "4"}, {"d", "6"}, {"k", "3"},
                             {"delta", "6"}, {"t", "1"}});
    CHECK(no.ok);
    CHECK(no.values.at("guaranteed") == "false");
    REQUIRE(no.warnings.size() == 1);
    CHECK(no.warnings[0].find("inconclusive") != std::string::npos);

    ResultEnvelope mt = run("exists", "min-t",
                            {{"n", "2"}, {"r", "1"}, {"d", "2"}, {"k", "1"},
                             {"delta", "9"}});
    CHECK(mt.values.at("t") == "8");
    CHECK(mt.values.at("mumford_fallback") == "false");
    CHECK(mt.warnings.empty());

    ResultEnvelope fb = run("exists", "min-t",
                            {{"n", "3"}, {"r", "1"}, {"d", "2"}, {"k", "2"},
                             {"delta", "10"}});
    CHECK(fb.values.at("t") == "11");
    CHECK(fb.values.at("mumford_fallback") == "true");
    REQUIRE(fb.warnings.size() == 1);
    CHECK(fb.warnings[0] == "mumford-fallback");
    bool cited_fallback = false;
    for (Rule r : fb.citations) cited_fallback = cited_fallback || r == Rule::Mumford;
    CHECK(cited_fallback);
}

TEST_CASE("classification envelopes") {
    ResultEnvelope dims = run("classify", "dims",
                              {{"n", "5"}, {"k", "3"}, {"pic-rank-one", "true"}});
    CHECK(dims.ok);
    CHECK(dims.values.at("bound.00.exact") == "1");
    CHECK(dims.values.at("bound.00.ceiling") == "1");
    CHECK(dims.values.at("bound.01.exact") == "5/2");
    CHECK(dims.values.at("bound.01.ceiling") == "3");
    CHECK(dims.values.at("bound.01.condition") == "applies when dim Z >= n-k");
    CHECK(dims.values.count("contradiction.00") == 1);
    CHECK(dims.citations.size() == 2);

    ResultEnvelope at = run("classify", "at-dim",
                            {{"n", "5"}, {"k", "2"}, {"dim-z", "2"}, {"linear", "true"}});
    CHECK(at.values.at("verdict.01.tag") == "(X, L) = (P^5, O(1))");

    ResultEnvelope dv = run("classify", "divisor",
                            {{"n", "3"}, {"r", "2"}, {"d", "4"}, {"delta", "1"}});
    CHECK(dv.ok);
    REQUIRE(dv.warnings.size() == 1);
    CHECK(dv.values.count("verdict.00.tag") == 1);
    CHECK(dv.values.count("verdict.01.tag") == 0);

    ResultEnvelope ch = run("classify", "chern", {{"n", "4"}, {"k", "1"}});
    CHECK(ch.values.at("value") == "1");

    ResultEnvelope ad = run("classify", "adjoint", {{"n", "4"}, {"k", "3"}});
    CHECK(ad.values.count("verdict.00.tag") == 1);
    CHECK(ad.values.count("verdict.01.tag") == 1);
    CHECK(ad.values.count("verdict.02.tag") == 0);
}

TEST_CASE("triple and oracle envelopes") {
    ResultEnvelope tr = run("triple", "analyze", {{"n", "3"}, {"s", "1"}});
    CHECK(tr.values.at("degree") == "7");
    CHECK(tr.values.at("pair.00.fiber") == "1");
    CHECK(tr.values.at("pair.00.base") == "4");
    CHECK(tr.values.at("pair.01.fiber") == "4");
    CHECK(tr.values.count("pair.02.fiber") == 0);

    ResultEnvelope h = run("oracle", "h0", {{"dims", "2,2"}, {"degrees", "2,0"}});
    CHECK(h.values.at("value") == "6");

    ResultEnvelope in = run("oracle", "intersect",
                            {{"dims", "2,2"}, {"classes", "1,1;1,1;1,1;2,0"}});
    CHECK(in.values.at("value") == "6");

    ResultEnvelope sg = run("oracle", "segre", {{"dims", "1,1,1"}});
    CHECK(sg.values.at("value") == "6");
}

TEST_CASE("verification envelopes") {
    ResultEnvelope ls = run("verify", "", {{"list", "true"}});
    CHECK(ls.ok);
    CHECK(ls.values.at("fixture.00") == "ExP");
    CHECK(ls.values.at("fixture.08") == "Bilbao2-n4");
    CHECK(ls.values.count("fixture.09") == 0);

    ResultEnvelope one = run("verify", "", {{"fixture", "ExP"}});
    CHECK(one.ok);
    CHECK(one.checks_failed == 0);
    CHECK(one.values.at("fixture.00.name") == "ExP");
    CHECK(one.values.at("fixture.00.check.00.passed") == "true");
    CHECK(exit_code_for(one) == 0);

    ResultEnvelope all = run_all_fixtures();
    CHECK(all.ok);
    CHECK(all.checks_failed == 0);
    CHECK(all.values.at("checks_failed") == "0");
    CHECK(all.values.at("fixture.09.name") == "consistency");
    CHECK(exit_code_for(all) == 0);

    ResultEnvelope miss = run("verify", "", {{"fixture", "no-such"}});
    CHECK_FALSE(miss.ok);
    CHECK(exit_code_for(miss) == 2);
}

TEST_CASE("precondition violations come back as error envelopes") {
    ResultEnvelope e = run("bounds", "easy", {{"n", "2"}, {"d", "3"}, {"t", "5"}});
    CHECK_FALSE(e.ok);
    CHECK(e.error.find("t < d") != std::string::npos);
    CHECK(exit_code_for(e) == 2);

    CHECK_FALSE(run("nonsense", "op").ok);
    CHECK_FALSE(run("bounds", "nonsense").ok);
    CHECK_FALSE(run("bounds", "upper", {{"n", "2"}, {"d", "3"}}).ok);  // missing t
    CHECK_FALSE(run("oracle", "h0", {{"dims", "2,x"}, {"degrees", "1,1"}}).ok);

    ResultEnvelope fake;
    fake.checks_failed = 2;
    CHECK(exit_code_for(fake) == 1);
}

TEST_CASE("JSON envelopes are deterministic and round-trip") {
    ResultEnvelope a = run("classify", "dims",
                           {{"n", "7"}, {"k", "2"}, {"linear", "true"},
                            {"hartshorne", "true"}});
    ResultEnvelope b = run("classify", "dims",
                           {{"n", "7"}, {"k", "2"}, {"linear", "true"},
                            {"hartshorne", "true"}});
    nlohmann::json ja = envelope_to_json(a), jb = envelope_to_json(b);
    CHECK(ja.dump(2) == jb.dump(2));
    CHECK(nlohmann::json::parse(ja.dump(2)) == ja);

    nlohmann::json jv = envelope_to_json(run_all_fixtures());
    CHECK(nlohmann::json::parse(jv.dump()) == jv);
    CHECK(jv["ok"] == true);
    CHECK(jv["checks_failed"] == 0);
    CHECK(jv["values"]["fixture.00.name"] == "ExP");
    CHECK(jv["citations"].is_array());
    CHECK_FALSE(jv["citations"].empty());

    // error envelopes carry the error field only when not ok
    nlohmann::json je = envelope_to_json(run("bounds", "nonsense"));
    CHECK(je["ok"] == false);
    CHECK(je.contains("error"));
    CHECK_FALSE(envelope_to_json(run("oracle", "segre", {{"dims", "2"}})).contains("error"));
}

TEST_CASE("text rendering covers values, warnings and citations") {
    ResultEnvelope e = run("exists", "min-t",
                           {{"n", "3"}, {"r", "1"}, {"d", "2"}, {"k", "2"},
                            {"delta", "10"}});
    std::string text = envelope_to_text(e);
    CHECK(text.find("command: exists min-t") != std::string::npos);
    CHECK(text.find("status: ok") != std::string::npos);
    CHECK(text.find("t: 11") != std::string::npos);
    CHECK(text.find("warnings:") != std::string::npos);
    CHECK(text.find("citations:") != std::string::npos);

    std::string err = envelope_to_text(run("bounds", "nonsense"));
    CHECK(err.find("status: error") != std::string::npos);
    CHECK(err.find("error: unknown bounds operation: nonsense") != std::string::npos);
}
