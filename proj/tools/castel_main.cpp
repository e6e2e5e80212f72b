#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "castel/castel.hpp"

namespace {

using castel::CommandRequest;

// every leaf fills the same request; only one leaf runs per invocation
struct Builder {
    CommandRequest& req;

    CLI::App* leaf(CLI::App* group, const std::string& gname, const std::string& opname,
                   const std::string& desc) {
        CLI::App* c = group->add_subcommand(opname, desc);
        c->fallthrough();
        CommandRequest& r = req;
        c->callback([&r, gname, opname] {
            r.group = gname;
            r.op = opname;
        });
        return c;
    }

    void num(CLI::App* c, const std::string& name, const std::string& help,
             bool required = true) {
        CommandRequest& r = req;
        auto* o = c->add_option_function<long long>(
            "--" + name,
            [&r, name](const long long& v) { r.params[name] = std::to_string(v); }, help);
        if (required) o->required();
    }

    void flag(CLI::App* c, const std::string& name, const std::string& help) {
        CommandRequest& r = req;
        c->add_flag_callback(
            "--" + name, [&r, name] { r.params[name] = "true"; }, help);
    }

    void str(CLI::App* c, const std::string& name, const std::string& help,
             bool required = true) {
        CommandRequest& r = req;
        auto* o = c->add_option_function<std::string>(
            "--" + name, [&r, name](const std::string& v) { r.params[name] = v; }, help);
        if (required) o->required();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CommandRequest req;
    bool json = false;

    CLI::App app{
        "exact section-count bounds, projection thresholds and classification "
        "rules, with a monomial-counting oracle on products of projective spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", json, "emit a JSON envelope instead of text");

    Builder b{req};

    CLI::App* bounds = app.add_subcommand("bounds", "section-count bounds for h0(tL)");
    bounds->require_subcommand(1);
    bounds->fallthrough();
    {
        CLI::App* c = b.leaf(bounds, "bounds", "upper", "upper bound for h0(tL)");
        b.num(c, "n", "dimension");
        b.num(c, "d", "degree");
        b.num(c, "t", "tensor power");
        b.num(c, "r", "codimension", false);
        c = b.leaf(bounds, "bounds", "easy", "elementary lower bound, needs t < d");
        b.num(c, "n", "dimension");
        b.num(c, "d", "degree");
        b.num(c, "t", "tensor power");
        b.num(c, "r", "codimension", false);
        c = b.leaf(bounds, "bounds", "lower", "degree-aware lower bound for h0(tL)");
        b.num(c, "n", "dimension");
        b.num(c, "r", "codimension");
        b.num(c, "d", "degree");
        b.num(c, "t", "tensor power");
        c = b.leaf(bounds, "bounds", "simplified",
                   "degree-free form of the lower bound");
        b.num(c, "n", "dimension");
        b.num(c, "r", "codimension");
        b.num(c, "t", "tensor power");
        c = b.leaf(bounds, "bounds", "kodaira",
                   "sharper lower bound under nonnegative Kodaira dimension");
        b.num(c, "n", "dimension");
        b.num(c, "r", "codimension");
        b.num(c, "d", "degree");
        b.num(c, "t", "tensor power");
        c = b.leaf(bounds, "bounds", "iterated",
                   "brute-force iterated prefix sum, same quantity as lower");
        b.num(c, "n", "dimension");
        b.num(c, "r", "codimension");
        b.num(c, "d", "degree");
        b.num(c, "t", "tensor power");
    }

    CLI::App* exists = app.add_subcommand(
        "exists", "guaranteed sections through a subvariety and thresholds");
    exists->require_subcommand(1);
    exists->fallthrough();
    {
        CLI::App* c = b.leaf(exists, "exists", "section",
                             "is a section of tL through the center guaranteed");
        b.num(c, "n", "ambient dimension");
        b.num(c, "r", "codimension");
        b.num(c, "d", "degree");
        b.num(c, "t", "tensor power");
        b.num(c, "k", "center dimension");
        b.num(c, "delta", "center degree");
        b.num(c, "q", "codimension of the center in its span", false);
        b.flag(c, "full", "use the degree-aware lower bound");
        c = b.leaf(exists, "exists", "min-t",
                   "least t with a guaranteed section, scanning up to delta+1");
        b.num(c, "n", "ambient dimension");
        b.num(c, "r", "codimension");
        b.num(c, "d", "degree");
        b.num(c, "k", "center dimension");
        b.num(c, "delta", "center degree");
        b.num(c, "q", "codimension of the center in its span", false);
        b.flag(c, "full", "use the degree-aware lower bound");
        c = b.leaf(exists, "exists", "divisor-threshold",
                   "least t guaranteeing a section of tL - D for a divisor D");
        b.num(c, "n", "ambient dimension");
        b.num(c, "r", "codimension");
        b.num(c, "delta", "divisor degree");
        c = b.leaf(exists, "exists", "codim2",
                   "discriminant test for codimension-2 centers at t = delta - 1");
        b.num(c, "n", "ambient dimension");
        b.num(c, "r", "codimension");
        b.num(c, "delta", "center degree");
    }

    CLI::App* lowdeg = app.add_subcommand(
        "lower-degree", "lower bounds on the degree of hypersurfaces through a variety");
    lowdeg->require_subcommand(1);
    lowdeg->fallthrough();
    {
        CLI::App* c = b.leaf(lowdeg, "lower-degree", "general",
                             "largest delta every degree-d n-fold in P^N admits");
        b.num(c, "n", "variety dimension");
        b.num(c, "N", "ambient projective dimension");
        b.num(c, "d", "variety degree");
        c = b.leaf(lowdeg, "lower-degree", "surface", "surface case, N = 5");
        b.num(c, "d", "surface degree");
        c = b.leaf(lowdeg, "lower-degree", "threefold", "threefold case, N >= 5");
        b.num(c, "d", "threefold degree");
        b.num(c, "N", "ambient projective dimension");
    }

    CLI::App* classify = app.add_subcommand(
        "classify", "image-dimension bounds and structural verdicts");
    classify->require_subcommand(1);
    classify->fallthrough();
    {
        CLI::App* c = b.leaf(classify, "classify", "dims",
                             "all applicable lower bounds for the image dimension");
        b.num(c, "n", "ambient dimension");
        b.num(c, "k", "center dimension");
        b.flag(c, "linear", "center is a linearly embedded P^k");
        b.flag(c, "pic-rank-one", "center has algebraic h^2 equal to 1");
        b.num(c, "cohomology-through",
              "center has algebraic h^(2j) equal to 1 for j up to this", false);
        b.flag(c, "kpi1", "center is a K(pi,1)");
        b.flag(c, "hartshorne", "assume the complete-intersection conjecture");
        b.flag(c, "x-ci", "the ambient variety is a complete intersection");
        c = b.leaf(classify, "classify", "at-dim",
                   "structural consequences of a declared image dimension");
        b.num(c, "n", "ambient dimension");
        b.num(c, "k", "center dimension");
        b.num(c, "dim-z", "declared image dimension");
        b.flag(c, "linear", "center is a linearly embedded P^k");
        b.flag(c, "pic-rank-one", "center has algebraic h^2 equal to 1");
        b.num(c, "cohomology-through",
              "center has algebraic h^(2j) equal to 1 for j up to this", false);
        b.flag(c, "kpi1", "center is a K(pi,1)");
        c = b.leaf(classify, "classify", "divisor",
                   "ampleness and birationality verdicts for delta L - D");
        b.num(c, "n", "ambient dimension");
        b.num(c, "r", "codimension", false);
        b.num(c, "d", "ambient degree");
        b.num(c, "delta", "divisor degree");
        b.num(c, "q", "codimension of the divisor in its span", false);
        b.flag(c, "conjecture", "also emit the conjectural branch, needs --q");
        c = b.leaf(classify, "classify", "chern",
                   "upper bound for c1 of the normal bundle of a linear center");
        b.num(c, "n", "ambient dimension");
        b.num(c, "k", "center dimension");
        c = b.leaf(classify, "classify", "adjoint",
                   "exception list for spannedness of the adjoint bundle");
        b.num(c, "n", "ambient dimension");
        b.num(c, "k", "center dimension");
    }

    CLI::App* triple = app.add_subcommand(
        "triple", "arithmetic of degenerate projection triples");
    triple->require_subcommand(1);
    triple->fallthrough();
    {
        CLI::App* c = b.leaf(triple, "triple", "analyze",
                             "degree, fiber/base factorizations and verdicts");
        b.num(c, "n", "dimension");
        b.num(c, "s", "normal bundle twist");
        c = b.leaf(triple, "triple", "degree", "degree of the polarization");
        b.num(c, "n", "dimension");
        b.num(c, "s", "normal bundle twist");
    }

    CLI::App* oracle = app.add_subcommand(
        "oracle", "monomial counting on products of projective spaces");
    oracle->require_subcommand(1);
    oracle->fallthrough();
    {
        CLI::App* c = b.leaf(oracle, "oracle", "h0", "h0 of a multidegree class");
        b.str(c, "dims", "factor dimensions, e.g. 2,2");
        b.str(c, "degrees", "class, e.g. 0,2");
        c = b.leaf(oracle, "oracle", "intersect",
                   "intersection number of n divisor classes");
        b.str(c, "dims", "factor dimensions, e.g. 2,2");
        b.str(c, "classes", "semicolon-separated classes, e.g. 1,1;1,1;1,1;2,0");
        c = b.leaf(oracle, "oracle", "segre", "degree of the Segre embedding");
        b.str(c, "dims", "factor dimensions, e.g. 1,3");
    }

    CLI::App* verify = app.add_subcommand(
        "verify", "re-derive the worked-example corpus and consistency sweeps");
    verify->fallthrough();
    {
        verify->callback([&req] {
            req.group = "verify";
            req.op.clear();
        });
        CLI::Option_group* mode = verify->add_option_group("mode");
        CommandRequest& r = req;
        mode->add_flag_callback(
            "--all", [&r] { r.params["all"] = "true"; }, "run every fixture");
        mode->add_flag_callback(
            "--list", [&r] { r.params["list"] = "true"; }, "list fixture names");
        mode->add_option_function<std::string>(
            "--fixture", [&r](const std::string& v) { r.params["fixture"] = v; },
            "run one fixture by name");
        mode->require_option(1);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // any rejected command line, not the library default
    }

    try {
        castel::ResultEnvelope env = castel::dispatch(req);
        if (json)
            std::cout << castel::envelope_to_json(env).dump(2) << "\n";
        else
            std::cout << castel::envelope_to_text(env);
        return castel::exit_code_for(env);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
