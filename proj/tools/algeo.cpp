#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "algeo/io.hpp"
#include "algeo/suites.hpp"
#include "algeo/version.hpp"

namespace {

struct CliOptions {
    std::string input;
    int max_arity = 4;
    int trials = 64;
    std::uint64_t seed = 0;
    int max_order = 4;
    int max_degree = 1;
    std::string carrier = "C";
    std::string format = "md";
    std::size_t budget = 0; // 0 = leave default / env value
};

void add_common(CLI::App *cmd, CliOptions &o) {
    cmd->add_option("input", o.input, "algebra file or builtin name")->required();
    cmd->add_option("--budget", o.budget, "scalar budget for cochain results");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"md", "json"}));
    cmd->add_option("--seed", o.seed, "seed for randomized trials");
}

int emit(const algeo::Report &rep, const std::string &format) {
    std::cout << (format == "json" ? rep.to_json() : rep.to_markdown());
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact verification workbench for the calculus of non-associative algebras"};
    app.set_version_flag("--version", std::string(algeo::version_string));
    app.require_subcommand(1);

    CliOptions o;
    CLI::App *verify = app.add_subcommand("verify", "randomized identity suites of the comp "
                                                    "calculus and the quasi-complex");
    verify->add_option("--max-arity", o.max_arity, "largest cochain arity in random trials");
    verify->add_option("--trials", o.trials, "random trials per identity");
    CLI::App *functions =
        app.add_subcommand("functions", "function algebra: dimension, table, derivation laws");
    CLI::App *coherence =
        app.add_subcommand("coherence", "smallest N with d^N = 0 on tested degrees");
    coherence->add_option("--max-order", o.max_order, "largest power of d to test");
    coherence->add_option("--max-degree", o.max_degree, "largest basis-cochain degree");
    CLI::App *forms = app.add_subcommand("forms", "differential forms: curvature, "
                                                  "normalization constants, homotopy");
    forms->add_option("--carrier", o.carrier, "value module: C (vector fields) or A (functions)")
        ->check(CLI::IsMember({"A", "C"}));
    CLI::App *report = app.add_subcommand("report", "all suites in one document");
    report->add_option("--max-arity", o.max_arity, "largest cochain arity in random trials");
    report->add_option("--trials", o.trials, "random trials per identity");
    report->add_option("--max-order", o.max_order, "largest power of d to test");
    report->add_option("--max-degree", o.max_degree, "largest basis-cochain degree");
    for (CLI::App *cmd : {verify, functions, coherence, forms, report})
        add_common(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (const char *env = std::getenv("ALGEO_BUDGET"))
            algeo::set_scalar_budget(std::stoull(env));
        if (o.budget > 0)
            algeo::set_scalar_budget(o.budget);

        algeo::AlgebraPtr alg = algeo::load_algebra(o.input);
        algeo::Report rep(o.input, algeo::input_digest(alg), o.seed);
        algeo::suites::Options so;
        so.trials = o.trials;
        so.seed = o.seed;
        so.max_order = o.max_order;
        so.max_degree = o.max_degree;

        if (app.got_subcommand(verify)) {
            rep.set_option("trials", std::to_string(o.trials));
            algeo::suites::graded_calculus(rep, alg, so);
            algeo::suites::quasi_complex_suite(rep, alg, so);
            algeo::suites::curvature_suite(rep, alg);
        } else if (app.got_subcommand(functions)) {
            algeo::suites::functions_suite(rep, alg);
        } else if (app.got_subcommand(coherence)) {
            rep.set_option("max_order", std::to_string(o.max_order));
            rep.set_option("max_degree", std::to_string(o.max_degree));
            algeo::suites::coherence_suite(rep, alg, so);
        } else if (app.got_subcommand(forms)) {
            rep.set_option("carrier", o.carrier);
            algeo::suites::forms_suite(rep, alg, o.carrier[0], so);
        } else {
            rep.set_option("trials", std::to_string(o.trials));
            rep.set_option("max_order", std::to_string(o.max_order));
            rep.set_option("max_degree", std::to_string(o.max_degree));
            algeo::suites::graded_calculus(rep, alg, so);
            algeo::suites::quasi_complex_suite(rep, alg, so);
            algeo::suites::curvature_suite(rep, alg);
            algeo::suites::functions_suite(rep, alg);
            algeo::suites::coherence_suite(rep, alg, so);
            algeo::suites::forms_suite(rep, alg, 'C', so);
            algeo::suites::forms_suite(rep, alg, 'A', so);
        }
        return emit(rep, o.format);
    } catch (const algeo::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
