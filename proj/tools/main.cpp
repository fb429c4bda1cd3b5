// hcob: verification suites, cocycle evaluation and generators.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hcob/error.hpp"
#include "hcob/harness/eval.hpp"
#include "hcob/harness/verify.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

nlohmann::json read_input(const std::string& path) {
    if (path == "-") {
        return nlohmann::json::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw hcob::Error("cannot open input file " + path);
    }
    return nlohmann::json::parse(in);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of 1-dimensional oriented bordisms and the cyclic category"};
    app.require_subcommand(1);

    hcob::harness::GeneratorConfig vcfg;
    std::string suite;
    bool as_json = false;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name (see `hcob list`)")->required();
    verify->add_option("--seed", vcfg.seed, "base seed");
    verify->add_option("--trials", vcfg.trials, "number of trials");
    verify->add_option("--max-points", vcfg.max_points, "bound on points per object");
    verify->add_option("--max-length", vcfg.max_chain_length, "bound on chain length");
    verify->add_option("--degree", vcfg.degree, "degree of generated objects");
    verify->add_option("--k", vcfg.k, "k for the U, additivity, relabel, degeneracy and conjugation suites");
    verify->add_flag("--json", as_json, "print the report as JSON");
    verify->add_flag("--timing", timing, "include wall-clock time in the JSON report");
    verify->add_flag("--mutate", vcfg.mutate, "use a deliberately broken composition");

    std::string what;
    std::string input = "-";
    std::optional<std::size_t> eval_k;
    auto* eval = app.add_subcommand("eval", "evaluate an operation on JSON input");
    eval->add_option("what", what, "operation")->required();
    eval->add_option("--input", input, "input JSON file, - for stdin");
    eval->add_option("--k", eval_k, "k when the input has none");

    std::string kind;
    hcob::harness::GenRequest greq;
    auto* gen = app.add_subcommand("gen", "print a random instance");
    gen->add_option("kind", kind, "object | bordism | chain | cyclic-map | injective-chain | config")->required();
    gen->add_option("--seed", greq.seed, "seed");
    gen->add_option("--max-points", greq.max_points, "bound on points per object or cyclic size");
    gen->add_option("--length", greq.length, "chain length");
    gen->add_option("--k", greq.k, "injective chains have 2k maps");
    gen->add_option("--labels", greq.labels, "label classes of a configuration");
    gen->add_option("--degree", greq.degree, "object degree");
    gen->add_flag("--empty-ends", greq.endpoints_empty, "chains start and end at the empty object");
    gen->add_flag("--reduced", greq.reduced, "no circles in generated bordisms");

    auto* list = app.add_subcommand("list", "list suites, evaluations and generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_input;
    }

    try {
        if (*verify) {
            const auto report = hcob::harness::verify(suite, vcfg);
            if (as_json) {
                std::cout << report.to_json(timing).dump(2) << "\n";
            } else {
                std::cout << report.to_text();
            }
            return report.passed() ? exit_pass : exit_fail;
        }
        if (*eval) {
            std::cout << hcob::harness::evaluate(what, read_input(input), eval_k).dump(2) << "\n";
            return exit_pass;
        }
        if (*gen) {
            std::cout << hcob::harness::generate(kind, greq).dump() << "\n";
            return exit_pass;
        }
        if (*list) {
            std::cout << "suites:";
            for (const auto& s : hcob::harness::suite_names()) {
                std::cout << " " << s;
            }
            std::cout << "\neval:";
            for (const auto& s : hcob::harness::eval_kinds()) {
                std::cout << " " << s;
            }
            std::cout << "\ngen:";
            for (const auto& s : hcob::harness::gen_kinds()) {
                std::cout << " " << s;
            }
            std::cout << "\n";
            return exit_pass;
        }
    } catch (const hcob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
