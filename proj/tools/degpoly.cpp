// degpoly command-line front end. Prints a JSON report to stdout; exit
// status 0 when every check passes, 1 on a failed check, 2 on bad usage.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "degpoly/degpoly.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(degpoly_status status, degpoly_report* report)
{
    if (status != DEGPOLY_OK) {
        std::cerr << "degpoly: " << degpoly_last_error() << '\n';
        return status == DEGPOLY_INTERNAL_ERROR ? kExitFail : kExitUsage;
    }
    std::cout << degpoly_report_json(report) << '\n';
    const int passed = degpoly_report_passed(report);
    degpoly_report_free(report);
    if (!passed) {
        std::cerr << "degpoly: at least one check failed\n";
        return kExitFail;
    }
    return 0;
}

bool seed_from_env(std::uint64_t& seed)
{
    const char* text = std::getenv("DEGPOLY_SEED");
    if (text == nullptr || *text == '\0') {
        return true;
    }
    try {
        std::size_t used = 0;
        seed = std::stoull(text, &used);
        return used == std::string(text).size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degree partition polytope toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 20080417;
    app.add_option("--seed", seed, "random seed (DEGPOLY_SEED overrides)");

    auto* optimize = app.add_subcommand("optimize", "maximize c.d over degree partitions");
    std::string costs;
    std::string mode = "max";
    bool oracle = false;
    optimize->add_option("--costs", costs, "comma-separated rationals p or p/q")->required();
    optimize->add_option("--mode", mode, "max or min extremal optimum")
        ->check(CLI::IsMember({"max", "min"}));
    optimize->add_flag("--oracle", oracle, "cross-check against brute force");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    int n = 0;
    std::string suite;
    verify->add_option("--n", n, "number of vertices")->required();
    verify->add_option("--suite", suite, "counts|facets|edges|lattice-points|hypergraph|volume3")
        ->required();

    auto* recognize = app.add_subcommand("recognize", "decide whether a sequence is r-graphical");
    std::string sequence;
    int r = 2;
    int vertices = 0;
    recognize->add_option("--seq", sequence, "comma-separated nonnegative integers")->required();
    recognize->add_option("--r", r, "edge size");
    recognize->add_option("--n", vertices, "number of vertices (pads with zeros)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (!seed_from_env(seed)) {
        std::cerr << "degpoly: DEGPOLY_SEED must be a nonnegative integer\n";
        return kExitUsage;
    }

    degpoly_report* report = nullptr;
    if (*optimize) {
        const degpoly_mode m = mode == "min" ? DEGPOLY_MIN : DEGPOLY_MAX;
        const degpoly_status status = degpoly_optimize(costs.c_str(), m, oracle ? 1 : 0, &report);
        return emit(status, report);
    }
    if (*verify) {
        const degpoly_status status = degpoly_verify(n, suite.c_str(), seed, &report);
        return emit(status, report);
    }
    if (recognize->count("--n") > 0 && vertices <= 0) {
        std::cerr << "degpoly: --n must be positive\n";
        return kExitUsage;
    }
    const degpoly_status status = degpoly_recognize(sequence.c_str(), r, vertices, &report);
    return emit(status, report);
}
