#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "degpoly/report.hpp"

using namespace degpoly;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string command = env + (env.empty() ? "" : " ") + "'" + DEGPOLY_CLI + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        r.out.append(buffer.data(), got);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Json parsed(const Run& r)
{
    return Json::parse(r.out);
}

} // namespace

TEST_CASE("help and usage errors")
{
    CHECK(run("--help").status == 0);
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("optimize").status == 2);
    CHECK(run("optimize --costs 1,x").status == 2);
    CHECK(run("optimize --costs 1,2 --mode sideways").status == 2);
    CHECK(run("verify --n 4").status == 2);
    CHECK(run("verify --n 4 --suite nothing").status == 2);
    CHECK(run("verify --n 40 --suite counts").status == 2);
    CHECK(run("verify --n 8 --suite facets").status == 2);
    CHECK(run("recognize --seq 1,1 --r 3").status == 2);
    CHECK(run("recognize --seq 1,1 --n 0").status == 2);
    CHECK(run("recognize --seq 1,-1").status == 2);
    CHECK(run("verify --n 4 --suite counts", "DEGPOLY_SEED=abc").status == 2);
    // usage errors print nothing on stdout
    CHECK(run("verify --n 40 --suite counts").out.empty());
}

TEST_CASE("optimize")
{
    const Run r = run("optimize --costs 1,-1,2 --mode max");
    REQUIRE(r.status == 0);
    const Json j = parsed(r);
    CHECK(j.at("pass") == true);
    CHECK(j.at("result").at("partition") == Json::array({2, 2, 2}));
    CHECK(j.at("result").at("value") == "4");

    const Json zero = parsed(run("optimize --costs 0,0 --mode min --oracle"));
    CHECK(zero.at("result").at("partition") == Json::array({0, 0}));
    CHECK(zero.at("pass") == true);

    const Run fractions = run("optimize --costs 1/2,-3/4,5 --oracle");
    CHECK(fractions.status == 0);
    CHECK(parsed(fractions) == cmd_optimize({Rational(1, 2), Rational(-3, 4), 5}, Extremal::Maximal, true).to_json());
}

TEST_CASE("verify")
{
    const Run counts = run("verify --n 6 --suite counts");
    CHECK(counts.status == 0);
    CHECK(parsed(counts) == cmd_verify(6, Suite::Counts).to_json());
    CHECK(run("verify --n 5 --suite facets").status == 0);
    CHECK(parsed(run("verify --n 5 --suite edges")).at("result").at("enumerated") == 56);
    CHECK(run("verify --n 5 --suite lattice-points").status == 0);
    CHECK(run("verify --n 4 --suite hypergraph").status == 0);
}

TEST_CASE("seed handling")
{
    // seed only feeds the volume estimate; it is echoed in the inputs
    CHECK(parsed(run("verify --n 4 --suite counts")).at("inputs").at("seed") == kDefaultSeed);
    CHECK(parsed(run("--seed 7 verify --n 4 --suite counts")).at("inputs").at("seed") == 7);
    CHECK(parsed(run("--seed 7 verify --n 4 --suite counts", "DEGPOLY_SEED=11")).at("inputs").at("seed") == 11);
    const Run a = run("verify --n 5 --suite facets", "DEGPOLY_SEED=3");
    const Run b = run("verify --n 5 --suite facets", "DEGPOLY_SEED=3");
    CHECK(a.out == b.out);
}

TEST_CASE("recognize")
{
    const Json path = parsed(run("recognize --seq 2,1,1"));
    CHECK(path.at("result").at("verdict") == "yes");
    CHECK(degree_sequence_r(witness_from_json(path.at("result").at("witness"))) == IntSequence{2, 1, 1});

    const Run odd = run("recognize --seq 2,2,1");
    CHECK(odd.status == 0);
    CHECK(parsed(odd).at("result").at("verdict") == "no");
    CHECK(parsed(odd).at("result").at("reason") == "odd degree sum");

    const Json hyper = parsed(run("recognize --seq 2,2,1,1 --r 3 --n 4"));
    CHECK(hyper.at("result").at("verdict") == "yes");
    const RGraph w = witness_from_json(hyper.at("result").at("witness"));
    CHECK(w.r() == 3);
    CHECK(degree_sequence_r(w) == IntSequence{2, 2, 1, 1});

    const Json unsorted = parsed(run("recognize --seq 1,2,1"));
    CHECK(degree_sequence_r(witness_from_json(unsorted.at("result").at("witness"))) == IntSequence{1, 2, 1});
    CHECK(parsed(run("recognize --seq 3,1,1,1 --r 3")).at("result").at("verdict") == "no");
}
