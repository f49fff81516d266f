// Machine-readable reports for the command-line front end. Every report
// echoes its inputs, carries the computed result and a list of checks, and
// passes only when every check passes.

#ifndef DEGPOLY_REPORT_HPP
#define DEGPOLY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degpoly/hypergraph.hpp"
#include "degpoly/optimize.hpp"
#include "degpoly/polytope.hpp"

namespace degpoly {

using Json = nlohmann::json;

struct Check {
    std::string name;
    Json expected;
    Json actual;
    bool pass = false;
    std::string formula; ///< closed form or criterion the expected value comes from
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    std::vector<Check> checks;

    bool passed() const;
    Json to_json() const;
};

enum class Suite { Counts, Facets, Edges, LatticePoints, Hypergraph, Volume3 };

Suite parse_suite(std::string_view name);
std::string suite_name(Suite suite);

constexpr std::uint64_t kDefaultSeed = 20080417;
constexpr std::size_t kVolumeSamples = 1'000'000;

Report cmd_optimize(const RationalVector& costs, Extremal mode, bool oracle);
Report cmd_verify(int n, Suite suite, std::uint64_t seed = kDefaultSeed);

/// n = nullopt uses the sequence length; a larger n pads with zeros.
Report cmd_recognize(const IntSequence& sequence, int r, std::optional<int> n = std::nullopt);

Json to_json(const RationalVector& v);
Json to_json(const FacetInequality& f);
Json to_json(const RGraph& h);

/// Reads the "edges"/"n"/"r" of a witness object back through the edge-list reader.
RGraph witness_from_json(const Json& witness);

struct VolumeEstimate {
    double estimate = 0.0;
    std::size_t hits = 0;
    std::size_t samples = 0;
};

/// Uniform samples in [0,2]^3 (dyadic rationals) tested for exact K(3) membership.
VolumeEstimate monte_carlo_ds3_volume(std::size_t samples, std::uint64_t seed);

} // namespace degpoly

#endif
