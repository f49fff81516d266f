#include "degpoly/report.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "degpoly/runs.hpp"
#include "degpoly/threshold.hpp"

namespace degpoly {

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const
{
    Json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["result"] = result;
    Json list = Json::array();
    for (const Check& c : checks) {
        Json item{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
        if (!c.formula.empty()) {
            item["formula"] = c.formula;
        }
        list.push_back(std::move(item));
    }
    out["checks"] = std::move(list);
    out["pass"] = passed();
    return out;
}

Suite parse_suite(std::string_view name)
{
    if (name == "counts") return Suite::Counts;
    if (name == "facets") return Suite::Facets;
    if (name == "edges") return Suite::Edges;
    if (name == "lattice-points") return Suite::LatticePoints;
    if (name == "hypergraph") return Suite::Hypergraph;
    if (name == "volume3") return Suite::Volume3;
    throw Error("unknown suite '" + std::string(name)
                + "' (expected counts, facets, edges, lattice-points, hypergraph or volume3)");
}

std::string suite_name(Suite suite)
{
    switch (suite) {
    case Suite::Counts: return "counts";
    case Suite::Facets: return "facets";
    case Suite::Edges: return "edges";
    case Suite::LatticePoints: return "lattice-points";
    case Suite::Hypergraph: return "hypergraph";
    case Suite::Volume3: return "volume3";
    }
    return "unknown";
}

Json to_json(const RationalVector& v)
{
    Json out = Json::array();
    for (const Rational& q : v) {
        out.push_back(to_string(q));
    }
    return out;
}

Json to_json(const FacetInequality& f)
{
    Json out;
    if (f.kind == FacetInequality::Kind::Monotone) {
        out["kind"] = "monotone";
        out["index"] = f.index;
        out["k"] = nullptr;
        out["l"] = nullptr;
    } else {
        out["kind"] = "fhm";
        out["k"] = f.k;
        out["l"] = f.l;
    }
    out["coefficients"] = f.coefficients;
    out["rhs"] = f.rhs;
    return out;
}

Json to_json(const RGraph& h)
{
    Json edges = Json::array();
    for (const Hyperedge& e : h.edges()) {
        edges.push_back(e);
    }
    return Json{{"n", h.n()}, {"r", h.r()}, {"edges", edges}, {"edge_list", format_hyperedge_list(h)}};
}

RGraph witness_from_json(const Json& witness)
{
    const int n = witness.at("n").get<int>();
    const int r = witness.at("r").get<int>();
    const std::string text = witness.at("edge_list").get<std::string>();
    if (r == 2) {
        return RGraph::from_graph(n, parse_edge_list(text, n));
    }
    return parse_hyperedge_list(text, n, r);
}

namespace {

Check make_check(std::string name, Json expected, Json actual, std::string formula = {})
{
    const bool pass = expected == actual;
    return {std::move(name), std::move(expected), std::move(actual), pass, std::move(formula)};
}

Check make_flag(std::string name, bool ok, std::string formula = {})
{
    return {std::move(name), true, ok, ok, std::move(formula)};
}

std::string mode_name(Extremal mode)
{
    return mode == Extremal::Maximal ? "max" : "min";
}

} // namespace

Report cmd_optimize(const RationalVector& costs, Extremal mode, bool oracle)
{
    require_nonempty(costs, "optimize");
    Report report;
    report.command = "optimize";
    report.inputs = {{"costs", to_json(costs)}, {"mode", mode_name(mode)}, {"oracle", oracle}};

    const PoolResult pooled = pool(costs);
    const Partition d = alg2_optimal_partition(costs, mode);
    const Rational value = dot(costs, d);
    const Certificate cert = certificate_full(costs);

    report.result["partition"] = d;
    report.result["value"] = to_string(value);
    report.result["pooled_costs"] = to_json(pooled.values);
    report.result["pool_applications"] = pooled.applications;
    report.result["certificate"] = {
        {"base", to_json(cert.base)}, {"alpha", to_json(cert.alpha)}, {"support", cert.support}};

    report.checks.push_back(make_flag("partition_is_threshold", is_threshold_partition(d)));
    report.checks.push_back(make_check("certificate_reconstructs_costs", to_json(costs),
                                       to_json(reconstruct(cert.base, cert.alpha)),
                                       "c = P(c) + sum alpha_i v_i"));
    report.checks.push_back(make_flag(
        "certificate_coefficients_nonnegative",
        std::all_of(cert.alpha.begin(), cert.alpha.end(), [](const Rational& a) { return a >= 0; })));
    bool support_ok = true;
    for (int i : cert.support) {
        support_ok = support_ok && d[static_cast<std::size_t>(i - 1)] == d[static_cast<std::size_t>(i)];
    }
    report.checks.push_back(make_flag("certificate_support_on_equal_entries", support_ok,
                                      "alpha_i > 0 implies d_i = d_{i+1}"));

    if (oracle) {
        const PartitionOptimum brute = brute_force_optimal(costs);
        Partition extremal = brute.argmax.front();
        for (const Partition& e : brute.argmax) {
            extremal = mode == Extremal::Maximal ? tp_join(extremal, e) : tp_meet(extremal, e);
        }
        report.result["oracle"] = {{"value", to_string(brute.value)},
                                   {"argmax_size", brute.argmax.size()}};
        report.checks.push_back(make_check("oracle_value", to_string(brute.value), to_string(value),
                                           "max of c.d over all threshold partitions"));
        report.checks.push_back(make_check("oracle_extremal_optimum", extremal, d,
                                           mode == Extremal::Maximal ? "join of all maximizers"
                                                                     : "meet of all maximizers"));
    }
    return report;
}

VolumeEstimate monte_carlo_ds3_volume(std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 engine(seed);
    const Rational scale(1, std::int64_t{1} << 31);
    VolumeEstimate out;
    out.samples = samples;
    RationalVector x(3);
    for (std::size_t s = 0; s < samples; ++s) {
        for (Rational& coordinate : x) {
            coordinate = Rational(static_cast<std::int64_t>(engine() >> 32)) * scale;
        }
        if (in_K(x, KorenMethod::Sorted)) {
            ++out.hits;
        }
    }
    out.estimate = 8.0 * static_cast<double>(out.hits) / static_cast<double>(samples);
    return out;
}

namespace {

void require_range(int n, int lo, int hi, Suite suite)
{
    require_bound(lo <= n && n <= hi, "suite " + suite_name(suite) + " requires "
                                          + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

void verify_counts(int n, Report& report)
{
    require_range(n, 4, kEdgeEnumerationBound, Suite::Counts);
    const auto vertices = enumerate_threshold_partitions(n).size();
    const auto edges = count_edges(n, CountMethod::Enumerate);
    const auto facet_list = facets(n).size();
    report.result = {{"vertices", vertices}, {"edges", edges}, {"facets", facet_list}};
    report.checks.push_back(make_check("vertices", std::uint64_t{1} << (n - 1), vertices, "2^(n-1)"));
    report.checks.push_back(make_check("edges", count_edges(n, CountMethod::Formula), edges,
                                       "2^(n-2)(2n-3)"));
    report.checks.push_back(make_check("facets", facet_count_formula(n), facet_list,
                                       "(n^2-3n+12)/2"));
}

void verify_facets(int n, Report& report)
{
    require_range(n, 4, 7, Suite::Facets);
    const std::vector<FacetInequality> list = facets(n);
    std::vector<RationalVector> vertices;
    for (const Partition& d : enumerate_threshold_partitions(n)) {
        vertices.push_back(to_rational(d));
    }
    Json facet_json = Json::array();
    int invalid = 0;
    int low_dimensional = 0;
    int redundant = 0;
    for (std::size_t f = 0; f < list.size(); ++f) {
        std::vector<RationalVector> tight;
        for (const RationalVector& v : vertices) {
            if (!list[f].holds_at(v)) {
                ++invalid;
            } else if (list[f].tight_at(v)) {
                tight.push_back(v);
            }
        }
        const int dimension = affine_dimension(tight);
        if (dimension != n - 1) {
            ++low_dimensional;
        }
        const auto witness = irredundancy_witness(list, f);
        if (!witness) {
            ++redundant;
        }
        Json item = to_json(list[f]);
        item["tight_vertices"] = tight.size();
        item["tight_affine_dimension"] = dimension;
        item["irredundancy_witness"] = witness ? to_json(*witness) : Json(nullptr);
        facet_json.push_back(std::move(item));
    }
    report.result = {{"facets", facet_json}, {"count", list.size()}};
    report.checks.push_back(make_check("facet_count", facet_count_formula(n), list.size(),
                                       "(n^2-3n+12)/2"));
    report.checks.push_back(make_check("violations_at_vertices", 0, invalid,
                                       "a.x <= b at every threshold partition"));
    report.checks.push_back(make_check("facets_not_of_dimension_n_minus_1", 0, low_dimensional,
                                       "tight vertices span an affine hyperplane (dim DP(n) = n)"));
    report.checks.push_back(make_check("facets_without_irredundancy_witness", 0, redundant,
                                       "point violating only the dropped facet"));
}

void verify_edges(int n, Report& report)
{
    require_range(n, 3, kEdgeEnumerationBound, Suite::Edges);
    const auto enumerated = count_edges(n, CountMethod::Enumerate);
    report.result = {{"enumerated", enumerated}};
    report.checks.push_back(make_check("edges_formula", count_edges(n, CountMethod::Formula),
                                       enumerated, "2^(n-2)(2n-3)"));
    report.checks.push_back(make_check("edges_recurrence", edge_count_recurrence(n), enumerated,
                                       "E_3 = 6, E_n = 2E_(n-1) + 2^(n-1)"));
}

void verify_lattice_points(int n, Report& report)
{
    require_range(n, 1, kGraphEnumerationBound, Suite::LatticePoints);
    const std::set<Partition> from_polytope = lattice_points_of_F(n);
    const std::set<Partition> from_graphs = enumerate_degree_partitions(n);
    report.result = {{"lattice_points", from_polytope.size()},
                     {"degree_partitions", from_graphs.size()}};
    report.checks.push_back(make_check("integral_even_points_of_F_equal_degree_partitions",
                                       Json(from_graphs), Json(from_polytope),
                                       "d in DP(n) iff d in F(n) and sum(d) even"));
}

void decreasing_sequences(int length, int max_value, int budget, Partition& prefix,
                          std::vector<Partition>& out)
{
    if (static_cast<int>(prefix.size()) == length) {
        out.push_back(prefix);
        return;
    }
    for (int v = 0; v <= std::min(max_value, budget); ++v) {
        prefix.push_back(v);
        decreasing_sequences(length, v, budget - v, prefix, out);
        prefix.pop_back();
    }
}

void verify_hypergraph(int n, Report& report)
{
    require_range(n, 3, 6, Suite::Hypergraph);
    Json per_r = Json::object();
    for (int r : {2, 3}) {
        const int cap = r == 3 ? 12 : 10;
        std::vector<Partition> candidates;
        Partition prefix;
        decreasing_sequences(n, cap, cap, prefix, candidates);
        int graphical = 0;
        int oracle_mismatch = 0;
        int partition_mismatch = 0;
        int realization_failures = 0;
        for (const Partition& d : candidates) {
            const bool verdict = is_r_graphical_partition(d, n, r);
            graphical += verdict ? 1 : 0;
            if (verdict != brute_force_r_graphical(d, n, r)) {
                ++oracle_mismatch;
            }
            if (r == 2 && verdict != is_degree_partition(d)) {
                ++partition_mismatch;
            }
            const auto realized = realize_r_graph(d, n, r);
            if (realized.has_value() != verdict
                || (realized && degree_sequence_r(*realized) != d)) {
                ++realization_failures;
            }
        }
        const std::string key = "r=" + std::to_string(r);
        per_r[key] = {{"sum_bound", cap}, {"sequences", candidates.size()}, {"graphical", graphical}};
        report.checks.push_back(make_check(key + " majorization_vs_brute_force", 0, oracle_mismatch,
                                           "graphical iff majorized by an r-ideal partition"));
        if (r == 2) {
            report.checks.push_back(make_check(key + " majorization_vs_F_criterion", 0,
                                               partition_mismatch, "d in F(n) and sum(d) even"));
        }
        report.checks.push_back(make_check(key + " realization_failures", 0, realization_failures,
                                           "unit-transformation edge swaps from an r-ideal"));
    }
    report.result = per_r;
}

void verify_volume3(int n, std::uint64_t seed, Report& report)
{
    require_range(n, 3, 3, Suite::Volume3);
    std::vector<RationalVector> vertices;
    for (const Partition& d : enumerate_threshold_partitions(3)) {
        vertices.push_back(to_rational(d));
    }
    const Rational exact = simplex_volume(vertices);
    const VolumeEstimate mc = monte_carlo_ds3_volume(kVolumeSamples, seed);
    report.result = {{"dp3_volume", to_string(exact)},
                     {"ds3_volume_estimate", mc.estimate},
                     {"ds3_volume_estimate_is_approximate", true},
                     {"samples", mc.samples},
                     {"hits", mc.hits}};
    report.checks.push_back(make_check("dp3_volume_exact", "1/3", to_string(exact),
                                       "|det(v1-v0, v2-v0, v3-v0)| / 3!"));
    const bool within = mc.estimate >= 1.96 && mc.estimate <= 2.04;
    report.checks.push_back({"ds3_volume_monte_carlo", "[1.96, 2.04]", mc.estimate, within,
                             "vol DS(3) = 3! * vol DP(3) = 2"});
}

} // namespace

Report cmd_verify(int n, Suite suite, std::uint64_t seed)
{
    Report report;
    report.command = "verify";
    report.inputs = {{"n", n}, {"suite", suite_name(suite)}, {"seed", seed}};
    switch (suite) {
    case Suite::Counts: verify_counts(n, report); break;
    case Suite::Facets: verify_facets(n, report); break;
    case Suite::Edges: verify_edges(n, report); break;
    case Suite::LatticePoints: verify_lattice_points(n, report); break;
    case Suite::Hypergraph: verify_hypergraph(n, report); break;
    case Suite::Volume3: verify_volume3(n, seed, report); break;
    }
    return report;
}

Report cmd_recognize(const IntSequence& sequence, int r, std::optional<int> n)
{
    require_nonempty(sequence, "recognize");
    require(is_nonnegative(sequence), "recognize: entries must be nonnegative");
    const int length = static_cast<int>(sequence.size());
    const int vertices = n.value_or(length);
    require(vertices >= length, "recognize: n is smaller than the sequence length");
    require(2 <= r && r <= vertices, "recognize: need 2 <= r <= n");

    IntSequence seq = sequence;
    seq.resize(static_cast<std::size_t>(vertices), 0);
    const Partition sorted = sort_decreasing(seq);
    const bool is_partition = seq == sorted;

    Report report;
    report.command = "recognize";
    report.inputs = {{"sequence", sequence}, {"r", r}, {"n", vertices}};

    bool verdict = false;
    std::string criterion;
    if (r == 2) {
        verdict = is_partition ? is_degree_partition(seq) : is_degree_sequence(seq);
        criterion = is_partition ? "d in F(n) and sum(d) even" : "d in K(n) and sum(d) even";
    } else {
        verdict = is_r_graphical_partition(sorted, vertices, r);
        criterion = "sorted sequence majorized by an r-ideal partition";
    }
    std::string reason;
    if (sum(seq) % r != 0) {
        reason = r == 2 ? "odd degree sum" : "degree sum not divisible by r";
    } else {
        reason = verdict ? "criterion satisfied" : "criterion violated";
    }
    report.result = {{"verdict", verdict ? "yes" : "no"},
                     {"criterion", criterion},
                     {"reason", reason},
                     {"is_partition", is_partition}};

    const auto realized = realize_r_graph(sorted, vertices, r);
    report.checks.push_back(make_check("realization_agrees_with_criterion", verdict,
                                       realized.has_value(), criterion));
    if (realized) {
        // realized has degree sequence `sorted`; move vertex k to the k-th
        // position of the input in decreasing-degree order.
        std::vector<std::size_t> order(seq.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return seq[a] > seq[b]; });
        std::vector<int> labels(seq.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            labels[k] = static_cast<int>(order[k]) + 1;
        }
        const RGraph witness = relabel(*realized, labels);
        report.result["witness"] = to_json(witness);
        report.checks.push_back(make_check("witness_degree_sequence", seq, degree_sequence_r(witness)));
    } else {
        report.result["witness"] = nullptr;
    }
    return report;
}

} // namespace degpoly
