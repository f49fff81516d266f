#include "degpoly/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace degpoly {

namespace {

std::string describe(const Hyperedge& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        s += (i ? "," : "") + std::to_string(e[i]);
    }
    return s + ")";
}

void require_hyperedge(int n, int r, const Hyperedge& e)
{
    bool ok = static_cast<int>(e.size()) == r;
    for (std::size_t i = 0; ok && i < e.size(); ++i) {
        ok = e[i] >= 1 && e[i] <= n && (i == 0 || e[i - 1] < e[i]);
    }
    if (!ok) {
        throw Error("invalid edge " + describe(e) + " for n=" + std::to_string(n)
                    + ", r=" + std::to_string(r));
    }
}

Hyperedge replace_vertex(const Hyperedge& e, int from, int to)
{
    Hyperedge out;
    out.reserve(e.size());
    for (int v : e) {
        out.push_back(v == from ? to : v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains_vertex(const Hyperedge& e, int v)
{
    return std::binary_search(e.begin(), e.end(), v);
}

} // namespace

RGraph::RGraph(int n, int r, std::set<Hyperedge> edges)
    : n_(n)
    , r_(r)
    , edges_(std::move(edges))
{
    require(1 <= r && r <= n, "RGraph: need 1 <= r <= n");
    for (const Hyperedge& e : edges_) {
        require_hyperedge(n, r, e);
    }
}

RGraph RGraph::from_graph(int n, const EdgeSet& edges)
{
    std::set<Hyperedge> out;
    for (const Pair& p : edges) {
        out.insert({p.i, p.j});
    }
    return RGraph(n, 2, std::move(out));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t factor = n - k + i;
        // result * factor / i is exact at every step; guard the product.
        if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result = result * factor / i;
    }
    return result;
}

std::vector<Hyperedge> all_r_subsets(int n, int r)
{
    require(1 <= r && r <= n, "all_r_subsets: need 1 <= r <= n");
    std::vector<Hyperedge> out;
    Hyperedge current(static_cast<std::size_t>(r));
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        out.push_back(current);
        int pos = r - 1;
        while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - r + pos + 1) {
            --pos;
        }
        if (pos < 0) {
            return out;
        }
        ++current[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < r; ++q) {
            current[static_cast<std::size_t>(q)] = current[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
}

std::vector<Hyperedge> lower_covers(const Hyperedge& e)
{
    std::vector<Hyperedge> out;
    for (std::size_t t = 0; t < e.size(); ++t) {
        const int lowered = e[t] - 1;
        const int floor = t == 0 ? 0 : e[t - 1];
        if (lowered > floor) {
            Hyperedge cover = e;
            cover[t] = lowered;
            out.push_back(std::move(cover));
        }
    }
    return out;
}

bool is_r_ideal(const RGraph& h)
{
    for (const Hyperedge& e : h.edges()) {
        for (const Hyperedge& cover : lower_covers(e)) {
            if (!h.contains(cover)) {
                return false;
            }
        }
    }
    return true;
}

IntSequence degree_sequence_r(const RGraph& h)
{
    IntSequence d(static_cast<std::size_t>(h.n()), 0);
    for (const Hyperedge& e : h.edges()) {
        for (int v : e) {
            ++d[static_cast<std::size_t>(v - 1)];
        }
    }
    return d;
}

IntSequence apply_unit_transformation(const IntSequence& a, const UnitTransformation& t)
{
    const int n = static_cast<int>(a.size());
    require(1 <= t.source && t.source <= n && 1 <= t.target && t.target <= n,
            "unit transformation: index out of range");
    const auto i = static_cast<std::size_t>(t.source - 1);
    const auto j = static_cast<std::size_t>(t.target - 1);
    require(a[i] >= a[j] + 2, "unit transformation: requires a(i) >= a(j) + 2");
    IntSequence out = a;
    --out[i];
    ++out[j];
    return out;
}

std::vector<UnitTransformation> muirhead_chain(const IntSequence& a, const IntSequence& b)
{
    require(majorizes(a, b), "muirhead_chain: a does not majorize b");
    const IntSequence target = sort_decreasing(b);
    const std::size_t n = a.size();
    IntSequence current = a;
    std::vector<UnitTransformation> chain;
    std::vector<std::size_t> order(n);
    while (true) {
        // Positions of `current` in weakly decreasing order, ties by index.
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return current[x] > current[y]; });
        std::size_t excess = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (current[order[k]] != target[k]) {
                excess = k;
                break;
            }
        }
        if (excess == n) {
            return chain;
        }
        std::size_t deficit = excess + 1;
        while (deficit < n && current[order[deficit]] >= target[deficit]) {
            ++deficit;
        }
        if (deficit == n) {
            throw std::logic_error("muirhead_chain: no deficit position");
        }
        const UnitTransformation step{static_cast<int>(order[excess]) + 1,
                                      static_cast<int>(order[deficit]) + 1};
        current = apply_unit_transformation(current, step);
        chain.push_back(step);
    }
}

RGraph transfer_edge(const RGraph& h, const UnitTransformation& t)
{
    require(1 <= t.source && t.source <= h.n() && 1 <= t.target && t.target <= h.n()
                && t.source != t.target,
            "transfer_edge: invalid vertices");
    for (const Hyperedge& e : h.edges()) {
        if (!contains_vertex(e, t.source) || contains_vertex(e, t.target)) {
            continue;
        }
        Hyperedge moved = replace_vertex(e, t.source, t.target);
        if (h.contains(moved)) {
            continue;
        }
        std::set<Hyperedge> edges = h.edges();
        edges.erase(e);
        edges.insert(std::move(moved));
        return RGraph(h.n(), h.r(), std::move(edges));
    }
    throw Error("transfer_edge: no edge can be moved from the source to the target");
}

RGraph relabel(const RGraph& h, const std::vector<int>& relabeling)
{
    require(static_cast<int>(relabeling.size()) == h.n(), "relabel: wrong permutation length");
    std::set<Hyperedge> edges;
    for (const Hyperedge& e : h.edges()) {
        Hyperedge mapped;
        for (int v : e) {
            mapped.push_back(relabeling[static_cast<std::size_t>(v - 1)]);
        }
        std::sort(mapped.begin(), mapped.end());
        edges.insert(std::move(mapped));
    }
    return RGraph(h.n(), h.r(), std::move(edges));
}

namespace {

/// New label for each vertex, listing vertices by decreasing degree, ties by index.
std::vector<int> decreasing_degree_labels(const IntSequence& degrees)
{
    std::vector<std::size_t> order(degrees.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return degrees[x] > degrees[y]; });
    std::vector<int> labels(degrees.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        labels[order[k]] = static_cast<int>(k) + 1;
    }
    return labels;
}

bool reverse_move(std::set<Hyperedge>& edges, const IntSequence& degrees, int n)
{
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j || degrees[static_cast<std::size_t>(i - 1)] < degrees[static_cast<std::size_t>(j - 1)]) {
                continue;
            }
            for (const Hyperedge& e : edges) {
                if (!contains_vertex(e, j) || contains_vertex(e, i)) {
                    continue;
                }
                Hyperedge moved = replace_vertex(e, j, i);
                if (edges.count(moved) == 0) {
                    const Hyperedge old = e;
                    edges.erase(old);
                    edges.insert(std::move(moved));
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace

Saturation reverse_saturate(const RGraph& h)
{
    std::set<Hyperedge> edges = h.edges();
    IntSequence degrees = degree_sequence_r(h);
    const long long cap = sum(degrees) * h.n() * static_cast<long long>(binomial(h.n(), h.r()));
    int moves = 0;
    while (reverse_move(edges, degrees, h.n())) {
        ++moves;
        if (moves > cap) {
            throw std::logic_error("reverse_saturate: iteration cap exceeded");
        }
        degrees = degree_sequence_r(RGraph(h.n(), h.r(), edges));
    }
    RGraph saturated(h.n(), h.r(), std::move(edges));
    std::vector<int> labels = decreasing_degree_labels(degrees);
    RGraph relabeled = relabel(saturated, labels);
    return {std::move(saturated), std::move(labels), std::move(relabeled), moves};
}

namespace {

void require_ideal_bound(int n, int r)
{
    require(1 <= r && r <= n, "r-ideal enumeration: need 1 <= r <= n");
    require_bound(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r))
                      <= static_cast<std::uint64_t>(kRIdealEnumerationBound),
                  "r-ideal enumeration: C(n,r) must be at most "
                      + std::to_string(kRIdealEnumerationBound));
}

} // namespace

std::vector<RGraph> enumerate_r_ideals(int n, int r)
{
    require_ideal_bound(n, r);
    const std::vector<Hyperedge> elements = all_r_subsets(n, r);
    std::map<Hyperedge, std::size_t> position;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        position[elements[k]] = k;
    }
    std::vector<std::uint32_t> cover_mask(elements.size(), 0);
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (const Hyperedge& c : lower_covers(elements[k])) {
            cover_mask[k] |= std::uint32_t{1} << position.at(c);
        }
    }

    // Decide elements in lexicographic order; covers are always decided first.
    std::vector<std::uint32_t> ideals;
    auto recurse = [&](auto&& self, std::size_t k, std::uint32_t mask) -> void {
        if (k == elements.size()) {
            ideals.push_back(mask);
            return;
        }
        self(self, k + 1, mask);
        if ((mask & cover_mask[k]) == cover_mask[k]) {
            self(self, k + 1, mask | (std::uint32_t{1} << k));
        }
    };
    recurse(recurse, 0, 0);

    std::vector<RGraph> out;
    out.reserve(ideals.size());
    for (std::uint32_t mask : ideals) {
        std::set<Hyperedge> edges;
        for (std::size_t k = 0; k < elements.size(); ++k) {
            if ((mask >> k) & 1U) {
                edges.insert(elements[k]);
            }
        }
        out.emplace_back(n, r, std::move(edges));
    }
    return out;
}

std::set<Partition> enumerate_r_ideal_partitions(int n, int r, long long degree_sum)
{
    std::set<Partition> out;
    for (const RGraph& ideal : enumerate_r_ideals(n, r)) {
        if (static_cast<long long>(ideal.edges().size()) * r == degree_sum) {
            out.insert(degree_sequence_r(ideal));
        }
    }
    return out;
}

namespace {

void require_shape(const Partition& d, int n, int r, const char* what)
{
    require_partition(d, what);
    require(static_cast<int>(d.size()) == n, std::string(what) + ": length must equal n");
    require(1 <= r && r <= n, std::string(what) + ": need 1 <= r <= n");
}

} // namespace

bool is_r_graphical_partition(const Partition& d, int n, int r)
{
    require_shape(d, n, r, "is_r_graphical_partition");
    require_ideal_bound(n, r);
    const long long total = sum(d);
    if (total % r != 0) {
        return false;
    }
    for (const Partition& e : enumerate_r_ideal_partitions(n, r, total)) {
        if (majorizes(e, d)) {
            return true;
        }
    }
    return false;
}

std::optional<RGraph> realize_r_graph(const Partition& d, int n, int r)
{
    require_shape(d, n, r, "realize_r_graph");
    const long long total = sum(d);
    if (total % r != 0) {
        return std::nullopt;
    }
    // r = 2 ideals are exactly the threshold graphs, which enumerate far
    // beyond the generic r-ideal bound.
    std::vector<RGraph> candidates;
    if (r == 2) {
        for (const Partition& t : enumerate_threshold_partitions(n)) {
            if (sum(t) == total) {
                candidates.push_back(RGraph::from_graph(n, ideal_from_partition(t).edges()));
            }
        }
    } else {
        for (RGraph& ideal : enumerate_r_ideals(n, r)) {
            if (static_cast<long long>(ideal.edges().size()) * r == total) {
                candidates.push_back(std::move(ideal));
            }
        }
    }
    for (const RGraph& start : candidates) {
        const IntSequence degrees = degree_sequence_r(start);
        if (!majorizes(degrees, d)) {
            continue;
        }
        RGraph graph = start;
        for (const UnitTransformation& step : muirhead_chain(degrees, d)) {
            graph = transfer_edge(graph, step);
        }
        return relabel(graph, decreasing_degree_labels(degree_sequence_r(graph)));
    }
    return std::nullopt;
}

bool brute_force_r_graphical(const Partition& d, int n, int r, std::uint64_t budget)
{
    require_shape(d, n, r, "brute_force_r_graphical");
    const long long total = sum(d);
    if (total % r != 0) {
        return false;
    }
    const std::vector<Hyperedge> elements = all_r_subsets(n, r);
    const auto m = static_cast<std::size_t>(total / r);
    if (m > elements.size()) {
        return false;
    }
    require_bound(binomial(elements.size(), m) <= budget,
                  "brute_force_r_graphical: search space exceeds budget of " + std::to_string(budget));
    // Every m-subset of S(n,r), via an index combination in lexicographic order.
    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    IntSequence degrees(static_cast<std::size_t>(n));
    while (true) {
        std::fill(degrees.begin(), degrees.end(), 0);
        for (std::size_t idx : pick) {
            for (int v : elements[idx]) {
                ++degrees[static_cast<std::size_t>(v - 1)];
            }
        }
        std::sort(degrees.begin(), degrees.end(), std::greater<int>());
        if (degrees == d) {
            return true;
        }
        std::size_t pos = m;
        while (pos > 0 && pick[pos - 1] == elements.size() - m + pos - 1) {
            --pos;
        }
        if (pos == 0) {
            return false;
        }
        ++pick[pos - 1];
        for (std::size_t q = pos; q < m; ++q) {
            pick[q] = pick[q - 1] + 1;
        }
    }
}

RGraph parse_hyperedge_list(std::string_view text, int n, int r)
{
    std::set<Hyperedge> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        Hyperedge e;
        int v = 0;
        while (fields >> v) {
            e.push_back(v);
        }
        if (!fields.eof()) {
            throw Error("edge list line " + std::to_string(line_number) + ": expected integers");
        }
        require_hyperedge(n, r, e);
        edges.insert(std::move(e));
    }
    return RGraph(n, r, std::move(edges));
}

std::string format_hyperedge_list(const RGraph& h)
{
    std::string out;
    for (const Hyperedge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            out += (i ? " " : "") + std::to_string(e[i]);
        }
        out += "\n";
    }
    return out;
}

} // namespace degpoly
