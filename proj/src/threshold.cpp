#include "degpoly/threshold.hpp"

#include <sstream>
#include <stdexcept>

namespace degpoly {

int pair_count(int n)
{
    return n * (n - 1) / 2;
}

int pair_index(int n, const Pair& p)
{
    require_valid_pair(n, p);
    // pairs with first coordinate < p.i come first
    const int before = (p.i - 1) * n - (p.i - 1) * p.i / 2;
    return before + (p.j - p.i - 1);
}

std::vector<Pair> all_pairs(int n)
{
    std::vector<Pair> out;
    out.reserve(static_cast<std::size_t>(pair_count(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

void require_valid_pair(int n, const Pair& p)
{
    if (!(1 <= p.i && p.i < p.j && p.j <= n)) {
        throw Error("invalid pair (" + std::to_string(p.i) + "," + std::to_string(p.j)
                    + ") for n=" + std::to_string(n));
    }
}

bool is_order_ideal(int n, const EdgeSet& edges)
{
    require(n >= 1, "is_order_ideal: n must be positive");
    for (const Pair& p : edges) {
        require_valid_pair(n, p);
    }
    for (const Pair& p : edges) {
        if (p.i > 1 && edges.count({p.i - 1, p.j}) == 0) {
            return false;
        }
        if (p.j - 1 > p.i && edges.count({p.i, p.j - 1}) == 0) {
            return false;
        }
    }
    return true;
}

OrderIdeal::OrderIdeal(int n, EdgeSet edges)
    : n_(n)
    , edges_(std::move(edges))
{
    require(is_order_ideal(n_, edges_), "edge set is not an order ideal of S(n)");
}

IntSequence degree_sequence(int n, const EdgeSet& edges)
{
    IntSequence d(static_cast<std::size_t>(n), 0);
    for (const Pair& p : edges) {
        require_valid_pair(n, p);
        ++d[p.i - 1];
        ++d[p.j - 1];
    }
    return d;
}

Partition degree_partition_of_ideal(const OrderIdeal& ideal)
{
    return degree_sequence(ideal.n(), ideal.edges());
}

bool is_threshold_partition(const Partition& d)
{
    require_partition(d, "is_threshold_partition");
    // The live window is d[lo..hi) with every entry lowered by `offset`.
    std::size_t lo = 0;
    std::size_t hi = d.size();
    int offset = 0;
    while (hi - lo > 1) {
        const int m = static_cast<int>(hi - lo);
        if (d[hi - 1] - offset < 0) {
            return false;
        }
        if (d[lo] - offset == m - 1) {
            ++lo;
            ++offset;
        } else if (d[hi - 1] - offset == 0) {
            --hi;
        } else {
            return false;
        }
    }
    return d[lo] - offset == 0;
}

OrderIdeal ideal_from_partition(const Partition& d)
{
    require(is_threshold_partition(d), "ideal_from_partition: not a threshold partition");
    const int n = static_cast<int>(d.size());
    EdgeSet edges;
    std::size_t lo = 0;
    std::size_t hi = d.size();
    int offset = 0;
    while (hi - lo > 1) {
        const int m = static_cast<int>(hi - lo);
        const bool dominating = d[lo] - offset == m - 1;
        const bool isolated = d[hi - 1] - offset == 0;
        if (dominating && isolated) {
            throw std::logic_error("ideal_from_partition: vertex both dominating and isolated");
        }
        if (dominating) {
            for (std::size_t j = lo + 1; j < hi; ++j) {
                edges.insert({static_cast<int>(lo) + 1, static_cast<int>(j) + 1});
            }
            ++lo;
            ++offset;
        } else {
            --hi;
        }
    }
    return OrderIdeal(n, std::move(edges));
}

std::vector<Partition> enumerate_threshold_partitions(int n, int bound)
{
    require_bound(1 <= n && n <= bound,
                  "enumerate_threshold_partitions: n must lie in [1, " + std::to_string(bound) + "]");
    std::vector<Partition> current{{0}};
    for (int m = 2; m <= n; ++m) {
        std::vector<Partition> next;
        next.reserve(current.size() * 2);
        for (const Partition& d : current) {
            Partition e = d;
            e.push_back(0);
            next.push_back(std::move(e));
        }
        for (const Partition& d : current) {
            Partition e;
            e.reserve(static_cast<std::size_t>(m));
            e.push_back(m - 1);
            for (int v : d) {
                e.push_back(v + 1);
            }
            next.push_back(std::move(e));
        }
        current = std::move(next);
    }
    return current;
}

namespace {

template <typename Op>
Partition componentwise(const Partition& d, const Partition& e, Op op, const char* name)
{
    require(d.size() == e.size(), std::string(name) + ": length mismatch");
    require(is_threshold_partition(d) && is_threshold_partition(e),
            std::string(name) + ": operands must be threshold partitions");
    Partition out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        out[i] = op(d[i], e[i]);
    }
    return out;
}

} // namespace

Partition tp_join(const Partition& d, const Partition& e)
{
    return componentwise(d, e, [](int a, int b) { return std::max(a, b); }, "tp_join");
}

Partition tp_meet(const Partition& d, const Partition& e)
{
    return componentwise(d, e, [](int a, int b) { return std::min(a, b); }, "tp_meet");
}

OrderIdeal graph_from_weights(const RationalVector& b, bool strict)
{
    require(is_weakly_decreasing(b), "graph_from_weights: weights must be weakly decreasing");
    const int n = static_cast<int>(b.size());
    EdgeSet edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Rational s = b[i - 1] + b[j - 1];
            if (strict ? s > 0 : s >= 0) {
                edges.insert({i, j});
            }
        }
    }
    return OrderIdeal(n, std::move(edges));
}

bool is_proper_threshold_graph(int n, const EdgeSet& edges)
{
    return is_order_ideal(n, edges);
}

EdgeSet parse_edge_list(std::string_view text, int n)
{
    EdgeSet edges;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        Pair p{};
        std::string extra;
        if (!(fields >> p.i >> p.j) || (fields >> extra)) {
            throw Error("edge list line " + std::to_string(line_number) + ": expected \"i j\"");
        }
        require_valid_pair(n, p);
        edges.insert(p);
    }
    return edges;
}

std::string format_edge_list(const EdgeSet& edges)
{
    std::string out;
    for (const Pair& p : edges) {
        out += std::to_string(p.i) + " " + std::to_string(p.j) + "\n";
    }
    return out;
}

} // namespace degpoly
