#include "degpoly/optimize.hpp"

#include <cstdint>
#include <string>

#include "degpoly/runs.hpp"

namespace degpoly {

PairVector::PairVector(int n)
    : PairVector(n, std::vector<Rational>(static_cast<std::size_t>(pair_count(n))))
{
}

PairVector::PairVector(int n, std::vector<Rational> values)
    : n_(n)
    , values_(std::move(values))
{
    require(n >= 1, "PairVector: n must be positive");
    require(static_cast<int>(values_.size()) == pair_count(n),
            "PairVector: expected one value per element of S(n)");
}

const Rational& PairVector::at(int i, int j) const
{
    return values_[static_cast<std::size_t>(pair_index(n_, {i, j}))];
}

Rational& PairVector::at(int i, int j)
{
    return values_[static_cast<std::size_t>(pair_index(n_, {i, j}))];
}

Rational ideal_weight(const PairCostVector& c, const EdgeSet& edges)
{
    Rational w = 0;
    for (const Pair& p : edges) {
        w += c.at(p.i, p.j);
    }
    return w;
}

OrderIdeal alg1_max_ideal(const PairCostVector& c, Extremal tie)
{
    const int n = c.n();
    struct Cell {
        EdgeSet edges;
        Rational weight;
    };
    // next_row[j] holds E_{i+1,j}; row[j] holds E_{i,j}. Index 0 unused.
    std::vector<Cell> next_row(static_cast<std::size_t>(n) + 1);
    for (int i = n - 1; i >= 1; --i) {
        std::vector<Cell> row(static_cast<std::size_t>(n) + 1);
        Rational star = 0;
        for (int j = i + 1; j <= n; ++j) {
            star += c.at(i, j);
            const Cell& inner = next_row[static_cast<std::size_t>(j)];
            const Cell& shorter = row[static_cast<std::size_t>(j - 1)];
            const Rational dominating = star + inner.weight;
            const bool take = tie == Extremal::Maximal ? dominating >= shorter.weight
                                                       : dominating > shorter.weight;
            Cell cell;
            if (take) {
                cell.edges = inner.edges;
                for (int k = i + 1; k <= j; ++k) {
                    cell.edges.insert({i, k});
                }
                cell.weight = dominating;
            } else {
                cell = shorter;
            }
            row[static_cast<std::size_t>(j)] = std::move(cell);
        }
        next_row = std::move(row);
    }
    return OrderIdeal(n, n >= 2 ? next_row[static_cast<std::size_t>(n)].edges : EdgeSet{});
}

PairCostVector lift_costs(const RationalVector& c)
{
    require_nonempty(c, "lift_costs");
    const int n = static_cast<int>(c.size());
    PairCostVector out(n);
    for (const Pair& p : all_pairs(n)) {
        out.at(p.i, p.j) = c[p.i - 1] + c[p.j - 1];
    }
    return out;
}

Partition alg2_optimal_partition(const RationalVector& c, Extremal mode)
{
    const RationalVector pooled = pool(c).values;
    const OrderIdeal ideal = graph_from_weights(pooled, mode == Extremal::Minimal);
    return degree_partition_of_ideal(ideal);
}

CertificateStep certificate_step(const RationalVector& c)
{
    const RunDecomposition decomposition = ascending_runs(c);
    CertificateStep out{average_runs(c), RationalVector(c.size() - 1)};
    for (const Interval& run : decomposition.runs) {
        const Rational mean = out.residual[static_cast<std::size_t>(run.first - 1)];
        Rational prefix = 0;
        for (int i = run.first; i < run.last; ++i) {
            prefix += c[static_cast<std::size_t>(i - 1)];
            out.coefficients[static_cast<std::size_t>(i - 1)] = (i + 1 - run.first) * mean - prefix;
        }
    }
    return out;
}

Certificate certificate_full(const RationalVector& c)
{
    require_nonempty(c, "certificate_full");
    Certificate out{c, RationalVector(c.size() - 1), {}};
    while (!is_weakly_decreasing(out.base)) {
        CertificateStep step = certificate_step(out.base);
        for (std::size_t i = 0; i < out.alpha.size(); ++i) {
            out.alpha[i] += step.coefficients[i];
        }
        out.base = std::move(step.residual);
    }
    for (std::size_t i = 0; i < out.alpha.size(); ++i) {
        if (out.alpha[i] != 0) {
            out.support.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

RationalVector reconstruct(const RationalVector& base, const RationalVector& alpha)
{
    require(!base.empty() && alpha.size() + 1 == base.size(), "reconstruct: size mismatch");
    RationalVector out = base;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        out[i] -= alpha[i];
        out[i + 1] += alpha[i];
    }
    return out;
}

PartitionOptimum brute_force_optimal(const RationalVector& c)
{
    require_nonempty(c, "brute_force_optimal");
    const int n = static_cast<int>(c.size());
    require_bound(n <= kBruteForceOptimalBound,
                  "brute_force_optimal: n must be at most " + std::to_string(kBruteForceOptimalBound));
    PartitionOptimum out;
    bool first = true;
    for (Partition& d : enumerate_threshold_partitions(n)) {
        const Rational value = dot(c, d);
        if (first || value > out.value) {
            out.value = value;
            out.argmax.clear();
            first = false;
        }
        if (value == out.value) {
            out.argmax.push_back(std::move(d));
        }
    }
    return out;
}

std::vector<EdgeSet> enumerate_order_ideals(int n)
{
    require_bound(1 <= n && n <= kOrderIdealEnumerationBound,
                  "enumerate_order_ideals: n must lie in [1, "
                      + std::to_string(kOrderIdealEnumerationBound) + "]");
    const std::vector<Pair> pairs = all_pairs(n);
    const std::size_t m = pairs.size();
    std::vector<std::uint32_t> lower_covers(m, 0);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            const bool covered = (pairs[q].i == pairs[p].i - 1 && pairs[q].j == pairs[p].j)
                || (pairs[q].i == pairs[p].i && pairs[q].j == pairs[p].j - 1);
            if (covered) {
                lower_covers[p] |= std::uint32_t{1} << q;
            }
        }
    }
    std::vector<EdgeSet> out;
    const std::uint32_t total = std::uint32_t{1} << m;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool closed = true;
        for (std::size_t p = 0; p < m && closed; ++p) {
            if ((mask >> p) & 1U) {
                closed = (mask & lower_covers[p]) == lower_covers[p];
            }
        }
        if (!closed) {
            continue;
        }
        EdgeSet edges;
        for (std::size_t p = 0; p < m; ++p) {
            if ((mask >> p) & 1U) {
                edges.insert(pairs[p]);
            }
        }
        out.push_back(std::move(edges));
    }
    return out;
}

IdealOptimum brute_force_max_ideal(const PairCostVector& c)
{
    IdealOptimum out;
    bool first = true;
    for (EdgeSet& ideal : enumerate_order_ideals(c.n())) {
        const Rational value = ideal_weight(c, ideal);
        if (first || value > out.value) {
            out.value = value;
            out.argmax.clear();
            first = false;
        }
        if (value == out.value) {
            out.argmax.push_back(std::move(ideal));
        }
    }
    return out;
}

} // namespace degpoly
