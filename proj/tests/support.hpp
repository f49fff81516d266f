// Seeded generators and independent oracles shared by the test programs.
// Nothing here calls into the library code it is used to check.

#ifndef DEGPOLY_TEST_SUPPORT_HPP
#define DEGPOLY_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "degpoly/core.hpp"
#include "degpoly/threshold.hpp"

namespace testing {

using degpoly::EdgeSet;
using degpoly::IntSequence;
using degpoly::Pair;
using degpoly::Partition;
using degpoly::Rational;
using degpoly::RationalVector;

inline int uniform(std::mt19937_64& engine, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(engine);
}

inline Rational random_rational(std::mt19937_64& engine, int num = 100, int den = 10)
{
    return Rational(uniform(engine, -num, num), uniform(engine, 1, den));
}

inline RationalVector random_vector(std::mt19937_64& engine, std::size_t n, int num = 100,
                                    int den = 10)
{
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(random_rational(engine, num, den));
    }
    return v;
}

/// Weakly decreasing: a random start followed by nonnegative random drops.
inline RationalVector random_decreasing(std::mt19937_64& engine, std::size_t n)
{
    RationalVector v{random_rational(engine)};
    while (v.size() < n) {
        Rational drop = random_rational(engine, 40, 6);
        if (drop < 0) {
            drop = -drop;
        }
        if (uniform(engine, 0, 3) == 0) {
            drop = 0;
        }
        v.push_back(v.back() - drop);
    }
    return v;
}

inline IntSequence random_int_sequence(std::mt19937_64& engine, std::size_t n, int max_value)
{
    IntSequence v;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(uniform(engine, 0, max_value));
    }
    return v;
}

inline IntSequence sorted_desc(IntSequence v)
{
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

/// Prefix-sum majorization written out directly, without library helpers.
inline bool majorizes_oracle(const IntSequence& a, const IntSequence& b)
{
    const IntSequence x = sorted_desc(a);
    const IntSequence y = sorted_desc(b);
    long long sx = 0;
    long long sy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        if (sx < sy) {
            return false;
        }
    }
    return sx == sy;
}

/// All edge sets on [n], as bitmasks over the lexicographic pair listing.
inline std::vector<Pair> pair_listing(int n)
{
    std::vector<Pair> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            pairs.push_back({i, j});
        }
    }
    return pairs;
}

inline EdgeSet edges_from_mask(const std::vector<Pair>& pairs, std::uint64_t mask)
{
    EdgeSet edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        if ((mask >> b) & 1U) {
            edges.insert(pairs[b]);
        }
    }
    return edges;
}

inline IntSequence degrees_oracle(int n, const EdgeSet& edges)
{
    IntSequence d(static_cast<std::size_t>(n), 0);
    for (const Pair& p : edges) {
        ++d[static_cast<std::size_t>(p.i - 1)];
        ++d[static_cast<std::size_t>(p.j - 1)];
    }
    return d;
}

/// Threshold by definition: every induced subgraph has a dominating or an
/// isolated vertex. Peeling either kind of vertex and recursing is enough
/// because the class is hereditary.
inline bool threshold_by_induced_subgraphs(const std::vector<int>& vertices, const EdgeSet& edges)
{
    if (vertices.size() <= 1) {
        return true;
    }
    auto adjacent = [&](int u, int v) {
        return edges.count({std::min(u, v), std::max(u, v)}) != 0;
    };
    for (int v : vertices) {
        int degree = 0;
        for (int u : vertices) {
            if (u != v && adjacent(u, v)) {
                ++degree;
            }
        }
        if (degree == 0 || degree == static_cast<int>(vertices.size()) - 1) {
            std::vector<int> rest;
            for (int u : vertices) {
                if (u != v) {
                    rest.push_back(u);
                }
            }
            return threshold_by_induced_subgraphs(rest, edges);
        }
    }
    return false;
}

/// Proper threshold graph: threshold and degrees weakly decreasing in label order.
inline bool proper_threshold_oracle(int n, const EdgeSet& edges)
{
    std::vector<int> vertices;
    for (int v = 1; v <= n; ++v) {
        vertices.push_back(v);
    }
    const IntSequence d = degrees_oracle(n, edges);
    return threshold_by_induced_subgraphs(vertices, edges) && std::is_sorted(d.rbegin(), d.rend());
}

/// Erdos-Gallai criterion for graphical sequences.
inline bool erdos_gallai(IntSequence d)
{
    d = sorted_desc(d);
    const long long n = static_cast<long long>(d.size());
    long long total = 0;
    for (int x : d) {
        if (x < 0) {
            return false;
        }
        total += x;
    }
    if (total % 2 != 0) {
        return false;
    }
    long long left = 0;
    for (long long k = 1; k <= n; ++k) {
        left += d[static_cast<std::size_t>(k - 1)];
        long long right = k * (k - 1);
        for (long long i = k; i < n; ++i) {
            right += std::min<long long>(d[static_cast<std::size_t>(i)], k);
        }
        if (left > right) {
            return false;
        }
    }
    return true;
}

/// All weakly decreasing sequences of the given length with entries <= max_value
/// and total <= max_sum.
inline std::vector<Partition> decreasing_sequences(int length, int max_value, int max_sum)
{
    std::vector<Partition> out;
    Partition prefix;
    std::function<void(int, int)> rec = [&](int cap, int budget) {
        if (static_cast<int>(prefix.size()) == length) {
            out.push_back(prefix);
            return;
        }
        for (int v = 0; v <= std::min(cap, budget); ++v) {
            prefix.push_back(v);
            rec(v, budget - v);
            prefix.pop_back();
        }
    };
    rec(max_value, max_sum);
    return out;
}

/// Threshold partitions by the literal two-branch recursion.
inline std::set<Partition> threshold_partitions_oracle(int n)
{
    if (n == 1) {
        return {{0}};
    }
    std::set<Partition> out;
    for (Partition d : threshold_partitions_oracle(n - 1)) {
        Partition isolated = d;
        isolated.push_back(0);
        out.insert(isolated);
        Partition dominating{n - 1};
        for (int x : d) {
            dominating.push_back(x + 1);
        }
        out.insert(dominating);
    }
    return out;
}

} // namespace testing

#endif
