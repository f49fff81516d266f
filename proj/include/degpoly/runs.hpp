// Descent sets, ascending runs and the run-averaging operator.
//
// average_runs replaces every entry by the mean of its ascending run. Its
// iterates reach a weakly decreasing fixed point in at most n-1 steps; that
// fixed point is the Euclidean projection onto the weakly decreasing cone,
// which pava_oracle computes independently by pooling adjacent violators.

#ifndef DEGPOLY_RUNS_HPP
#define DEGPOLY_RUNS_HPP

#include <vector>

#include "degpoly/core.hpp"

namespace degpoly {

/// Closed 1-based index interval [first, last].
struct Interval {
    int first = 1;
    int last = 1;

    int size() const { return last - first + 1; }
    bool contains(int i) const { return first <= i && i <= last; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct RunDecomposition {
    std::vector<Interval> runs;
    std::vector<int> descents;
};

/// 1-based indices i with c_i > c_{i+1}. Ties are not descents.
std::vector<int> descent_set(const RationalVector& c);

RunDecomposition ascending_runs(const RationalVector& c);

/// One application of the averaging operator.
RationalVector average_runs(const RationalVector& c);

struct PoolResult {
    RationalVector values;
    int applications = 0;
};

/// Iterates average_runs until the vector is weakly decreasing. Throws
/// std::logic_error if more than n-1 applications are needed.
PoolResult pool(const RationalVector& c);

/// Antitonic least-squares regression by left-to-right block merging.
RationalVector pava_oracle(const RationalVector& c);

/// Exact squared Euclidean distance.
Rational squared_distance(const RationalVector& a, const RationalVector& b);

} // namespace degpoly

#endif
