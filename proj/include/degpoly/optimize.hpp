// Linear optimization over order ideals of S(n) and over threshold
// partitions, with duality certificates and brute-force oracles.

#ifndef DEGPOLY_OPTIMIZE_HPP
#define DEGPOLY_OPTIMIZE_HPP

#include <vector>

#include "degpoly/core.hpp"
#include "degpoly/threshold.hpp"

namespace degpoly {

/// One rational per element of S(n), stored in lexicographic pair order.
class PairVector {
public:
    explicit PairVector(int n);
    PairVector(int n, std::vector<Rational> values);

    int n() const { return n_; }
    const Rational& at(int i, int j) const;
    Rational& at(int i, int j);
    const std::vector<Rational>& values() const { return values_; }

private:
    int n_;
    std::vector<Rational> values_;
};

using PairCostVector = PairVector;

/// Tie rule when the dominating branch and the isolated branch weigh the same.
enum class Extremal { Maximal, Minimal };

Rational ideal_weight(const PairCostVector& c, const EdgeSet& edges);

/// Dynamic program over intervals {i..j}: either i dominates the interval
/// or j is isolated in it. With Extremal::Maximal ties go to the dominating
/// branch and the result is the containment-maximal maximum-weight ideal.
OrderIdeal alg1_max_ideal(const PairCostVector& c, Extremal tie = Extremal::Maximal);

/// c_{i,j} = c_i + c_j.
PairCostVector lift_costs(const RationalVector& c);

/// Maximal (or minimal) optimum of sum c_i d_i over TP(n): pool the costs,
/// then keep every pair whose pooled weights sum to >= 0 (> 0 for minimal).
Partition alg2_optimal_partition(const RationalVector& c, Extremal mode = Extremal::Maximal);

/// Coefficient of v_i (the vector with -1 at i and +1 at i+1), i = 1..n-1.
struct CertificateStep {
    RationalVector residual;
    RationalVector coefficients;
};

/// c = average_runs(c) + sum_i coefficients[i-1] * v_i, every coefficient >= 0.
CertificateStep certificate_step(const RationalVector& c);

struct Certificate {
    RationalVector base;
    RationalVector alpha;
    std::vector<int> support;
};

/// Accumulates certificate_step until the residual is weakly decreasing.
Certificate certificate_full(const RationalVector& c);

/// base + sum_i alpha_i v_i.
RationalVector reconstruct(const RationalVector& base, const RationalVector& alpha);

struct PartitionOptimum {
    Rational value;
    std::vector<Partition> argmax;
};

constexpr int kBruteForceOptimalBound = 16;

PartitionOptimum brute_force_optimal(const RationalVector& c);

struct IdealOptimum {
    Rational value;
    std::vector<EdgeSet> argmax;
};

constexpr int kOrderIdealEnumerationBound = 7;

/// All order ideals of S(n), found by filtering every subset of S(n).
std::vector<EdgeSet> enumerate_order_ideals(int n);

IdealOptimum brute_force_max_ideal(const PairCostVector& c);

} // namespace degpoly

#endif
