// Membership in the Fulkerson-Hoffman-McAndrew polytope F(n) and the Koren
// polytope K(n), degree partition recognition, and the face structure of
// DP(n): facets, Omega difference vectors, adjacency and edge counts.

#ifndef DEGPOLY_POLYTOPE_HPP
#define DEGPOLY_POLYTOPE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "degpoly/core.hpp"
#include "degpoly/runs.hpp"
#include "degpoly/threshold.hpp"

namespace degpoly {

/// a . x <= rhs with integer coefficients.
struct FacetInequality {
    enum class Kind { Monotone, Fhm };

    Kind kind = Kind::Monotone;
    int index = 0; ///< i for monotone(i): -x_i + x_{i+1} <= 0
    int k = 0;     ///< leading block size for fhm(k, l)
    int l = 0;     ///< trailing block size for fhm(k, l)
    IntSequence coefficients;
    long long rhs = 0;

    std::string label() const;
    bool holds_at(const RationalVector& x) const;
    bool tight_at(const RationalVector& x) const;
    Rational lhs(const RationalVector& x) const;

    friend bool operator==(const FacetInequality&, const FacetInequality&) = default;
};

FacetInequality monotone_inequality(int n, int i);

/// sum_{i<=k} x_i - sum_{i>n-l} x_i <= k(n-1-l). Requires 1 <= k+l <= n.
FacetInequality fhm_inequality(int n, int k, int l);

/// Every defining inequality of F(n): n-1 monotone rows, then fhm(k, l) for
/// all k, l >= 0 with 1 <= k+l <= n.
std::vector<FacetInequality> f_inequalities(int n);

struct Membership {
    bool member = false;
    std::vector<FacetInequality> violated;
};

Membership in_F(const RationalVector& x);

/// Same answer as in_F using only the facet-defining rows (n >= 4).
bool in_F_facets_only(const RationalVector& x);

enum class KorenMethod { Direct, Sorted };

constexpr int kKorenDirectBound = 12;

/// Direct: all 3^n ordered disjoint (S, T). Sorted: [x] in F(n).
bool in_K(const RationalVector& x, KorenMethod method = KorenMethod::Sorted);

bool is_degree_partition(const IntSequence& d);
bool is_degree_sequence(const IntSequence& d);

/// Facet-defining inequalities of DP(n) for n >= 4, in the order: monotone
/// 1..n-1, fhm(1,0), fhm(0,1), then fhm(k,l) with k,l >= 1 by increasing k+l.
std::vector<FacetInequality> facets(int n);

/// Closed form (n^2 - 3n + 12) / 2.
int facet_count_formula(int n);

struct OmegaVector {
    enum class Shape { Interval, Pair };

    Shape shape = Shape::Interval;
    Interval first;
    Interval second; ///< only meaningful for Shape::Pair
    IntSequence values;
};

OmegaVector omega_interval(int n, Interval interval);
OmegaVector omega_pair(int n, Interval first, Interval second);

/// The Omega vector equal to |d - e| when d, e are comparable and the
/// difference has the required shape; nullopt otherwise. Interval shapes
/// are tried before pairs.
std::optional<OmegaVector> adjacency_witness(const Partition& d, const Partition& e);

bool are_adjacent(const Partition& d, const Partition& e);

bool comparable(const Partition& d, const Partition& e);

enum class CountMethod { Formula, Enumerate };

constexpr int kEdgeEnumerationBound = 12;

std::uint64_t count_edges(int n, CountMethod method = CountMethod::Formula);

/// E_3 = 6, E_n = 2 E_{n-1} + 2^{n-1}.
std::uint64_t edge_count_recurrence(int n);

/// Largest j with d_j = n-1; requires d_1 = n-1.
int dominating_count(const Partition& d);

struct IdentityCheck {
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
};

/// Sum of dominating_count over TP(n) elements with d_1 = n-1, against 2^{n-1}.
IdentityCheck td_sum_identity(int n);

/// x_i = sum of y over pairs containing i. y is in lexicographic pair order.
RationalVector apply_incidence(int n, const std::vector<Rational>& y, bool check_cube = false);

constexpr int kFaceEnumerationMin = 4;
constexpr int kFaceEnumerationMax = 10;

std::set<Partition> face_vertices(int n, const std::vector<FacetInequality>& tight);

constexpr int kGraphEnumerationBound = 7;

/// Sorted degree sequences of all 2^C(n,2) labelled graphs.
std::set<Partition> enumerate_degree_partitions(int n);

/// Weakly decreasing integer points of F(n) with even coordinate sum.
std::set<Partition> lattice_points_of_F(int n);

/// Dimension of the affine hull of the given points.
int affine_dimension(const std::vector<RationalVector>& points);

/// Volume of the simplex spanned by n+1 points in R^n: |det| / n!.
Rational simplex_volume(const std::vector<RationalVector>& vertices);

/// A point satisfying every facet except `dropped`, which it violates.
std::optional<RationalVector> irredundancy_witness(const std::vector<FacetInequality>& facet_list,
                                                   std::size_t dropped);

} // namespace degpoly

#endif
