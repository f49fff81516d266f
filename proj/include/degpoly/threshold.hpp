// The pair poset S(n), its order ideals, and threshold partitions.
//
// An edge set on [n] is an order ideal of S(n) under componentwise order
// exactly when the graph is threshold with degrees already in weakly
// decreasing label order. Order ideals and threshold partitions correspond
// one-to-one through the degree map, and the lattice operations on
// partitions are componentwise max and min.

#ifndef DEGPOLY_THRESHOLD_HPP
#define DEGPOLY_THRESHOLD_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "degpoly/core.hpp"

namespace degpoly {

/// Element (i, j) of S(n), 1-based with i < j.
struct Pair {
    int i = 1;
    int j = 2;

    friend auto operator<=>(const Pair&, const Pair&) = default;
    friend bool operator==(const Pair&, const Pair&) = default;

    /// Componentwise order of S(n).
    bool below_or_equal(const Pair& other) const { return i <= other.i && j <= other.j; }
};

using EdgeSet = std::set<Pair>;

/// Number of elements of S(n), i.e. n choose 2.
int pair_count(int n);

/// Position of (i, j) in the lexicographic listing (1,2), (1,3), ..., (n-1,n).
int pair_index(int n, const Pair& p);

/// All of S(n) in lexicographic order.
std::vector<Pair> all_pairs(int n);

/// Throws unless 1 <= i < j <= n.
void require_valid_pair(int n, const Pair& p);

/// Downward-closed edge set of S(n): the edge set of a proper threshold graph.
class OrderIdeal {
public:
    /// Validates downward closure; throws Error otherwise.
    OrderIdeal(int n, EdgeSet edges);

    int n() const { return n_; }
    const EdgeSet& edges() const { return edges_; }
    bool contains(const Pair& p) const { return edges_.count(p) != 0; }

    friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

private:
    int n_;
    EdgeSet edges_;
};

/// Checks closure with the two co-cover moves (i-1, j) and (i, j-1).
bool is_order_ideal(int n, const EdgeSet& edges);

/// Degree sequence of ([n], edges) for an arbitrary edge set.
IntSequence degree_sequence(int n, const EdgeSet& edges);

Partition degree_partition_of_ideal(const OrderIdeal& ideal);

/// Peels a dominating vertex (d_1 = n-1) or an isolated vertex (d_n = 0)
/// until nothing is left.
bool is_threshold_partition(const Partition& d);

OrderIdeal ideal_from_partition(const Partition& d);

constexpr int kThresholdEnumerationBound = 20;

/// TP(n) in recursion order: isolated branch (append 0) before dominating
/// branch (prepend n-1 to TP(n-1)+1).
std::vector<Partition> enumerate_threshold_partitions(int n, int bound = kThresholdEnumerationBound);

Partition tp_join(const Partition& d, const Partition& e);
Partition tp_meet(const Partition& d, const Partition& e);

/// {(i, j) : b_i + b_j >= 0}, or > 0 when strict. b must be weakly decreasing.
OrderIdeal graph_from_weights(const RationalVector& b, bool strict);

bool is_proper_threshold_graph(int n, const EdgeSet& edges);

/// Edge-list text: one "i j" line per edge, 1-based, i < j; blank lines skipped.
EdgeSet parse_edge_list(std::string_view text, int n);
std::string format_edge_list(const EdgeSet& edges);

} // namespace degpoly

#endif
