// r-uniform hypergraphs, order ideals of S(n,r), and recognition of
// r-graphical partitions by majorization against r-ideal partitions.

#ifndef DEGPOLY_HYPERGRAPH_HPP
#define DEGPOLY_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "degpoly/core.hpp"
#include "degpoly/threshold.hpp"

namespace degpoly {

/// Strictly increasing list of r vertices, 1-based.
using Hyperedge = std::vector<int>;

class RGraph {
public:
    /// Throws unless every edge has exactly r distinct vertices in [n], listed increasingly.
    RGraph(int n, int r, std::set<Hyperedge> edges = {});

    static RGraph from_graph(int n, const EdgeSet& edges);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::set<Hyperedge>& edges() const { return edges_; }
    bool contains(const Hyperedge& e) const { return edges_.count(e) != 0; }

    friend bool operator==(const RGraph&, const RGraph&) = default;

private:
    int n_;
    int r_;
    std::set<Hyperedge> edges_;
};

/// All r-subsets of [n] in lexicographic order (a linear extension of S(n,r)).
std::vector<Hyperedge> all_r_subsets(int n, int r);

/// The elements covered by e in S(n,r): lower one coordinate by 1 while
/// keeping the tuple strictly increasing and positive.
std::vector<Hyperedge> lower_covers(const Hyperedge& e);

bool is_r_ideal(const RGraph& h);

IntSequence degree_sequence_r(const RGraph& h);

/// Move one unit from position source to position target (1-based).
struct UnitTransformation {
    int source = 1;
    int target = 1;

    friend bool operator==(const UnitTransformation&, const UnitTransformation&) = default;
};

/// Requires a(source) >= a(target) + 2.
IntSequence apply_unit_transformation(const IntSequence& a, const UnitTransformation& t);

/// Unit transformations turning a into a permutation of b. Each step moves
/// a unit from the first sorted position where a's prefix sum exceeds b's to
/// the first later position with a deficit. Requires majorizes(a, b).
std::vector<UnitTransformation> muirhead_chain(const IntSequence& a, const IntSequence& b);

/// Swaps one edge X u {source} for X u {target} so the degree sequence
/// follows the unit transformation. Requires deg(source) > deg(target).
RGraph transfer_edge(const RGraph& h, const UnitTransformation& t);

/// relabeling[v-1] is the new label of vertex v.
RGraph relabel(const RGraph& h, const std::vector<int>& relabeling);

struct Saturation {
    RGraph saturated;
    std::vector<int> relabeling;
    RGraph relabeled;
    int moves = 0;
};

/// Applies reverse unit transformations (first applicable (i, j, X) in
/// lexicographic order) until none is left, then relabels by weakly
/// decreasing degree with ties broken by vertex index.
Saturation reverse_saturate(const RGraph& h);

constexpr int kRIdealEnumerationBound = 20;

/// Order ideals of S(n,r); requires C(n,r) <= 20.
std::vector<RGraph> enumerate_r_ideals(int n, int r);

std::set<Partition> enumerate_r_ideal_partitions(int n, int r, long long degree_sum);

bool is_r_graphical_partition(const Partition& d, int n, int r);

/// An r-graph with degree sequence exactly d, or nullopt when d is not
/// r-graphical.
std::optional<RGraph> realize_r_graph(const Partition& d, int n, int r);

constexpr std::uint64_t kBruteForceBudget = 20'000'000;

bool brute_force_r_graphical(const Partition& d, int n, int r,
                             std::uint64_t budget = kBruteForceBudget);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// One edge per line: r increasing 1-based vertex indices separated by spaces.
RGraph parse_hyperedge_list(std::string_view text, int n, int r);
std::string format_hyperedge_list(const RGraph& h);

} // namespace degpoly

#endif
