#include <doctest.h>

#include <map>
#include <random>

#include "degpoly/optimize.hpp"
#include "degpoly/polytope.hpp"
#include "support.hpp"

using namespace degpoly;

namespace {

RationalVector ints(std::initializer_list<int> xs)
{
    return RationalVector(xs.begin(), xs.end());
}

std::string labels(const std::vector<FacetInequality>& list)
{
    std::string out;
    for (const FacetInequality& f : list) {
        out += f.label() + " ";
    }
    return out;
}

/// Every Omega_I and Omega_{I,J} on [n], written out from the definitions.
std::vector<IntSequence> all_omega_vectors(int n)
{
    std::vector<IntSequence> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = a; b <= n; ++b) {
            const int size_i = b - a + 1;
            if (size_i >= 2) {
                IntSequence v(static_cast<std::size_t>(n), 0);
                for (int i = a; i <= b; ++i) {
                    v[static_cast<std::size_t>(i - 1)] = size_i - 1;
                }
                out.push_back(v);
            }
            for (int c = b + 1; c <= n; ++c) {
                for (int e = c; e <= n; ++e) {
                    IntSequence v(static_cast<std::size_t>(n), 0);
                    for (int i = a; i <= b; ++i) {
                        v[static_cast<std::size_t>(i - 1)] = e - c + 1;
                    }
                    for (int i = c; i <= e; ++i) {
                        v[static_cast<std::size_t>(i - 1)] = size_i;
                    }
                    out.push_back(v);
                }
            }
        }
    }
    return out;
}

bool adjacent_by_pattern_search(const Partition& d, const Partition& e,
                                const std::vector<IntSequence>& omegas)
{
    bool le = true;
    bool ge = true;
    IntSequence diff(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        le = le && d[i] <= e[i];
        ge = ge && d[i] >= e[i];
        diff[i] = std::abs(d[i] - e[i]);
    }
    return (le || ge) && std::find(omegas.begin(), omegas.end(), diff) != omegas.end();
}

/// Weights whose threshold graph {b_i + b_j > 0} has degree partition d and
/// no pair sum equal to zero: peel d, giving peeled vertices weights of
/// geometrically shrinking magnitude.
RationalVector separating_weights(const Partition& d)
{
    const int n = static_cast<int>(d.size());
    RationalVector b(static_cast<std::size_t>(n), Rational(0));
    int lo = 0;
    int hi = n - 1;
    int offset = 0;
    Rational magnitude = 1;
    for (int step = 0; step < n; ++step) {
        magnitude *= 4;
    }
    while (lo < hi) {
        const int size = hi - lo + 1;
        if (d[static_cast<std::size_t>(lo)] - offset == size - 1) {
            b[static_cast<std::size_t>(lo)] = magnitude;
            ++lo;
            ++offset;
        } else {
            REQUIRE(d[static_cast<std::size_t>(hi)] - offset == 0);
            b[static_cast<std::size_t>(hi)] = -magnitude;
            --hi;
        }
        magnitude /= 4;
    }
    return b;
}

} // namespace

TEST_CASE("inequality builders")
{
    const FacetInequality m = monotone_inequality(4, 2);
    CHECK(m.coefficients == IntSequence{0, -1, 1, 0});
    CHECK(m.rhs == 0);
    CHECK(m.label() == "monotone(2)");
    const FacetInequality f = fhm_inequality(5, 2, 1);
    CHECK(f.coefficients == IntSequence{1, 1, 0, 0, -1});
    CHECK(f.rhs == 2 * (5 - 1 - 1));
    CHECK(f.label() == "fhm(2,1)");
    CHECK(f.tight_at(ints({3, 3, 0, 0, 0})));
    CHECK(f.lhs(ints({4, 3, 0, 0, 0})) == 7);
    CHECK_FALSE(f.tight_at(ints({4, 3, 0, 0, 0})));
    CHECK_FALSE(f.holds_at(ints({4, 3, 0, 0, 0})));
    CHECK_THROWS_AS(monotone_inequality(4, 4), Error);
    CHECK_THROWS_AS(fhm_inequality(4, 0, 0), Error);
    CHECK_THROWS_AS(fhm_inequality(4, 3, 2), Error);
    CHECK_THROWS_AS(f.lhs(ints({1, 2})), Error);
    // n-1 monotone rows plus one row per (k, l) with 1 <= k+l <= n
    for (int n = 1; n <= 8; ++n) {
        CHECK(static_cast<int>(f_inequalities(n).size()) == (n - 1) + (n + 1) * (n + 2) / 2 - 1);
    }
}

TEST_CASE("in_F examples")
{
    CHECK(in_F(ints({3, 2, 2, 1})).member);
    const Membership m = in_F(ints({2, 1, 0}));
    CHECK_FALSE(m.member);
    CHECK(std::any_of(m.violated.begin(), m.violated.end(), [](const FacetInequality& f) {
        return f.kind == FacetInequality::Kind::Fhm && f.k == 1 && f.l == 1;
    }));
    CHECK(in_F(ints({0, 0, 0, 0, 0})).member);
    CHECK_FALSE(in_F(ints({1, 2})).member);
    CHECK_THROWS_AS(in_F({}), Error);
    CHECK(in_F({Rational(1, 2), Rational(1, 2)}).member);
}

TEST_CASE("in_K examples")
{
    for (KorenMethod method : {KorenMethod::Direct, KorenMethod::Sorted}) {
        CHECK_FALSE(in_K(ints({0, 2, 1}), method));
        CHECK(in_K(ints({1, 2, 1}), method));
        CHECK(in_K(ints({0, 0, 0}), method));
    }
    CHECK_THROWS_AS(in_K(RationalVector(13, 0), KorenMethod::Direct), BoundError);
    CHECK(in_K(RationalVector(13, 0), KorenMethod::Sorted));
}

TEST_CASE("direct and sorted Koren membership agree")
{
    std::mt19937_64 engine(51);
    int members = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = testing::uniform(engine, 1, 8);
        RationalVector x;
        for (int i = 0; i < n; ++i) {
            // coordinates in [-1/4, n-1+1/4] with small denominators
            x.push_back(Rational(testing::uniform(engine, -1, 4 * (n - 1) + 1), 4));
        }
        if (trial % 2 == 1) {
            // near a degree sequence, so that both answers occur
            const std::vector<Pair> pairs = testing::pair_listing(n);
            const std::uint64_t mask = pairs.empty() ? 0 : engine() & ((std::uint64_t{1} << pairs.size()) - 1);
            const IntSequence d = testing::degrees_oracle(n, testing::edges_from_mask(pairs, mask));
            for (int i = 0; i < n; ++i) {
                x[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)]
                    + Rational(testing::uniform(engine, -1, 1), testing::uniform(engine, 2, 6));
            }
        }
        const bool direct = in_K(x, KorenMethod::Direct);
        CHECK(direct == in_K(x, KorenMethod::Sorted));
        members += direct ? 1 : 0;
    }
    CHECK(members > 50);
    CHECK(members < 450);
}

TEST_CASE("facet-only membership agrees with the full system")
{
    std::mt19937_64 engine(52);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = testing::uniform(engine, 4, 9);
        RationalVector x;
        for (int i = 0; i < n; ++i) {
            x.push_back(Rational(testing::uniform(engine, -1, 3 * (n - 1) + 1), 3));
        }
        if (trial % 2 == 0) {
            x = sort_decreasing(x);
        }
        CHECK(in_F_facets_only(x) == in_F(x).member);
    }
    CHECK_THROWS_AS(in_F_facets_only(ints({1, 1, 1})), Error);
}

TEST_CASE("is_degree_partition and is_degree_sequence examples")
{
    CHECK(is_degree_partition({2, 1, 1}));
    CHECK_FALSE(is_degree_partition({2, 2, 1}));
    CHECK_FALSE(is_degree_partition({3, 1, 0}));
    CHECK_FALSE(is_degree_partition({1, 2, 1}));
    CHECK(is_degree_sequence({1, 2, 1}));
    CHECK_FALSE(is_degree_sequence({1, 1, 1}));
    CHECK_FALSE(is_degree_sequence({0, 3, 1}));
    CHECK_FALSE(is_degree_sequence({-1, 1}));
    CHECK_THROWS_AS(is_degree_partition({}), Error);
}

TEST_CASE("degree recognition agrees with Erdos-Gallai")
{
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& d : testing::decreasing_sequences(n, n, n * n)) {
            CHECK(is_degree_partition(d) == testing::erdos_gallai(d));
        }
    }
    std::mt19937_64 engine(53);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = testing::uniform(engine, 1, 10);
        const IntSequence d = testing::random_int_sequence(engine, static_cast<std::size_t>(n), n);
        CHECK(is_degree_sequence(d) == testing::erdos_gallai(d));
    }
}

TEST_CASE("enumerate_degree_partitions")
{
    CHECK(enumerate_degree_partitions(3)
          == std::set<Partition>{{0, 0, 0}, {1, 1, 0}, {2, 1, 1}, {2, 2, 2}});
    CHECK(enumerate_degree_partitions(2) == std::set<Partition>{{0, 0}, {1, 1}});
    const std::set<Partition> dp4 = enumerate_degree_partitions(4);
    CHECK(dp4.count({2, 2, 1, 1}) == 1);
    CHECK_FALSE(is_threshold_partition({2, 2, 1, 1}));
    CHECK_THROWS_AS(enumerate_degree_partitions(8), BoundError);
    for (int n = 1; n <= 6; ++n) {
        std::set<Partition> graphical;
        for (const Partition& d : testing::decreasing_sequences(n, n - 1, n * (n - 1))) {
            if (testing::erdos_gallai(d)) {
                graphical.insert(d);
            }
        }
        CHECK(enumerate_degree_partitions(n) == graphical);
    }
}

TEST_CASE("even integral points of F(n) are the degree partitions")
{
    for (int n = 1; n <= 6; ++n) {
        CHECK(lattice_points_of_F(n) == enumerate_degree_partitions(n));
    }
    CHECK_THROWS_AS(lattice_points_of_F(13), BoundError);
}

TEST_CASE("threshold optimum dominates every degree partition")
{
    std::mt19937_64 engine(54);
    std::map<int, std::set<Partition>> dp;
    for (int n = 3; n <= 6; ++n) {
        dp[n] = enumerate_degree_partitions(n);
    }
    for (int trial = 0; trial < 500; ++trial) {
        const int n = testing::uniform(engine, 3, 6);
        const RationalVector c = testing::random_vector(engine, static_cast<std::size_t>(n));
        const Rational best = brute_force_optimal(c).value;
        for (const Partition& x : dp[n]) {
            CHECK(best >= dot(c, x));
        }
    }
}

TEST_CASE("every threshold partition is the unique optimum of some cost")
{
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& d : enumerate_threshold_partitions(n)) {
            const RationalVector b = separating_weights(d);
            CHECK(is_weakly_decreasing(b));
            const PartitionOptimum brute = brute_force_optimal(b);
            CHECK(brute.argmax == std::vector<Partition>{d});
            CHECK(alg2_optimal_partition(b, Extremal::Maximal) == d);
            CHECK(alg2_optimal_partition(b, Extremal::Minimal) == d);
        }
    }
}

TEST_CASE("facets examples")
{
    CHECK(labels(facets(4))
          == "monotone(1) monotone(2) monotone(3) fhm(1,0) fhm(0,1) fhm(1,3) fhm(2,2) fhm(3,1) ");
    CHECK(labels(facets(5))
          == "monotone(1) monotone(2) monotone(3) monotone(4) fhm(1,0) fhm(0,1) fhm(1,1) "
             "fhm(1,4) fhm(2,3) fhm(3,2) fhm(4,1) ");
    CHECK(facets(6).size() == 15);
    CHECK_THROWS_AS(facets(3), Error);
    for (int n = 4; n <= 20; ++n) {
        CHECK(static_cast<int>(facets(n).size()) == facet_count_formula(n));
        CHECK(facet_count_formula(n) == n * (n - 3) / 2 + 6);
    }
}

TEST_CASE("facets are valid and tight on an affine hyperplane of vertices")
{
    for (int n = 4; n <= 7; ++n) {
        std::vector<RationalVector> vertices;
        for (const Partition& d : enumerate_threshold_partitions(n)) {
            vertices.push_back(to_rational(d));
        }
        CHECK(affine_dimension(vertices) == n);
        for (const FacetInequality& f : facets(n)) {
            std::vector<RationalVector> tight;
            for (const RationalVector& v : vertices) {
                CHECK(f.holds_at(v));
                if (f.tight_at(v)) {
                    tight.push_back(v);
                }
            }
            INFO(f.label());
            CHECK(tight.size() >= static_cast<std::size_t>(n));
            CHECK(affine_dimension(tight) == n - 1);
        }
    }
}

TEST_CASE("facets are irredundant")
{
    for (int n = 4; n <= 6; ++n) {
        const std::vector<FacetInequality> list = facets(n);
        for (std::size_t f = 0; f < list.size(); ++f) {
            INFO(list[f].label());
            const auto witness = irredundancy_witness(list, f);
            REQUIRE(witness.has_value());
            CHECK_FALSE(list[f].holds_at(*witness));
            for (std::size_t g = 0; g < list.size(); ++g) {
                if (g != f) {
                    CHECK(list[g].holds_at(*witness));
                }
            }
        }
    }
    CHECK_THROWS_AS(irredundancy_witness(facets(4), 8), Error);
}

TEST_CASE("non-facet inequalities of F(n) are implied by the facets on the vertex set")
{
    // Redundant rows define faces of lower dimension.
    for (int n = 4; n <= 7; ++n) {
        const std::vector<FacetInequality> list = facets(n);
        for (const FacetInequality& f : f_inequalities(n)) {
            if (std::find(list.begin(), list.end(), f) != list.end()) {
                continue;
            }
            std::vector<RationalVector> tight;
            for (const Partition& d : face_vertices(n, {f})) {
                tight.push_back(to_rational(d));
            }
            INFO(f.label());
            CHECK(affine_dimension(tight) < n - 1);
        }
    }
}

TEST_CASE("omega vectors")
{
    CHECK(omega_interval(4, {1, 3}).values == IntSequence{2, 2, 2, 0});
    CHECK(omega_pair(4, {2, 3}, {4, 4}).values == IntSequence{0, 1, 1, 2});
    CHECK(omega_interval(3, {1, 3}).values == IntSequence{2, 2, 2});
    CHECK_THROWS_AS(omega_interval(4, {2, 2}), Error);
    CHECK_THROWS_AS(omega_interval(4, {3, 5}), Error);
    CHECK_THROWS_AS(omega_pair(4, {1, 2}, {2, 3}), Error);
    CHECK_THROWS_AS(omega_pair(4, {3, 4}, {1, 1}), Error);
}

TEST_CASE("are_adjacent examples")
{
    const auto a = adjacency_witness({2, 2, 2}, {2, 1, 1});
    REQUIRE(a.has_value());
    // (0,1,1) is both Omega_{2..3} and Omega_{{2},{3}}; intervals are reported first
    CHECK(a->shape == OmegaVector::Shape::Interval);
    CHECK(a->first == Interval{2, 3});
    CHECK(a->values == IntSequence{0, 1, 1});
    CHECK(omega_pair(3, {2, 2}, {3, 3}).values == a->values);

    const auto b = adjacency_witness({3, 3, 3, 3}, {3, 2, 2, 1});
    REQUIRE(b.has_value());
    CHECK(b->first == Interval{2, 3});
    CHECK(b->second == Interval{4, 4});
    CHECK(b->values == IntSequence{0, 1, 1, 2});

    CHECK_FALSE(are_adjacent({3, 2, 2, 1}, {1, 1, 0, 0}));
    CHECK_THROWS_AS(are_adjacent({2, 2, 1, 1}, {0, 0, 0, 0}), Error);
    CHECK_THROWS_AS(are_adjacent({1, 1}, {0, 0}), Error);
    CHECK_THROWS_AS(are_adjacent({2, 1, 1}, {2, 1, 1}), Error);
    CHECK_THROWS_AS(are_adjacent({2, 1, 1}, {1, 1, 0, 0}), Error);

    // any two of the four vertices at n = 3 are adjacent
    const std::vector<Partition> tp3 = enumerate_threshold_partitions(3);
    for (std::size_t i = 0; i < tp3.size(); ++i) {
        for (std::size_t j = i + 1; j < tp3.size(); ++j) {
            CHECK(are_adjacent(tp3[i], tp3[j]));
        }
    }
}

TEST_CASE("adjacency matches an exhaustive search over Omega vectors")
{
    for (int n = 3; n <= 8; ++n) {
        const std::vector<IntSequence> omegas = all_omega_vectors(n);
        const std::vector<Partition> tp = enumerate_threshold_partitions(n);
        for (std::size_t i = 0; i < tp.size(); ++i) {
            for (std::size_t j = i + 1; j < tp.size(); ++j) {
                const auto witness = adjacency_witness(tp[i], tp[j]);
                CHECK(witness.has_value() == adjacent_by_pattern_search(tp[i], tp[j], omegas));
                if (witness) {
                    IntSequence diff(tp[i].size());
                    for (std::size_t k = 0; k < diff.size(); ++k) {
                        diff[k] = std::abs(tp[i][k] - tp[j][k]);
                    }
                    CHECK(witness->values == diff);
                }
            }
        }
    }
}

TEST_CASE("adjacency matches the tight-facet face oracle")
{
    for (int n = 4; n <= 5; ++n) {
        const std::vector<FacetInequality> list = facets(n);
        const std::vector<Partition> tp = enumerate_threshold_partitions(n);
        for (std::size_t i = 0; i < tp.size(); ++i) {
            for (std::size_t j = i + 1; j < tp.size(); ++j) {
                std::vector<FacetInequality> tight;
                for (const FacetInequality& f : list) {
                    if (f.tight_at(to_rational(tp[i])) && f.tight_at(to_rational(tp[j]))) {
                        tight.push_back(f);
                    }
                }
                const bool edge = face_vertices(n, tight) == std::set<Partition>{tp[i], tp[j]};
                CHECK(are_adjacent(tp[i], tp[j]) == edge);
            }
        }
    }
}

TEST_CASE("adjacent vertices are comparable")
{
    for (int n = 3; n <= 6; ++n) {
        const std::vector<Partition> tp = enumerate_threshold_partitions(n);
        for (std::size_t i = 0; i < tp.size(); ++i) {
            for (std::size_t j = i + 1; j < tp.size(); ++j) {
                if (are_adjacent(tp[i], tp[j])) {
                    CHECK(comparable(tp[i], tp[j]));
                }
            }
        }
    }
    CHECK(comparable({2, 1, 1}, {1, 1, 0}));
    CHECK_FALSE(comparable({2, 2, 2, 0}, {3, 1, 1, 1}));
    CHECK_THROWS_AS(comparable({1}, {1, 1}), Error);
}

TEST_CASE("edge counts")
{
    CHECK(count_edges(3) == 6);
    CHECK(count_edges(4) == 20);
    CHECK(count_edges(5) == 56);
    CHECK(count_edges(3, CountMethod::Enumerate) == 6);
    for (int n = 3; n <= 10; ++n) {
        const std::uint64_t formula = count_edges(n, CountMethod::Formula);
        CHECK(count_edges(n, CountMethod::Enumerate) == formula);
        CHECK(edge_count_recurrence(n) == formula);
        CHECK(formula == (std::uint64_t{1} << (n - 2)) * static_cast<std::uint64_t>(2 * n - 3));
    }
    CHECK_THROWS_AS(count_edges(2), BoundError);
    CHECK_THROWS_AS(count_edges(13, CountMethod::Enumerate), BoundError);
    CHECK_THROWS_AS(edge_count_recurrence(2), BoundError);
}

TEST_CASE("dominating_count and the TD identity")
{
    CHECK(dominating_count({2, 2, 2}) == 3);
    CHECK(dominating_count({2, 1, 1}) == 1);
    CHECK(dominating_count({3, 3, 2, 2}) == 2);
    CHECK_THROWS_AS(dominating_count({1, 1, 0}), Error);
    CHECK_THROWS_AS(dominating_count({2, 2, 1, 1}), Error);

    CHECK(td_sum_identity(3).lhs == 4);
    CHECK(td_sum_identity(3).rhs == 4);
    CHECK(td_sum_identity(2).lhs == 2);
    CHECK(td_sum_identity(5).lhs == 16);
    for (int n = 2; n <= 16; ++n) {
        const IdentityCheck check = td_sum_identity(n);
        CHECK(check.lhs == check.rhs);
        CHECK(check.rhs == (std::uint64_t{1} << (n - 1)));
    }
    CHECK_THROWS_AS(td_sum_identity(17), BoundError);
}

TEST_CASE("apply_incidence")
{
    CHECK(apply_incidence(3, {1, 1, 0}) == ints({2, 1, 1}));
    CHECK(apply_incidence(3, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}, true) == ints({1, 1, 1}));
    CHECK(apply_incidence(3, {0, 0, 0}) == ints({0, 0, 0}));
    CHECK_THROWS_AS(apply_incidence(3, {2, 0, 0}, true), Error);
    CHECK_NOTHROW(apply_incidence(3, {2, 0, 0}, false));
    CHECK_THROWS_AS(apply_incidence(3, {0, 0}), Error);

    // images of cube vertices are degree sequences and lie in K(n)
    std::mt19937_64 engine(55);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = testing::uniform(engine, 2, 7);
        const std::vector<Pair> pairs = testing::pair_listing(n);
        std::vector<Rational> y;
        EdgeSet edges;
        for (const Pair& p : pairs) {
            const int bit = testing::uniform(engine, 0, 1);
            y.push_back(bit);
            if (bit == 1) {
                edges.insert(p);
            }
        }
        const RationalVector x = apply_incidence(n, y, true);
        CHECK(x == to_rational(testing::degrees_oracle(n, edges)));
        CHECK(in_K(x));
        for (Rational& v : y) {
            v = Rational(testing::uniform(engine, 0, 6), 6);
        }
        CHECK(in_K(apply_incidence(n, y, true)));
    }
}

TEST_CASE("face_vertices")
{
    const std::set<Partition> isolated = face_vertices(4, {fhm_inequality(4, 0, 1)});
    CHECK(isolated.size() == 4);
    for (const Partition& d : isolated) {
        CHECK(d[3] == 0);
    }
    CHECK(face_vertices(4, {}).size() == 8);
    std::vector<FacetInequality> monotone;
    for (int i = 1; i <= 3; ++i) {
        monotone.push_back(monotone_inequality(4, i));
    }
    CHECK(face_vertices(4, monotone) == std::set<Partition>{{0, 0, 0, 0}, {3, 3, 3, 3}});
    CHECK_THROWS_AS(face_vertices(3, {}), BoundError);
    CHECK_THROWS_AS(face_vertices(11, {}), BoundError);
}

TEST_CASE("affine dimension and simplex volume")
{
    std::vector<RationalVector> dp3;
    for (const Partition& d : enumerate_threshold_partitions(3)) {
        dp3.push_back(to_rational(d));
    }
    CHECK(affine_dimension(dp3) == 3);
    CHECK(simplex_volume(dp3) == Rational(1, 3));
    CHECK(simplex_volume({ints({0, 0}), ints({1, 0}), ints({0, 1})}) == Rational(1, 2));
    CHECK(simplex_volume({ints({0, 0}), ints({1, 1}), ints({2, 2})}) == 0);
    CHECK(affine_dimension({ints({1, 1})}) == 0);
    CHECK(affine_dimension({}) == -1);
    CHECK_THROWS_AS(simplex_volume({ints({0, 0}), ints({1, 0})}), Error);
    for (int n = 3; n <= 8; ++n) {
        std::vector<RationalVector> vertices;
        for (const Partition& d : enumerate_threshold_partitions(n)) {
            vertices.push_back(to_rational(d));
        }
        CHECK(affine_dimension(vertices) == n);
    }
}
