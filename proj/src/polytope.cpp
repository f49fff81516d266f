#include "degpoly/polytope.hpp"

#include <string>

namespace degpoly {

std::string FacetInequality::label() const
{
    if (kind == Kind::Monotone) {
        return "monotone(" + std::to_string(index) + ")";
    }
    return "fhm(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

Rational FacetInequality::lhs(const RationalVector& x) const
{
    require(x.size() == coefficients.size(), "inequality: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (coefficients[i] != 0) {
            s += coefficients[i] * x[i];
        }
    }
    return s;
}

bool FacetInequality::holds_at(const RationalVector& x) const
{
    return lhs(x) <= rhs;
}

bool FacetInequality::tight_at(const RationalVector& x) const
{
    return lhs(x) == rhs;
}

FacetInequality monotone_inequality(int n, int i)
{
    require(1 <= i && i < n, "monotone_inequality: index out of range");
    FacetInequality f;
    f.kind = FacetInequality::Kind::Monotone;
    f.index = i;
    f.coefficients.assign(static_cast<std::size_t>(n), 0);
    f.coefficients[static_cast<std::size_t>(i - 1)] = -1;
    f.coefficients[static_cast<std::size_t>(i)] = 1;
    f.rhs = 0;
    return f;
}

FacetInequality fhm_inequality(int n, int k, int l)
{
    require(k >= 0 && l >= 0 && 1 <= k + l && k + l <= n, "fhm_inequality: need 1 <= k+l <= n");
    FacetInequality f;
    f.kind = FacetInequality::Kind::Fhm;
    f.k = k;
    f.l = l;
    f.coefficients.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= k; ++i) {
        f.coefficients[static_cast<std::size_t>(i - 1)] = 1;
    }
    for (int i = n - l + 1; i <= n; ++i) {
        f.coefficients[static_cast<std::size_t>(i - 1)] = -1;
    }
    f.rhs = static_cast<long long>(k) * (n - 1 - l);
    return f;
}

std::vector<FacetInequality> f_inequalities(int n)
{
    require(n >= 1, "f_inequalities: n must be positive");
    std::vector<FacetInequality> out;
    for (int i = 1; i < n; ++i) {
        out.push_back(monotone_inequality(n, i));
    }
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; k + l <= n; ++l) {
            if (k + l >= 1) {
                out.push_back(fhm_inequality(n, k, l));
            }
        }
    }
    return out;
}

Membership in_F(const RationalVector& x)
{
    require_nonempty(x, "in_F");
    Membership out;
    for (FacetInequality& f : f_inequalities(static_cast<int>(x.size()))) {
        if (!f.holds_at(x)) {
            out.violated.push_back(std::move(f));
        }
    }
    out.member = out.violated.empty();
    return out;
}

bool in_F_facets_only(const RationalVector& x)
{
    for (const FacetInequality& f : facets(static_cast<int>(x.size()))) {
        if (!f.holds_at(x)) {
            return false;
        }
    }
    return true;
}

namespace {

bool in_K_direct(const RationalVector& x)
{
    const int n = static_cast<int>(x.size());
    require_bound(n <= kKorenDirectBound,
                  "in_K direct: n must be at most " + std::to_string(kKorenDirectBound));
    // Each element is outside (0), in S (1) or in T (2): a base-3 counter.
    std::vector<int> role(static_cast<std::size_t>(n), 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < role.size() && role[pos] == 2) {
            role[pos++] = 0;
        }
        if (pos == role.size()) {
            return true;
        }
        ++role[pos];

        Rational lhs = 0;
        long long s_size = 0;
        long long t_size = 0;
        for (std::size_t i = 0; i < role.size(); ++i) {
            if (role[i] == 1) {
                lhs += x[i];
                ++s_size;
            } else if (role[i] == 2) {
                lhs -= x[i];
                ++t_size;
            }
        }
        if (lhs > s_size * (n - 1 - t_size)) {
            return false;
        }
    }
}

} // namespace

bool in_K(const RationalVector& x, KorenMethod method)
{
    require_nonempty(x, "in_K");
    if (method == KorenMethod::Direct) {
        return in_K_direct(x);
    }
    return in_F(sort_decreasing(x)).member;
}

bool is_degree_partition(const IntSequence& d)
{
    require_nonempty(d, "is_degree_partition");
    return is_nonnegative(d) && is_weakly_decreasing(d) && sum(d) % 2 == 0
        && in_F(to_rational(d)).member;
}

bool is_degree_sequence(const IntSequence& d)
{
    require_nonempty(d, "is_degree_sequence");
    return is_nonnegative(d) && sum(d) % 2 == 0 && in_K(to_rational(d), KorenMethod::Sorted);
}

std::vector<FacetInequality> facets(int n)
{
    require(n >= 4, "facets: the facet description needs n >= 4");
    std::vector<FacetInequality> out;
    for (int i = 1; i < n; ++i) {
        out.push_back(monotone_inequality(n, i));
    }
    out.push_back(fhm_inequality(n, 1, 0));
    out.push_back(fhm_inequality(n, 0, 1));
    for (int p = 2; p <= n; ++p) {
        if (p > n - 3 && p != n) {
            continue;
        }
        for (int k = 1; k < p; ++k) {
            out.push_back(fhm_inequality(n, k, p - k));
        }
    }
    return out;
}

int facet_count_formula(int n)
{
    return (n * n - 3 * n + 12) / 2;
}

OmegaVector omega_interval(int n, Interval interval)
{
    require(1 <= interval.first && interval.last <= n && interval.size() >= 2,
            "omega_interval: need a nontrivial interval inside [n]");
    OmegaVector out;
    out.shape = OmegaVector::Shape::Interval;
    out.first = interval;
    out.values.assign(static_cast<std::size_t>(n), 0);
    for (int i = interval.first; i <= interval.last; ++i) {
        out.values[static_cast<std::size_t>(i - 1)] = interval.size() - 1;
    }
    return out;
}

OmegaVector omega_pair(int n, Interval first, Interval second)
{
    require(1 <= first.first && first.first <= first.last && first.last < second.first
                && second.first <= second.last && second.last <= n,
            "omega_pair: need disjoint intervals I < J inside [n]");
    OmegaVector out;
    out.shape = OmegaVector::Shape::Pair;
    out.first = first;
    out.second = second;
    out.values.assign(static_cast<std::size_t>(n), 0);
    for (int i = first.first; i <= first.last; ++i) {
        out.values[static_cast<std::size_t>(i - 1)] = second.size();
    }
    for (int i = second.first; i <= second.last; ++i) {
        out.values[static_cast<std::size_t>(i - 1)] = first.size();
    }
    return out;
}

bool comparable(const Partition& d, const Partition& e)
{
    require(d.size() == e.size(), "comparable: length mismatch");
    bool le = true;
    bool ge = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        le = le && d[i] <= e[i];
        ge = ge && d[i] >= e[i];
    }
    return le || ge;
}

namespace {

bool constant_on(const IntSequence& v, Interval block, int value)
{
    for (int i = block.first; i <= block.last; ++i) {
        if (v[static_cast<std::size_t>(i - 1)] != value) {
            return false;
        }
    }
    return true;
}

std::optional<OmegaVector> match_pair(int n, const IntSequence& diff, Interval first, Interval second)
{
    if (constant_on(diff, first, second.size()) && constant_on(diff, second, first.size())) {
        return omega_pair(n, first, second);
    }
    return std::nullopt;
}

} // namespace

std::optional<OmegaVector> adjacency_witness(const Partition& d, const Partition& e)
{
    require(d.size() == e.size(), "are_adjacent: length mismatch");
    require(is_threshold_partition(d) && is_threshold_partition(e),
            "are_adjacent: inputs must be threshold partitions");
    const int n = static_cast<int>(d.size());
    require(n >= 3, "are_adjacent: needs n >= 3");
    require(d != e, "are_adjacent: vertices must be distinct");
    if (!comparable(d, e)) {
        return std::nullopt;
    }
    IntSequence diff(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        diff[i] = std::abs(d[i] - e[i]);
    }
    // Maximal blocks of nonzero entries; an Omega vector's support is I or I u J.
    std::vector<Interval> blocks;
    for (int i = 1; i <= n; ++i) {
        if (diff[static_cast<std::size_t>(i - 1)] == 0) {
            continue;
        }
        if (!blocks.empty() && blocks.back().last == i - 1) {
            blocks.back().last = i;
        } else {
            blocks.push_back({i, i});
        }
    }
    if (blocks.size() == 2) {
        return match_pair(n, diff, blocks[0], blocks[1]);
    }
    if (blocks.size() != 1) {
        return std::nullopt;
    }
    const Interval block = blocks[0];
    const int length = block.size();
    if (length >= 2 && constant_on(diff, block, length - 1)) {
        return omega_interval(n, block);
    }
    int change = 0;
    int changes = 0;
    for (int i = block.first; i < block.last; ++i) {
        if (diff[static_cast<std::size_t>(i - 1)] != diff[static_cast<std::size_t>(i)]) {
            change = i;
            ++changes;
        }
    }
    if (changes == 0) {
        // Constant v on the block: only I, J of equal size v can fit.
        const int v = diff[static_cast<std::size_t>(block.first - 1)];
        if (length != 2 * v) {
            return std::nullopt;
        }
        change = block.first + v - 1;
    } else if (changes > 1) {
        return std::nullopt;
    }
    return match_pair(n, diff, {block.first, change}, {change + 1, block.last});
}

bool are_adjacent(const Partition& d, const Partition& e)
{
    return adjacency_witness(d, e).has_value();
}

std::uint64_t count_edges(int n, CountMethod method)
{
    require_bound(n >= 3, "count_edges: needs n >= 3");
    if (method == CountMethod::Formula) {
        require_bound(n <= 60, "count_edges: formula limited to n <= 60");
        return (std::uint64_t{1} << (n - 2)) * static_cast<std::uint64_t>(2 * n - 3);
    }
    require_bound(n <= kEdgeEnumerationBound,
                  "count_edges: enumeration limited to n <= " + std::to_string(kEdgeEnumerationBound));
    const std::vector<Partition> vertices = enumerate_threshold_partitions(n);
    std::uint64_t count = 0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (are_adjacent(vertices[a], vertices[b])) {
                ++count;
            }
        }
    }
    return count;
}

std::uint64_t edge_count_recurrence(int n)
{
    require_bound(3 <= n && n <= 60, "edge_count_recurrence: n must lie in [3, 60]");
    std::uint64_t e = 6;
    for (int m = 4; m <= n; ++m) {
        e = 2 * e + (std::uint64_t{1} << (m - 1));
    }
    return e;
}

int dominating_count(const Partition& d)
{
    require(is_threshold_partition(d), "dominating_count: not a threshold partition");
    const int n = static_cast<int>(d.size());
    require(d.front() == n - 1, "dominating_count: requires d_1 = n-1");
    int m = 0;
    while (m < n && d[static_cast<std::size_t>(m)] == n - 1) {
        ++m;
    }
    return m;
}

IdentityCheck td_sum_identity(int n)
{
    require_bound(1 <= n && n <= 16, "td_sum_identity: n must lie in [1, 16]");
    IdentityCheck out;
    for (const Partition& d : enumerate_threshold_partitions(n)) {
        if (d.front() == n - 1) {
            out.lhs += static_cast<std::uint64_t>(dominating_count(d));
        }
    }
    out.rhs = std::uint64_t{1} << (n - 1);
    return out;
}

RationalVector apply_incidence(int n, const std::vector<Rational>& y, bool check_cube)
{
    require(n >= 1 && static_cast<int>(y.size()) == pair_count(n),
            "apply_incidence: expected one value per element of S(n)");
    RationalVector x(static_cast<std::size_t>(n), Rational(0));
    std::size_t idx = 0;
    for (const Pair& p : all_pairs(n)) {
        const Rational& v = y[idx++];
        if (check_cube) {
            require(0 <= v && v <= 1, "apply_incidence: coordinate outside [0,1]");
        }
        x[static_cast<std::size_t>(p.i - 1)] += v;
        x[static_cast<std::size_t>(p.j - 1)] += v;
    }
    return x;
}

std::set<Partition> face_vertices(int n, const std::vector<FacetInequality>& tight)
{
    require_bound(kFaceEnumerationMin <= n && n <= kFaceEnumerationMax,
                  "face_vertices: n must lie in [4, 10]");
    std::set<Partition> out;
    for (Partition& d : enumerate_threshold_partitions(n)) {
        const RationalVector x = to_rational(d);
        bool on_face = true;
        for (const FacetInequality& f : tight) {
            if (!f.tight_at(x)) {
                on_face = false;
                break;
            }
        }
        if (on_face) {
            out.insert(std::move(d));
        }
    }
    return out;
}

std::set<Partition> enumerate_degree_partitions(int n)
{
    require_bound(1 <= n && n <= kGraphEnumerationBound,
                  "enumerate_degree_partitions: n must lie in [1, "
                      + std::to_string(kGraphEnumerationBound) + "]");
    const std::vector<Pair> pairs = all_pairs(n);
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    std::set<Partition> out;
    Partition d(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::fill(d.begin(), d.end(), 0);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if ((mask >> p) & 1U) {
                ++d[static_cast<std::size_t>(pairs[p].i - 1)];
                ++d[static_cast<std::size_t>(pairs[p].j - 1)];
            }
        }
        out.insert(sort_decreasing(d));
    }
    return out;
}

namespace {

void decreasing_points(int n, int max_value, Partition& prefix, std::set<Partition>& out)
{
    if (static_cast<int>(prefix.size()) == n) {
        if (sum(prefix) % 2 == 0 && in_F(to_rational(prefix)).member) {
            out.insert(prefix);
        }
        return;
    }
    for (int v = 0; v <= max_value; ++v) {
        prefix.push_back(v);
        decreasing_points(n, v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::set<Partition> lattice_points_of_F(int n)
{
    require_bound(1 <= n && n <= 12, "lattice_points_of_F: n must lie in [1, 12]");
    // fhm(1,0) and fhm(0,1) bound every coordinate to [0, n-1].
    std::set<Partition> out;
    Partition prefix;
    decreasing_points(n, n - 1, prefix, out);
    return out;
}

namespace {

/// Row-reduces in place and returns the rank.
int rank_of(std::vector<RationalVector> rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const RationalVector& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) {
                continue;
            }
            const Rational factor = rows[r][col] / p[col];
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] -= factor * p[c];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

int affine_dimension(const std::vector<RationalVector>& points)
{
    if (points.empty()) {
        return -1;
    }
    std::vector<RationalVector> differences;
    for (std::size_t i = 1; i < points.size(); ++i) {
        require(points[i].size() == points[0].size(), "affine_dimension: dimension mismatch");
        RationalVector diff(points[i].size());
        for (std::size_t c = 0; c < diff.size(); ++c) {
            diff[c] = points[i][c] - points[0][c];
        }
        differences.push_back(std::move(diff));
    }
    return rank_of(std::move(differences));
}

Rational simplex_volume(const std::vector<RationalVector>& vertices)
{
    require(!vertices.empty(), "simplex_volume: no vertices");
    const std::size_t n = vertices.front().size();
    require(vertices.size() == n + 1, "simplex_volume: need n+1 vertices in R^n");
    std::vector<RationalVector> m;
    for (std::size_t i = 1; i <= n; ++i) {
        require(vertices[i].size() == n, "simplex_volume: dimension mismatch");
        RationalVector row(n);
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = vertices[i][c] - vertices[0][c];
        }
        m.push_back(std::move(row));
    }
    // Gaussian elimination tracking the determinant.
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    Rational factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        factorial *= static_cast<long>(i);
    }
    return abs(det) / factorial;
}

std::optional<RationalVector> irredundancy_witness(const std::vector<FacetInequality>& facet_list,
                                                   std::size_t dropped)
{
    require(dropped < facet_list.size(), "irredundancy_witness: index out of range");
    const FacetInequality& target = facet_list[dropped];
    const int n = static_cast<int>(target.coefficients.size());

    // Centroid of the vertices on the dropped facet, pushed out along its normal.
    const std::set<Partition> on_facet = face_vertices(n, {target});
    if (on_facet.empty()) {
        return std::nullopt;
    }
    RationalVector centroid(static_cast<std::size_t>(n), Rational(0));
    for (const Partition& v : on_facet) {
        for (int i = 0; i < n; ++i) {
            centroid[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
        }
    }
    for (Rational& c : centroid) {
        c /= static_cast<long>(on_facet.size());
    }

    const RationalVector normal = to_rational(target.coefficients);
    Rational step = 1;
    for (std::size_t g = 0; g < facet_list.size(); ++g) {
        if (g == dropped) {
            continue;
        }
        const Rational rate = facet_list[g].lhs(normal);
        if (rate <= 0) {
            continue;
        }
        const Rational slack = facet_list[g].rhs - facet_list[g].lhs(centroid);
        if (slack <= 0) {
            return std::nullopt;
        }
        step = std::min(step, Rational(slack / (2 * rate)));
    }
    RationalVector point = centroid;
    for (int i = 0; i < n; ++i) {
        point[static_cast<std::size_t>(i)] += step * normal[static_cast<std::size_t>(i)];
    }

    if (target.holds_at(point)) {
        return std::nullopt;
    }
    for (std::size_t g = 0; g < facet_list.size(); ++g) {
        if (g != dropped && !facet_list[g].holds_at(point)) {
            return std::nullopt;
        }
    }
    return point;
}

} // namespace degpoly
