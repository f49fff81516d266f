#include "degpoly/core.hpp"

#include <charconv>

namespace degpoly {

void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw Error(message);
    }
}

void require_bound(bool condition, const std::string& message)
{
    if (!condition) {
        throw BoundError(message);
    }
}

bool majorizes(const IntSequence& a, const IntSequence& b)
{
    require(a.size() == b.size(), "majorizes: length mismatch");
    require_nonempty(a, "majorizes");
    const IntSequence sa = sort_decreasing(a);
    const IntSequence sb = sort_decreasing(b);
    long long pa = 0;
    long long pb = 0;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        pa += sa[k];
        pb += sb[k];
        if (pa < pb) {
            return false;
        }
    }
    return pa == pb;
}

bool is_nonnegative(const IntSequence& x)
{
    return std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; });
}

void require_partition(const Partition& d, std::string_view what)
{
    require_nonempty(d, what);
    require(is_nonnegative(d), std::string(what) + ": negative entry");
    require(is_weakly_decreasing(d), std::string(what) + ": not weakly decreasing");
}

long long sum(const IntSequence& x)
{
    long long s = 0;
    for (int v : x) {
        s += v;
    }
    return s;
}

Rational sum(const RationalVector& x)
{
    Rational s = 0;
    for (const auto& v : x) {
        s += v;
    }
    return s;
}

Rational dot(const RationalVector& c, const IntSequence& d)
{
    require(c.size() == d.size(), "dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += c[i] * d[i];
    }
    return s;
}

RationalVector to_rational(const IntSequence& x)
{
    return RationalVector(x.begin(), x.end());
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    return !s.empty()
        && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

BigInt parse_integer(std::string_view s, std::string_view context)
{
    if (!is_integer_literal(s)) {
        throw Error("cannot parse '" + std::string(context) + "' as a rational");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return BigInt(std::string(s));
}

template <typename Fn>
void split_commas(std::string_view text, Fn&& fn)
{
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        fn(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s, text));
    }
    const BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    const std::string_view den_text = trim(s.substr(slash + 1));
    require(!den_text.empty() && den_text.front() != '-' && den_text.front() != '+',
            "cannot parse '" + std::string(text) + "' as a rational");
    const BigInt den = parse_integer(den_text, text);
    require(den > 0, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q)
{
    return q.str();
}

RationalVector parse_rational_list(std::string_view text)
{
    RationalVector out;
    split_commas(text, [&](std::string_view item) { out.push_back(parse_rational(item)); });
    return out;
}

IntSequence parse_int_list(std::string_view text)
{
    IntSequence out;
    split_commas(text, [&](std::string_view item) {
        int value = 0;
        const auto* end = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(item.data(), end, value);
        if (item.empty() || ec != std::errc() || ptr != end || value < 0) {
            throw Error("cannot parse '" + std::string(item) + "' as a nonnegative integer");
        }
        out.push_back(value);
    });
    return out;
}

RationalSampler::RationalSampler(std::uint64_t seed, int numerator_bound, int denominator_bound)
    : engine_(seed)
    , numerator_(-numerator_bound, numerator_bound)
    , denominator_(1, denominator_bound)
{
}

Rational RationalSampler::next()
{
    const int num = numerator_(engine_);
    const int den = denominator_(engine_);
    return Rational(num, den);
}

RationalVector RationalSampler::vector(std::size_t n)
{
    RationalVector out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(next());
    }
    return out;
}

} // namespace degpoly
