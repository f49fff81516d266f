// Exact arithmetic primitives and integer-sequence utilities shared by every
// other module. All scalars are exact rationals; nothing in a decision path
// ever touches floating point.

#ifndef DEGPOLY_CORE_HPP
#define DEGPOLY_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace degpoly {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;

/// Nonnegative integer sequence (degree sequences, majorization operands).
using IntSequence = std::vector<int>;

/// Weakly decreasing IntSequence. Functions taking a Partition validate it.
using Partition = std::vector<int>;

/// Raised for precondition violations and malformed input.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an input is well formed but exceeds an enumeration bound.
class BoundError : public Error {
public:
    using Error::Error;
};

void require(bool condition, const std::string& message);
void require_bound(bool condition, const std::string& message);

template <typename T>
void require_nonempty(const std::vector<T>& x, std::string_view what)
{
    if (x.empty()) {
        throw Error(std::string(what) + ": empty sequence");
    }
}

/// Returns [x]: the entries of x rearranged in weakly decreasing order.
template <typename T>
std::vector<T> sort_decreasing(std::vector<T> x)
{
    require_nonempty(x, "sort_decreasing");
    std::sort(x.begin(), x.end(), std::greater<T>());
    return x;
}

template <typename T>
bool is_weakly_decreasing(const std::vector<T>& x)
{
    require_nonempty(x, "is_weakly_decreasing");
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (x[i] < x[i + 1]) {
            return false;
        }
    }
    return true;
}

/// True iff the decreasing rearrangement of a dominates that of b in every
/// prefix sum, with equal totals. Throws on length mismatch.
bool majorizes(const IntSequence& a, const IntSequence& b);

bool is_nonnegative(const IntSequence& x);

/// Validates that d is a nonempty, nonnegative, weakly decreasing sequence.
void require_partition(const Partition& d, std::string_view what);

long long sum(const IntSequence& x);
Rational sum(const RationalVector& x);

/// Exact dot product of a rational vector with an integer vector.
Rational dot(const RationalVector& c, const IntSequence& d);

RationalVector to_rational(const IntSequence& x);

/// Parses "p/q", "p", or "-p/q". The denominator must be positive.
Rational parse_rational(std::string_view text);

/// Canonical string: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& q);

/// Comma-separated list of rationals, e.g. "1,-1/2,3".
RationalVector parse_rational_list(std::string_view text);

/// Comma-separated list of nonnegative integers.
IntSequence parse_int_list(std::string_view text);

/// Seeded generator of random rationals with numerators uniform in
/// [-numerator_bound, numerator_bound] and denominators uniform in
/// [1, denominator_bound]. Zero pair sums occur often enough to exercise ties.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int numerator_bound = 100,
                             int denominator_bound = 10);

    Rational next();
    RationalVector vector(std::size_t n);
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::uniform_int_distribution<int> numerator_;
    std::uniform_int_distribution<int> denominator_;
};

} // namespace degpoly

#endif
