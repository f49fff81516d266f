#include "degpoly/runs.hpp"

#include <stdexcept>
#include <string>

namespace degpoly {

std::vector<int> descent_set(const RationalVector& c)
{
    require_nonempty(c, "descent_set");
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i] > c[i + 1]) {
            out.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

RunDecomposition ascending_runs(const RationalVector& c)
{
    RunDecomposition out;
    out.descents = descent_set(c);
    int start = 1;
    for (int d : out.descents) {
        out.runs.push_back({start, d});
        start = d + 1;
    }
    out.runs.push_back({start, static_cast<int>(c.size())});
    return out;
}

RationalVector average_runs(const RationalVector& c)
{
    const RunDecomposition decomposition = ascending_runs(c);
    RationalVector out(c.size());
    for (const Interval& run : decomposition.runs) {
        Rational total = 0;
        for (int i = run.first; i <= run.last; ++i) {
            total += c[i - 1];
        }
        const Rational mean = total / run.size();
        for (int i = run.first; i <= run.last; ++i) {
            out[i - 1] = mean;
        }
    }
    return out;
}

PoolResult pool(const RationalVector& c)
{
    PoolResult result{c, 0};
    const int limit = static_cast<int>(c.size()) - 1;
    while (!is_weakly_decreasing(result.values)) {
        result.values = average_runs(result.values);
        ++result.applications;
        if (result.applications > limit) {
            throw std::logic_error("pool: averaging did not converge within n-1 steps");
        }
    }
    return result;
}

RationalVector pava_oracle(const RationalVector& c)
{
    require_nonempty(c, "pava_oracle");
    // Each block is (sum, count); block means must stay weakly decreasing.
    struct Block {
        Rational sum;
        long count;
    };
    std::vector<Block> stack;
    for (const Rational& value : c) {
        stack.push_back({value, 1});
        while (stack.size() >= 2) {
            const Block& top = stack[stack.size() - 1];
            const Block& below = stack[stack.size() - 2];
            // below.mean < top.mean, cross-multiplied (counts are positive)
            if (below.sum * top.count >= top.sum * below.count) {
                break;
            }
            Block merged{below.sum + top.sum, below.count + top.count};
            stack.pop_back();
            stack.back() = merged;
        }
    }
    RationalVector out;
    out.reserve(c.size());
    for (const Block& block : stack) {
        const Rational mean = block.sum / block.count;
        out.insert(out.end(), static_cast<std::size_t>(block.count), mean);
    }
    return out;
}

Rational squared_distance(const RationalVector& a, const RationalVector& b)
{
    require(a.size() == b.size(), "squared_distance: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

} // namespace degpoly
