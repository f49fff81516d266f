#include "degpoly/degpoly.h"

#include <exception>
#include <stdexcept>
#include <string>

#include "degpoly/report.hpp"

struct degpoly_report {
    degpoly::Report report;
    std::string json;
};

namespace {

thread_local std::string last_error;

template <typename F>
degpoly_status guarded(F&& body)
{
    last_error.clear();
    try {
        body();
        return DEGPOLY_OK;
    } catch (const degpoly::BoundError& e) {
        last_error = e.what();
        return DEGPOLY_OUT_OF_BOUNDS;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return DEGPOLY_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return DEGPOLY_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return DEGPOLY_INTERNAL_ERROR;
    }
}

void require_pointer(const void* p, const char* name)
{
    if (p == nullptr) {
        throw degpoly::Error(std::string(name) + " must not be null");
    }
}

degpoly::Extremal to_extremal(degpoly_mode mode)
{
    switch (mode) {
    case DEGPOLY_MAX: return degpoly::Extremal::Maximal;
    case DEGPOLY_MIN: return degpoly::Extremal::Minimal;
    }
    throw degpoly::Error("unknown mode");
}

std::vector<int> to_vector(const int* d, size_t n)
{
    if (n > 0) {
        require_pointer(d, "d");
    }
    return std::vector<int>(d, d + n);
}

degpoly_report* wrap(degpoly::Report report)
{
    auto* out = new degpoly_report{std::move(report), {}};
    out->json = out->report.to_json().dump(2);
    return out;
}

} // namespace

extern "C" {

const char* degpoly_last_error(void) { return last_error.c_str(); }

const char* degpoly_version(void) { return "1.0.0"; }

degpoly_status degpoly_optimize(const char* costs, degpoly_mode mode, int oracle,
                                degpoly_report** out)
{
    return guarded([&] {
        require_pointer(costs, "costs");
        require_pointer(out, "out");
        *out = wrap(degpoly::cmd_optimize(degpoly::parse_rational_list(costs), to_extremal(mode),
                                          oracle != 0));
    });
}

degpoly_status degpoly_verify(int n, const char* suite, uint64_t seed, degpoly_report** out)
{
    return guarded([&] {
        require_pointer(suite, "suite");
        require_pointer(out, "out");
        *out = wrap(degpoly::cmd_verify(n, degpoly::parse_suite(suite), seed));
    });
}

degpoly_status degpoly_recognize(const char* sequence, int r, int n, degpoly_report** out)
{
    return guarded([&] {
        require_pointer(sequence, "sequence");
        require_pointer(out, "out");
        std::optional<int> vertices;
        if (n > 0) {
            vertices = n;
        }
        *out = wrap(degpoly::cmd_recognize(degpoly::parse_int_list(sequence), r, vertices));
    });
}

const char* degpoly_report_json(const degpoly_report* report)
{
    return report == nullptr ? "" : report->json.c_str();
}

int degpoly_report_passed(const degpoly_report* report)
{
    return report != nullptr && report->report.passed() ? 1 : 0;
}

size_t degpoly_report_check_count(const degpoly_report* report)
{
    return report == nullptr ? 0 : report->report.checks.size();
}

void degpoly_report_free(degpoly_report* report) { delete report; }

degpoly_status degpoly_is_threshold_partition(const int* d, size_t n, int* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = degpoly::is_threshold_partition(to_vector(d, n)) ? 1 : 0;
    });
}

degpoly_status degpoly_is_degree_partition(const int* d, size_t n, int* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = degpoly::is_degree_partition(to_vector(d, n)) ? 1 : 0;
    });
}

degpoly_status degpoly_is_degree_sequence(const int* d, size_t n, int* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = degpoly::is_degree_sequence(to_vector(d, n)) ? 1 : 0;
    });
}

degpoly_status degpoly_is_r_graphical_partition(const int* d, size_t length, int n, int r, int* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = degpoly::is_r_graphical_partition(to_vector(d, length), n, r) ? 1 : 0;
    });
}

degpoly_status degpoly_optimal_partition(const char* costs, degpoly_mode mode, int* out, size_t n)
{
    return guarded([&] {
        require_pointer(costs, "costs");
        require_pointer(out, "out");
        const degpoly::RationalVector c = degpoly::parse_rational_list(costs);
        if (c.size() != n) {
            throw degpoly::Error("output buffer length " + std::to_string(n)
                                 + " does not match cost count " + std::to_string(c.size()));
        }
        const degpoly::Partition d = degpoly::alg2_optimal_partition(c, to_extremal(mode));
        std::copy(d.begin(), d.end(), out);
    });
}

degpoly_status degpoly_count_edges(int n, int enumerate, uint64_t* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = degpoly::count_edges(n, enumerate != 0 ? degpoly::CountMethod::Enumerate
                                                      : degpoly::CountMethod::Formula);
    });
}

degpoly_status degpoly_facet_count(int n, int* out)
{
    return guarded([&] {
        require_pointer(out, "out");
        *out = static_cast<int>(degpoly::facets(n).size());
    });
}

} // extern "C"
