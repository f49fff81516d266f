/* C interface to the degpoly library. All functions return a status code;
 * on failure degpoly_last_error() describes the problem. Strings returned
 * by the library are owned by the library. */

#ifndef DEGPOLY_H
#define DEGPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DEGPOLY_API __declspec(dllexport)
#else
#define DEGPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum degpoly_status {
    DEGPOLY_OK = 0,
    DEGPOLY_INVALID_ARGUMENT = 1,
    DEGPOLY_OUT_OF_BOUNDS = 2,
    DEGPOLY_INTERNAL_ERROR = 3
} degpoly_status;

typedef enum degpoly_mode {
    DEGPOLY_MAX = 0,
    DEGPOLY_MIN = 1
} degpoly_mode;

typedef struct degpoly_report degpoly_report;

/* Message of the last failed call on this thread, "" if none. */
DEGPOLY_API const char* degpoly_last_error(void);
DEGPOLY_API const char* degpoly_version(void);

/* costs: comma-separated rationals such as "1,-1/2,3". */
DEGPOLY_API degpoly_status degpoly_optimize(const char* costs, degpoly_mode mode, int oracle,
                                            degpoly_report** out);
/* suite: counts, facets, edges, lattice-points, hypergraph or volume3. */
DEGPOLY_API degpoly_status degpoly_verify(int n, const char* suite, uint64_t seed,
                                          degpoly_report** out);
/* n <= 0 uses the sequence length. */
DEGPOLY_API degpoly_status degpoly_recognize(const char* sequence, int r, int n,
                                             degpoly_report** out);

/* JSON text with sorted keys, valid until the report is freed. */
DEGPOLY_API const char* degpoly_report_json(const degpoly_report* report);
DEGPOLY_API int degpoly_report_passed(const degpoly_report* report);
DEGPOLY_API size_t degpoly_report_check_count(const degpoly_report* report);
DEGPOLY_API void degpoly_report_free(degpoly_report* report);

/* Predicates write 0 or 1 to *out. */
DEGPOLY_API degpoly_status degpoly_is_threshold_partition(const int* d, size_t n, int* out);
DEGPOLY_API degpoly_status degpoly_is_degree_partition(const int* d, size_t n, int* out);
DEGPOLY_API degpoly_status degpoly_is_degree_sequence(const int* d, size_t n, int* out);
DEGPOLY_API degpoly_status degpoly_is_r_graphical_partition(const int* d, size_t length, int n,
                                                            int r, int* out);

/* Writes the optimal threshold partition for the given costs into out[0..n). */
DEGPOLY_API degpoly_status degpoly_optimal_partition(const char* costs, degpoly_mode mode,
                                                     int* out, size_t n);

DEGPOLY_API degpoly_status degpoly_count_edges(int n, int enumerate, uint64_t* out);
DEGPOLY_API degpoly_status degpoly_facet_count(int n, int* out);

#ifdef __cplusplus
}
#endif

#endif
