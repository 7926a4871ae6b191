/* C interface to the chordal graph counting and sampling library. */
#ifndef CHORDAL_CHORDAL_H
#define CHORDAL_CHORDAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(CHORDAL_BUILDING_LIBRARY)
#define CHORDAL_API __attribute__((visibility("default")))
#else
#define CHORDAL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chordal_status {
  CHORDAL_OK = 0,
  CHORDAL_ERR_INVALID_ARGUMENT = 1,
  CHORDAL_ERR_DOMAIN = 2,
  CHORDAL_ERR_NOT_CHORDAL = 3,
  CHORDAL_ERR_EMPTY_CLASS = 4,
  CHORDAL_ERR_NOT_FILLED = 5,
  CHORDAL_ERR_REJECTION_CAP = 6,
  CHORDAL_ERR_PARSE = 7,
  CHORDAL_ERR_OUT_OF_MEMORY = 8,
  CHORDAL_ERR_INTERNAL = 9
} chordal_status;

typedef enum chordal_format { CHORDAL_FORMAT_EDGE_LIST = 0, CHORDAL_FORMAT_JSON = 1 } chordal_format;

typedef struct chordal_context chordal_context;
typedef struct chordal_rng chordal_rng;
typedef struct chordal_graph chordal_graph;
typedef struct chordal_approx_sampler chordal_approx_sampler;

typedef struct chordal_thresholds {
  int n1;
  int n2;
  int n3;
} chordal_thresholds;

CHORDAL_API const char* chordal_version(void);
CHORDAL_API const char* chordal_status_name(chordal_status status);
/* Message of the last failure on the calling thread. */
CHORDAL_API const char* chordal_last_error(void);
/* Frees strings returned through char** out-parameters. */
CHORDAL_API void chordal_string_free(char* s);

/* Counting tables for graphs on at most n_max vertices with clique size at most omega. */
CHORDAL_API chordal_status chordal_context_create(int n_max, int omega, chordal_context** out);
CHORDAL_API void chordal_context_destroy(chordal_context* ctx);
CHORDAL_API int chordal_context_omega(const chordal_context* ctx);
/* Decimal counts; the caller frees *out. */
CHORDAL_API chordal_status chordal_count_connected(chordal_context* ctx, int n, char** out);
CHORDAL_API chordal_status chordal_count_all(chordal_context* ctx, int n, char** out);
/* Completes the tables. Required before sampling; afterwards the context is read-only. */
CHORDAL_API chordal_status chordal_context_fill(chordal_context* ctx);

CHORDAL_API chordal_status chordal_rng_create(uint64_t seed, chordal_rng** out);
/* Independent stream number `stream` derived from `seed`. */
CHORDAL_API chordal_status chordal_rng_create_stream(uint64_t seed, uint64_t stream, chordal_rng** out);
CHORDAL_API void chordal_rng_destroy(chordal_rng* rng);

/* Uniform sample; connected != 0 restricts to connected graphs. */
CHORDAL_API chordal_status chordal_sample(const chordal_context* ctx, int n, int connected, chordal_rng* rng,
                                          chordal_graph** out);

CHORDAL_API chordal_thresholds chordal_default_thresholds(void);
/* epsilon is a decimal string such as "1e-6"; thresholds may be NULL for defaults. */
CHORDAL_API chordal_status chordal_approx_count(int n, const char* epsilon, const chordal_thresholds* th, char** out);
CHORDAL_API chordal_status chordal_threshold_f(const char* epsilon, const chordal_thresholds* th, int* out);
CHORDAL_API chordal_status chordal_threshold_g(const char* epsilon, const chordal_thresholds* th, int* out);
CHORDAL_API chordal_status chordal_approx_sampler_create(int n, const char* epsilon, const chordal_thresholds* th,
                                                         chordal_approx_sampler** out);
CHORDAL_API void chordal_approx_sampler_destroy(chordal_approx_sampler* s);
/* iterations may be NULL; it receives the rejection-loop count (0 on the exact path). */
CHORDAL_API chordal_status chordal_approx_sample(const chordal_approx_sampler* s, chordal_rng* rng,
                                                 chordal_graph** out, int* iterations);

CHORDAL_API void chordal_graph_destroy(chordal_graph* g);
CHORDAL_API size_t chordal_graph_vertex_count(const chordal_graph* g);
CHORDAL_API size_t chordal_graph_edge_count(const chordal_graph* g);
/* Copies up to cap labels (ascending). Returns the full count. */
CHORDAL_API size_t chordal_graph_vertices(const chordal_graph* g, uint32_t* buf, size_t cap);
/* Copies up to cap edges as (u, v) pairs into buf[2*i], buf[2*i+1]. Returns the full count. */
CHORDAL_API size_t chordal_graph_edges(const chordal_graph* g, uint32_t* buf, size_t cap);
CHORDAL_API chordal_status chordal_graph_format(const chordal_graph* g, chordal_format fmt, char** out);
CHORDAL_API chordal_status chordal_graph_parse(const char* text, chordal_format fmt, chordal_graph** out);
CHORDAL_API chordal_status chordal_graph_is_chordal(const chordal_graph* g, int* out);
CHORDAL_API chordal_status chordal_graph_is_split(const chordal_graph* g, int* out);
CHORDAL_API chordal_status chordal_graph_max_clique(const chordal_graph* g, int* out);

#ifdef __cplusplus
}
#endif

#endif
