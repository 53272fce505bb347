/* C interface to the fvskit shared library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an fvs_status; the
 * message of the most recent failure on the calling thread is available from
 * fvs_last_error(). Vertex ids at this interface are 0-based.
 */
#ifndef FVSKIT_FVSKIT_H
#define FVSKIT_FVSKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FVS_API __declspec(dllexport)
#else
#define FVS_API __attribute__((visibility("default")))
#endif

typedef enum fvs_status {
  FVS_OK = 0,
  FVS_ERR_INVALID_ARGUMENT = 1,
  FVS_ERR_PARSE = 2,
  FVS_ERR_BUDGET_EXCEEDED = 3,
  FVS_ERR_LIMIT_EXCEEDED = 4,
  FVS_ERR_NOT_FVS = 5,
  FVS_ERR_INTERNAL = 6
} fvs_status;

typedef enum fvs_variant { FVS_VARIANT_SIMPLE = 0, FVS_VARIANT_THREE_WAY = 1 } fvs_variant;

typedef struct fvs_graph fvs_graph;
typedef struct fvs_result fvs_result;

typedef struct fvs_solver_config {
  double epsilon;
  fvs_variant variant;
  uint64_t seed;
  double budget_constant;
  uint64_t trials; /* 0: derive from the budget formula */
  uint32_t separator_attempts;
  int faithful_coin;
  int ic_threshold;
  int max_k;
  uint32_t jobs;
} fvs_solver_config;

/* Defaults for the given variant (epsilon follows the variant). */
FVS_API void fvs_solver_config_init(fvs_solver_config* config, fvs_variant variant);

FVS_API fvs_status fvs_graph_create(size_t vertex_count, fvs_graph** out);
FVS_API void fvs_graph_free(fvs_graph* graph);
FVS_API fvs_status fvs_graph_add_edge(fvs_graph* graph, uint32_t u, uint32_t v);
FVS_API size_t fvs_graph_vertex_count(const fvs_graph* graph);
FVS_API size_t fvs_graph_edge_count(const fvs_graph* graph);
/* Parses the text instance format. */
FVS_API fvs_status fvs_graph_parse(const char* text, fvs_graph** out);
FVS_API fvs_status fvs_graph_read_file(const char* path, fvs_graph** out);
/* Serialises to the text instance format; free with fvs_string_free. */
FVS_API fvs_status fvs_graph_write(const fvs_graph* graph, char** out);
/* Comment lines ('#') read with the instance, newline separated. */
FVS_API fvs_status fvs_graph_comments(const fvs_graph* graph, char** out);

FVS_API fvs_status fvs_solve(const fvs_graph* graph, uint32_t k, const fvs_solver_config* config,
                             fvs_result** out);
FVS_API void fvs_result_free(fvs_result* result);
/* 1 when an FVS was found, 0 for "no FVS found within the budget". */
FVS_API int fvs_result_found(const fvs_result* result);
FVS_API size_t fvs_result_size(const fvs_result* result);
/* Copies up to capacity vertex ids; returns the full size. */
FVS_API size_t fvs_result_vertices(const fvs_result* result, uint32_t* buffer, size_t capacity);
/* Run statistics as "key=value" lines; free with fvs_string_free. */
FVS_API fvs_status fvs_result_stats(const fvs_result* result, char** out);

/* *is_fvs = 1 iff removing the given vertices leaves a forest. */
FVS_API fvs_status fvs_verify(const fvs_graph* graph, const uint32_t* vertices, size_t count, int* is_fvs);
/* Exact minimum FVS by enumeration (at most 16 vertices). */
FVS_API fvs_status fvs_oracle_min(const fvs_graph* graph, fvs_result** out);
/* Tree decomposition built from the given FVS, in PACE .td text. */
FVS_API fvs_status fvs_tree_decomposition(const fvs_graph* graph, const uint32_t* fvs, size_t count, uint64_t seed,
                                          char** out);

/* Generators. family: "cycle" (a = length), "disjoint-cycles" (a = count,
 * b = length), "random-gnm" (a = n, b = m), "planted-fvs" (a = forest size,
 * b = k, dbar = degree target). The planted set is recorded as a comment. */
FVS_API fvs_status fvs_generate(const char* family, uint64_t a, uint64_t b, double dbar, uint64_t seed,
                                fvs_graph** out);

FVS_API const char* fvs_last_error(void);
FVS_API void fvs_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* FVSKIT_FVSKIT_H */
