/* C interface to the majority edge-coloring library.
 *
 * Graphs live behind an opaque handle. Everything else (lists, colorings,
 * reports) crosses the boundary as JSON text in the formats of json_io.hpp.
 * Strings returned through `char** out` are owned by the caller and must be
 * released with mec_string_free. On failure the functions return a non-zero
 * status and mec_last_error() describes it (per thread).
 */
#ifndef MAJORITY_MAJORITY_H
#define MAJORITY_MAJORITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MEC_API __declspec(dllexport)
#else
#define MEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mec_status {
  MEC_OK = 0,
  MEC_INVALID_ARGUMENT = 1,
  MEC_PRECONDITION = 2,
  MEC_NOT_FOUND = 3,
  MEC_BUDGET_EXHAUSTED = 4,
  MEC_CAP_EXCEEDED = 5,
  MEC_PARSE = 6,
  MEC_INTERNAL = 7
} mec_status;

typedef struct mec_graph mec_graph;

/* Search limits. node_limit 0 means the library default; time_limit_secs
 * <= 0 means no time limit. */
typedef struct mec_budget {
  uint64_t node_limit;
  double time_limit_secs;
  unsigned threads;
} mec_budget;

MEC_API const char* mec_version(void);
MEC_API const char* mec_status_name(mec_status status);
MEC_API const char* mec_last_error(void);
MEC_API void mec_string_free(char* s);
MEC_API mec_budget mec_default_budget(void);

/* graphs */
MEC_API mec_status mec_graph_from_json(const char* json, mec_graph** out);
MEC_API void mec_graph_free(mec_graph* g);
MEC_API mec_status mec_graph_to_json(const mec_graph* g, char** out);
/* coloring_json may be NULL */
MEC_API mec_status mec_graph_to_dot(const mec_graph* g, const char* coloring_json, char** out);
MEC_API size_t mec_graph_vertex_count(const mec_graph* g);
MEC_API size_t mec_graph_edge_count(const mec_graph* g);

/* Families: cycle(n), path(m edges), complete(n), star(n leaves), petersen,
 * gadget (class 2 gadget over C_n, n >= 3), even(n, m, seed),
 * mindeg(n, m, delta, seed). Unused parameters are ignored. */
MEC_API mec_status mec_generate(const char* family, uint64_t n, uint64_t m, uint64_t delta,
                                uint64_t seed, mec_graph** out);

/* {"edges":[...],"vertices":[...],"closed":b}. start_edge and from are
 * ignored when negative. */
MEC_API mec_status mec_euler(const mec_graph* g, int64_t start_edge, int64_t from, char** out);

/* {"admits":b} plus the witness of a "no" */
MEC_API mec_status mec_decide2(const mec_graph* g, char** out);

/* 2-list coloring: {"coloring":{..},"report":{..},"pivots":[..]}.
 * universe_json (array of colors) may be NULL: union of the lists. */
MEC_API mec_status mec_color2(const mec_graph* g, const char* lists_json,
                              const char* universe_json, char** out);

/* 3-coloring. decide: {"exists":b[,"coloring":..]}; otherwise
 * {"coloring":..,"report":..}. partial attaches K5s to low-degree vertices
 * first and restricts back. stats_json (may be NULL) receives
 * {"nodes":N,"tree_closed":b}. */
MEC_API mec_status mec_color3(const mec_graph* g, int partial, int decide, mec_budget budget,
                              char** out, char** stats_json);

/* 4-list coloring: {"coloring":..,"report":..} */
MEC_API mec_status mec_color4(const mec_graph* g, const char* lists_json, char** out);

/* {"line":graph,"map":{"<edge>":vertex},"coloring":..,"report":..} */
MEC_API mec_status mec_linegraph(const mec_graph* g, const char* lists_json,
                                 const char* universe_json, char** out);

/* family "grid" or "tree4":
 * {"family":..,"depth":n,"lookahead":k,"ball":graph,"lazy":[..],
 *  "interior":[..],"coloring":..,"member":b,"levels":[{"depth":i,"member":b}],
 *  "report":..} */
MEC_API mec_status mec_ball(const char* family, unsigned depth, unsigned lookahead,
                            mec_budget budget, char** out, char** stats_json);

/* verifiers: report JSON */
MEC_API mec_status mec_verify_edges(const mec_graph* g, const char* coloring_json, char** out);
MEC_API mec_status mec_verify_vertices(const mec_graph* g, const char* coloring_json,
                                       char** out);

/* exhaustive oracle. predicate "majority" or "proper"; exactly one of
 * lists_json / palette_json is non-NULL. {"exists":b[,"witness":..]} */
MEC_API mec_status mec_oracle(const mec_graph* g, const char* predicate, const char* lists_json,
                              const char* palette_json, char** out);

MEC_API mec_status mec_chromatic_index(const mec_graph* g, size_t* out);

/* conjecture probing: {"conjecture":c,"trials_run":..,"found":b,...} */
MEC_API mec_status mec_hunt(int conjecture, size_t n_max, size_t trials, uint64_t seed,
                            mec_budget budget, char** out);

/* Checks one graph (and, for conjecture 2, lists) instead of random ones. */
MEC_API mec_status mec_hunt_instance(int conjecture, const mec_graph* g, const char* lists_json,
                                     mec_budget budget, char** out);

#ifdef __cplusplus
}
#endif

#endif
