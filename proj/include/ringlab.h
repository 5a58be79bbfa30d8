/* ringlab — finite ring laboratory.
 *
 * C interface to the ringlab core: build finite rings from expressions,
 * query their structure (radical, idempotents, locality, abelianness),
 * run bounded Armendariz-type classifications with replayable JSON
 * certificates, validate the bundled closure theorems, and reproduce the
 * worked examples.
 *
 * All result documents are JSON strings owned by the library; release them
 * with ringlab_string_free. Handles are not thread-safe individually, but
 * distinct handles may be used from distinct threads.
 */

#ifndef RINGLAB_H
#define RINGLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define RINGLAB_API __declspec(dllexport)
#else
#define RINGLAB_API __attribute__((visibility("default")))
#endif

typedef enum ringlab_status {
  RINGLAB_OK = 0,
  RINGLAB_ERR_PARSE = 1,
  RINGLAB_ERR_PRECONDITION = 2,
  RINGLAB_ERR_BUDGET = 3,
  RINGLAB_ERR_CAP_EXCEEDED = 4,
  RINGLAB_ERR_ENUMERATION = 5,
  RINGLAB_ERR_NOT_IDEMPOTENT = 6,
  RINGLAB_ERR_ELEMENT_NOT_IN_RING = 7,
  RINGLAB_ERR_BAD_ARGUMENT = 8,
  RINGLAB_ERR_IO = 9,
  RINGLAB_ERR_MALFORMED_WITNESS = 10,
  RINGLAB_ERR_INTERNAL = 11
} ringlab_status;

/* Session: options plus the last error message. */
typedef struct ringlab_ctx ringlab_ctx;
/* A ring built from an expression, materialized on demand. */
typedef struct ringlab_ring ringlab_ring;

RINGLAB_API const char* ringlab_version(void);

RINGLAB_API ringlab_status ringlab_ctx_new(ringlab_ctx** out_ctx);
RINGLAB_API void ringlab_ctx_free(ringlab_ctx* ctx);

/* Message for the most recent failing call on this context. */
RINGLAB_API const char* ringlab_ctx_last_error(const ringlab_ctx* ctx);

/* Directory for the binary Cayley-table cache; empty disables caching. */
RINGLAB_API ringlab_status ringlab_ctx_set_cache_dir(ringlab_ctx* ctx,
                                                     const char* path);
/* Worker threads for classification searches (output-invariant). */
RINGLAB_API ringlab_status ringlab_ctx_set_workers(ringlab_ctx* ctx, int workers);
/* Exhaustive-search budget: search runs while size^(deg_f+1) <= budget. */
RINGLAB_API ringlab_status ringlab_ctx_set_budget(ringlab_ctx* ctx,
                                                  uint64_t budget);
/* Materialization cap (element count) for Cayley tables; at most 65535. */
RINGLAB_API ringlab_status ringlab_ctx_set_table_cap(ringlab_ctx* ctx,
                                                     uint32_t cap);

/* Parses and builds a ring expression, e.g. "t(2,gf(2))". */
RINGLAB_API ringlab_status ringlab_ring_open(ringlab_ctx* ctx, const char* expr,
                                             ringlab_ring** out_ring);
RINGLAB_API void ringlab_ring_free(ringlab_ring* ring);

RINGLAB_API uint64_t ringlab_ring_size(const ringlab_ring* ring);
RINGLAB_API const char* ringlab_ring_expr(const ringlab_ring* ring);

/* Structure queries (JSON documents). */
RINGLAB_API ringlab_status ringlab_ring_info(ringlab_ctx* ctx, ringlab_ring* ring,
                                             char** out_json);
RINGLAB_API ringlab_status ringlab_ring_radical(ringlab_ctx* ctx,
                                                ringlab_ring* ring,
                                                char** out_json);
RINGLAB_API ringlab_status ringlab_ring_idempotents(ringlab_ctx* ctx,
                                                    ringlab_ring* ring,
                                                    char** out_json);
RINGLAB_API ringlab_status ringlab_ring_is_local(ringlab_ctx* ctx,
                                                 ringlab_ring* ring,
                                                 int* out_is_local,
                                                 char** out_json);
RINGLAB_API ringlab_status ringlab_ring_is_abelian(ringlab_ctx* ctx,
                                                   ringlab_ring* ring,
                                                   int* out_is_abelian,
                                                   char** out_json);

/* Bounded classification.
 * target: "armendariz" (products zero), "weak" (nilpotent), "j" (radical).
 * mode:   "exhaustive" or "sample"; trials applies to sampling only.
 * out_verdict: 0 verified, 1 counterexample, 2 unknown. */
RINGLAB_API ringlab_status ringlab_classify(ringlab_ctx* ctx, ringlab_ring* ring,
                                            const char* target, int deg_f,
                                            int deg_g, const char* mode,
                                            uint64_t trials, int* out_verdict,
                                            char** out_json);

/* Replays a classification certificate document against a freshly built
 * ring. out_valid: 1 when the witness revalidates. */
RINGLAB_API ringlab_status ringlab_verify_certificate(ringlab_ctx* ctx,
                                                      const char* cert_json,
                                                      int* out_valid,
                                                      char** out_json);

/* Runs every theorem validator over a corpus: one ring expression per line,
 * '#' starts a comment. out_all_hold covers the rows that ran. */
RINGLAB_API ringlab_status ringlab_check_theorems(ringlab_ctx* ctx,
                                                  const char* corpus_text,
                                                  int deg_f, int deg_g,
                                                  int* out_all_hold,
                                                  char** out_json);

/* Runs the bundled worked-example suite.
 * which_case: "e2", "e5", "e7", "e9" or "all"; truncation >= 3. */
RINGLAB_API ringlab_status ringlab_verify_paper(ringlab_ctx* ctx,
                                                const char* which_case,
                                                int truncation,
                                                int* out_all_passed,
                                                char** out_json);

RINGLAB_API void ringlab_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RINGLAB_H */
