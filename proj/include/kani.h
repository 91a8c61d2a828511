/* C interface to the embedding-problem engine. Every command returns an
 * opaque result holding a human report, a machine (json) report and the
 * process exit code: 0 solved or passed, 1 not solved or failed, 2 error.
 * Calls return NULL only for invalid arguments, bad option strings or
 * allocation failure; kani_last_error() then has the message. Engine-level
 * failures (parse errors in problem files, domain errors, caps) come back
 * as regular results with exit code 2.
 */
#ifndef KANI_H
#define KANI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kani_result kani_result;
typedef struct kani_group kani_group;

const char* kani_version(void);

/* message from the most recent failed call on this thread, or NULL */
const char* kani_last_error(void);

/* options_json: e.g. {"seed": 7, "field_cap": 12, "group_cap": 2000,
 * "closure_cap": 5000, "h1_cap": 2048, "h2_cap": 1024}; NULL or "" keeps
 * the defaults. Unknown keys are rejected. */

/* the simple modules of a group over F_p */
kani_result* kani_run_simples(const char* groupref, uint32_t p, const char* options_json);

/* h0, h1, h2 of a module: moduleref is trivial, regular or simple<i> */
kani_result* kani_run_cohom(const char* groupref, uint32_t p, const char* moduleref,
                            const char* options_json);

/* decide strong solvability of a problem file (text, not a path) */
kani_result* kani_run_decide(const char* problem_text, int with_trace, const char* options_json);

/* the reduction route of a problem file */
kani_result* kani_run_reduce(const char* problem_text, const char* options_json);

/* the full acceptance battery */
kani_result* kani_run_selftest(const char* options_json);

const char* kani_result_human(const kani_result* r);
const char* kani_result_machine(const kani_result* r);
int kani_result_exit_code(const kani_result* r);
void kani_result_free(kani_result* r);

/* group handles for quick structure queries; groupref accepts the same
 * shortcuts as problem files: C<n>, S<n> up to 5, A4, D4, Q8, V4 and
 * "perm: (0 1)(2 3); (4 5)" */
kani_group* kani_group_from_text(const char* groupref, const char* options_json);
uint32_t kani_group_order(const kani_group* g);
int kani_group_is_abelian(const kani_group* g); /* 1, 0, or -1 on NULL */
void kani_group_free(kani_group* g);

#ifdef __cplusplus
}
#endif

#endif
