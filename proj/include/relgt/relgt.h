/* relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the relgt core. Objects are opaque handles; every call
 * returns a status code and reports details through relgt_last_error().
 * Strings returned through out-parameters are heap-allocated and must be
 * released with relgt_string_free(). All payloads are JSON or DOT text;
 * rationals are "p/q" strings, permutations one-line image arrays.
 */

#ifndef RELGT_H
#define RELGT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relgt_status {
  RELGT_OK = 0,
  RELGT_ERR_INVALID = 1, /* bad arguments or broken preconditions */
  RELGT_ERR_DOMAIN = 2,  /* hypothesis gate refused the operation */
  RELGT_ERR_PARSE = 3,   /* malformed rational, permutation or JSON */
  RELGT_ERR_INTERNAL = 4
} relgt_status;

/* A module: seed tableau, relation graph and twist permutation. */
typedef struct relgt_module relgt_module;

const char* relgt_version(void);

/* Message for the most recent failing call on this thread. */
const char* relgt_last_error(void);

void relgt_string_free(char* s);
void relgt_module_free(relgt_module* m);

/* Highest weight module for a sigma-relation weight. lambda_csv like
 * "-1/6,-2/3,5/6"; sigma_csv a one-line image like "1,3,2". */
relgt_status relgt_module_build(int n, const char* lambda_csv, const char* sigma_csv,
                                relgt_module** out);

relgt_status relgt_module_seed_json(const relgt_module* m, char** out);
relgt_status relgt_module_graph_json(const relgt_module* m, char** out);
relgt_status relgt_module_graph_dot(const relgt_module* m, char** out);

/* Basis enumeration inside |z| <= window; JSON with count, completeness flag
 * and the shift keys. */
relgt_status relgt_module_enumerate(const relgt_module* m, int window, char** out);

/* Apply E_{l,m} (diagonal when l == m) to the seed or to the tableau given
 * as JSON (pass NULL for the seed); result is a JSON linear combination. */
relgt_status relgt_module_act(const relgt_module* m, int l, int mm,
                              const char* tableau_json, char** out);

/* Exact commutator sweep on the windowed basis; JSON report. */
relgt_status relgt_module_check_brackets(const relgt_module* m, int window, char** out);

/* Localization: mode 0 = D_f^z (z_csv rational, NULL means 0),
 * mode 1 = twisting functor T_f. simple_out receives the simplicity verdict
 * of the produced module (0/1). */
relgt_status relgt_module_localize(const relgt_module* m, int mode, const char* z_csv,
                                   relgt_module** out, int* simple_out);

/* Witness sweep, lower-bound certificate and finite-dimension report.
 * jobs > 1 fans the sweep out over that many workers. */
relgt_status relgt_analyze(int n, const char* lambda_csv, int jobs, char** out);

/* 1 when T_sigma(sigma^{-1}(lambda+staircase)) is a highest weight vector of
 * weight lambda (exact annihilation and eigenvalue checks), else 0. */
relgt_status relgt_verify_highest_weight(int n, const char* lambda_csv,
                                         const char* sigma_csv, int* ok_out);

/* Relation-graph classification of an arbitrary tableau given as JSON:
 * "relation", "critical", "cross", "diamond" (normalized first). */
relgt_status relgt_tableau_classify(const char* tableau_json, char** verdict_out);

#ifdef __cplusplus
}
#endif

#endif /* RELGT_H */
