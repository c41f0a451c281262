/*
 * schubrest - exact equivariant Schubert class restrictions on Grassmannians.
 *
 * C interface of the shared library. All functions return a status code;
 * results come back through out-parameters. Strings returned through
 * `char **out` are heap-allocated and must be released with
 * sr_string_free(); polynomial handles with sr_poly_free().
 *
 * Index conventions are 1-based throughout: alpha and beta are strictly
 * increasing subsets of {1..n} of size d.
 */

#ifndef SCHUBREST_H
#define SCHUBREST_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
    SR_OK = 0,
    SR_ERR_INVALID_ARGUMENT = 1, /* malformed input (bad subsets, shapes, JSON) */
    SR_ERR_LIMIT = 2,            /* a configured computation bound was exceeded */
    SR_ERR_OVERFLOW = 3,         /* exact integer arithmetic overflowed 64 bits */
    SR_ERR_VERIFY_FAILED = 4,    /* a verification suite found a counterexample */
    SR_ERR_INTERNAL = 5
} sr_status;

typedef enum sr_theory { SR_THEORY_K = 0, SR_THEORY_H = 1 } sr_theory;

typedef enum sr_format {
    SR_FORMAT_TEXT = 0,
    SR_FORMAT_LATEX = 1,
    SR_FORMAT_JSON = 2
} sr_format;

/* Opaque exact Laurent polynomial in t_1..t_n. */
typedef struct sr_poly sr_poly;

const char *sr_version(void);

/* Message for the most recent failing call on this thread; valid until the
 * next library call on the same thread. */
const char *sr_last_error(void);

void sr_string_free(char *s);
void sr_poly_free(sr_poly *p);

/* ---- restriction ------------------------------------------------------- */

/* Restriction of the Schubert class of alpha to the fixed point of beta.
 * alpha and beta point at d strictly increasing entries in [1, n]. */
sr_status sr_restrict(int d, int n, const int *alpha, const int *beta,
                      sr_theory theory, sr_poly **out);

/* Full result document (request echo, result, metadata; factored
 * presentation when factored != 0) rendered in the requested format. */
sr_status sr_restrict_document(int d, int n, const int *alpha, const int *beta,
                               sr_theory theory, sr_format format, int factored,
                               char **out);

/* ---- polynomial handles ------------------------------------------------ */

sr_status sr_poly_format(const sr_poly *p, sr_format format, char **out);
sr_status sr_poly_parse_json(const char *json_text, sr_poly **out);
/* 1 if equal, 0 if not. */
int sr_poly_equal(const sr_poly *a, const sr_poly *b);
int sr_poly_is_zero(const sr_poly *p);
sr_status sr_poly_term_count(const sr_poly *p, long long *out);

/* ---- enumeration and ladder graphs ------------------------------------- */

/* model is one of "ssyt", "ssvt", "paths", "subsets". lambda and mu are
 * partitions (weakly decreasing, nonnegative); lambda is padded to the
 * length of mu. */
sr_status sr_enumerate_count(const char *model, const int *lambda, int lambda_len,
                             const int *mu, int mu_len, long long *out);

sr_status sr_enumerate_document(const char *model, const int *lambda, int lambda_len,
                                const int *mu, int mu_len, sr_format format,
                                int count_only, char **out);

/* DOT digraph of the ladder moves of one model ("ssyt", "paths", "subsets"). */
sr_status sr_ladder_graph_dot(const char *model, const int *lambda, int lambda_len,
                              const int *mu, int mu_len, char **out);

/* ---- verification ------------------------------------------------------ */

/* Runs a verification suite ("all", "oracles", "bijections", "nsum",
 * "positivity") over every pair in I_{d,n}. The report is always produced;
 * the return value is SR_OK when every check passes and
 * SR_ERR_VERIFY_FAILED when one does not. failure_count may be NULL. */
sr_status sr_verify(int d, int n, const char *suite, char **report,
                    int *failure_count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SCHUBREST_H */
