/* entroprover — symbolic prover for linear information inequalities.
 *
 * C API over the core library: opaque handles, integer status codes, and
 * caller-freed strings.  Every function returns EP_OK (0) on success; on any
 * other status the out-parameters are untouched and ep_last_error() describes
 * the failure for the calling thread.
 *
 * Inequality strings use the grammar
 *     expr (">=" | "<=" | "=") expr
 * with terms like "3/2 H(A,B|C)" and "I(A;B|C,D)"; see the project README
 * for the full grammar, the derivation-script statements and the pmf file
 * format.
 */

#ifndef ENTROPROVER_H
#define ENTROPROVER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ep_status {
    EP_OK = 0,
    EP_ERR_PARSE = 1,      /* malformed expression/rational/script/pmf text */
    EP_ERR_CONTEXT = 2,    /* operands use different variable contexts */
    EP_ERR_VARIABLE = 3,   /* unknown variable name */
    EP_ERR_LIMIT = 4,      /* variable count outside the supported range */
    EP_ERR_SHAPE = 5,      /* rule premise/partition has the wrong shape */
    EP_ERR_PMF = 6,        /* invalid probability table */
    EP_ERR_SCRIPT = 7,     /* malformed derivation script statement */
    EP_ERR_INVALID = 8,    /* invalid argument (null pointer, bad flag...) */
    EP_ERR_INTERNAL = 9
} ep_status;

/* A canonical linear form over joint entropies together with its variable
 * context, i.e. one inequality "sum c_J H(X_J) >= 0". */
typedef struct ep_form ep_form;

/* A finite joint probability table. */
typedef struct ep_pmf ep_pmf;

/* Description of the most recent failure in this thread ("" if none).
 * The pointer stays valid until the next failing call on the thread. */
const char* ep_last_error(void);

/* Free a string returned through any char** out-parameter. */
void ep_string_free(char* s);

void ep_form_free(ep_form* f);
void ep_pmf_free(ep_pmf* p);

/* --- parsing and printing --------------------------------------------- */

/* Parse an inequality.  `ctx_csv` optionally fixes the variable context as a
 * comma-separated name list; pass NULL to infer it (sorted) from the text.
 * `primary` receives the ">= 0" normal form (rhs-lhs for "<=").  For "=" the
 * opposite direction is stored in `*secondary`; otherwise *secondary is set
 * to NULL.  `secondary` itself may be NULL if the caller rejects equalities.
 */
ep_status ep_form_parse(const char* text, const char* ctx_csv,
                        ep_form** primary, ep_form** secondary);

/* Deterministic textual form, "... >= 0"; re-parses to the identical form. */
ep_status ep_form_render(const ep_form* f, char** out);

/* Number of variables in the form's context. */
ep_status ep_form_arity(const ep_form* f, int* out);

/* --- balancing --------------------------------------------------------- */

/* The balancing transformation.  `negative_r_csv` (optional) receives a
 * comma-separated list of variables with negative residual weight — evidence
 * that the input was not a valid inequality ("" when none). */
ep_status ep_form_balance(const ep_form* f, ep_form** out, char** negative_r_csv);

/* is_balanced / is_balanced_for: `var` may be NULL for "all variables". */
ep_status ep_form_is_balanced(const ep_form* f, const char* var, int* out);

/* --- Shannon-type decision --------------------------------------------- */

/* Exact membership of the form in the cone of elemental inequalities.
 * `*is_shannon` is 1 with a certificate, 0 with a separating witness; the
 * report (text, or JSON when `structured`) carries the certificate/witness.
 * Either out-pointer may be NULL. */
ep_status ep_form_check(const ep_form* f, int structured, int* is_shannon,
                        char** report);

/* --- inference rules ---------------------------------------------------- */

/* Copy rule: premise f + g + alpha*I(z;X|Y) >= 0 yields f + g >= 0.
 * `x_csv`/`y_csv` are comma-separated variable lists (y may be ""); z, x and
 * y must partition the form's context. */
ep_status ep_form_zy(const ep_form* f, const char* z, const char* x_csv,
                     const char* y_csv, ep_form** out);

/* Function-of-Y rule: premise f + g >= 0 yields f + g - r_z*H(z|Y) >= 0. */
ep_status ep_form_mmrv(const ep_form* f, const char* z, const char* x_csv,
                       const char* y_csv, ep_form** out);

/* Substitution "let from = to": identification when `to` is a context
 * variable (context shrinks), pure rename when it is fresh. */
ep_status ep_form_subst(const ep_form* f, const char* from, const char* to,
                        ep_form** out);

/* --- numeric oracle ----------------------------------------------------- */

ep_status ep_pmf_parse(const char* text, ep_pmf** out);
ep_status ep_pmf_render(const ep_pmf* p, char** out);

/* sum_J c_J * H(X_J) evaluated on the distribution (entropies in bits).
 * The pmf must cover exactly the form's variables. */
ep_status ep_form_eval(const ep_form* f, const ep_pmf* p, double* value);

/* The copy construction over {a} u b u c (a partition of p's variables):
 * adds a variable named "<a>_copy" whose joint law with b matches a's and
 * which is conditionally independent of everything else given b. */
ep_status ep_pmf_copy_var(const ep_pmf* p, const char* a, const char* b_csv,
                          const char* c_csv, ep_pmf** out);

/* --- derivation scripts and listings ------------------------------------ */

/* Run a derivation script.  `*outcome` is 0 when every assertion passed,
 * 1 when an assertion failed (the transcript ends at that point).  Script
 * errors (bad statements, rule-shape violations...) return EP_ERR_* with no
 * outcome.  The transcript is text, or JSON when `structured`. */
ep_status ep_run_script(const char* text, int structured, int* outcome,
                        char** transcript);

/* The elemental inequalities over n variables named A, B, C, ... (text
 * listing or JSON when `structured`). */
ep_status ep_elementals(int n, int structured, char** out);

/* Effective variable cap for cone decisions (ENTROPROVER_MAX_N, at most 8). */
int ep_max_n(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTROPROVER_H */
