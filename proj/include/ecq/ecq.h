#ifndef ECQ_ECQ_H
#define ECQ_ECQ_H

/* C interface to the ecq library: torsion-order families of elliptic
 * curves over Q, their minimal models, local data and conductors, plus the
 * bounded Diophantine solvers behind the classification.
 *
 * Every function returning ecq_status leaves a message retrievable with
 * ecq_last_error() (per thread) when the status is not ECQ_OK. Handles are
 * opaque; strings returned from a handle live as long as the handle. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ECQ_API __declspec(dllexport)
#else
#define ECQ_API __attribute__((visibility("default")))
#endif

typedef enum {
    ECQ_OK = 0,
    ECQ_ERR_ZERO_INPUT,
    ECQ_ERR_DOMAIN,
    ECQ_ERR_SINGULAR,
    ECQ_ERR_DEGENERATE,
    ECQ_ERR_NOT_ON_CURVE,
    ECQ_ERR_NO_SOLUTION,
    ECQ_ERR_INVALID_ARGUMENT,
    ECQ_ERR_INTERNAL
} ecq_status;

typedef enum { ECQ_FORMAT_TABLE = 0, ECQ_FORMAT_CSV, ECQ_FORMAT_JSON_LINES } ecq_format;

/* ECQ_MODE_DEFAULT: squarefree conductor for N = 4, prime powers otherwise. */
typedef enum { ECQ_MODE_DEFAULT = 0, ECQ_MODE_SQUAREFREE, ECQ_MODE_PRIME_POWER } ecq_mode;

typedef struct ecq_curve ecq_curve;
typedef struct ecq_result ecq_result;

typedef enum {
    ECQ_FIELD_INTEGRAL_MODEL = 0, /* "[a1,a2,a3,a4,a6]" */
    ECQ_FIELD_MINIMAL_MODEL,
    ECQ_FIELD_DISC_MIN,           /* factored, e.g. "-2^7*13" */
    ECQ_FIELD_CONDUCTOR,          /* factored */
    ECQ_FIELD_SCALING             /* u with disc = u^12 disc_min */
} ecq_curve_field;

typedef struct {
    const char* p;
    const char* kodaira;   /* "I7", "I3*", "IV", ... */
    const char* reduction; /* "good", "multiplicative-split", ... */
    unsigned ord_disc;
    unsigned conductor_exponent;
    unsigned components;
} ecq_local;

/* Curve for torsion order n and lambda = s/t (decimal strings). */
ECQ_API ecq_status ecq_curve_new(int n, const char* s, const char* t, ecq_curve** out);
ECQ_API void ecq_curve_free(ecq_curve* curve);
ECQ_API const char* ecq_curve_get(const ecq_curve* curve, ecq_curve_field field);
ECQ_API unsigned ecq_curve_torsion(const ecq_curve* curve);
ECQ_API double ecq_curve_szpiro_ratio(const ecq_curve* curve);
ECQ_API size_t ecq_curve_local_count(const ecq_curve* curve);
ECQ_API ecq_status ecq_curve_local(const ecq_curve* curve, size_t index, ecq_local* out);
ECQ_API ecq_status ecq_curve_render(const ecq_curve* curve, ecq_format format, ecq_result** out);

/* Rendered command output. passed is 0 when a verification failed. */
ECQ_API const char* ecq_result_text(const ecq_result* result);
ECQ_API int ecq_result_passed(const ecq_result* result);
ECQ_API void ecq_result_free(ecq_result* result);

ECQ_API ecq_status ecq_enumerate(int n, long bound, ecq_mode mode, unsigned jobs, ecq_format format,
                                 ecq_result** out);
/* report_discrepancies != 0 appends the recomputed conductors of the order-8
 * and order-9 curves next to the claimed ones; never affects passed. */
ECQ_API ecq_status ecq_verify(int n, long bound, ecq_mode mode, unsigned jobs, int report_discrepancies,
                              ecq_format format, ecq_result** out);
/* exponent 0 selects the bound stated for n. */
ECQ_API ecq_status ecq_szpiro(int n, long bound, ecq_mode mode, unsigned jobs, unsigned exponent,
                              ecq_format format, ecq_result** out);

/* Zero fields take the per-equation defaults. */
typedef struct {
    const char* equation; /* catalan, lemma22, lemma23, lemma24, cor25, pell125, mordell2000 */
    long bound;           /* catalan, lemma23, lemma24, cor25, mordell2000 */
    long prime_bound;     /* lemma22 */
    unsigned exponent_bound; /* lemma22 (m), lemma23 (h), lemma24 / cor25 (l), catalan */
    int sign;             /* pell125: +4 or -4 */
    unsigned count;       /* pell125 */
} ecq_dioph_params;

ECQ_API ecq_status ecq_dioph(const ecq_dioph_params* params, ecq_format format, ecq_result** out);

/* Newline-separated list of equation identifiers. */
ECQ_API const char* ecq_equation_ids(void);

ECQ_API const char* ecq_last_error(void);
ECQ_API const char* ecq_status_name(ecq_status status);
ECQ_API const char* ecq_version(void);

#ifdef __cplusplus
}
#endif

#endif
