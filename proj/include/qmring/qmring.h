/* qmring: exact quadratic modules over group rings with involution.
 *
 * C interface to the shared library. All domain data crosses this boundary
 * as UTF-8 JSON strings (see README for the formats); handles are opaque.
 * Every function returns a qmr_status; on anything but QMR_OK the session
 * holds a human-readable message in qmr_last_error(). Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with qmr_string_free().
 */
#ifndef QMRING_H
#define QMRING_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmr_status {
    QMR_OK = 0,
    QMR_ERR_PARSE = 1,        /* malformed JSON or schema violation */
    QMR_ERR_PRECONDITION = 2, /* named precondition violated */
    QMR_ERR_EXHAUSTED = 3,    /* bounded search exhausted / budget exceeded */
    QMR_ERR_VERIFY = 4,       /* a verification failed */
    QMR_ERR_INTERNAL = 5
} qmr_status;

typedef struct qmr_session qmr_session;
typedef struct qmr_module qmr_module;

qmr_session* qmr_session_new(void);
void qmr_session_free(qmr_session* s);
/* Message for the last failing call on this session; "" if none. The
 * returned pointer stays valid until the next call on the session. */
const char* qmr_last_error(const qmr_session* s);
const char* qmr_version(void);
void qmr_string_free(char* s);

/* ---- quadratic module handles ---- */
qmr_status qmr_module_parse(qmr_session* s, const char* module_json, qmr_module** out);
qmr_status qmr_module_hyperbolic(qmr_session* s, const char* context_json, long k,
                                 qmr_module** out);
qmr_status qmr_module_orthogonal_sum(qmr_session* s, const qmr_module* a,
                                     const qmr_module* b, qmr_module** out);
qmr_status qmr_module_to_json(qmr_session* s, const qmr_module* m, char** json_out);
long qmr_module_rank(const qmr_module* m);
void qmr_module_free(qmr_module* m);

/* ---- operations on a module handle ---- */
qmr_status qmr_inner(qmr_session* s, const qmr_module* m, const char* x_json,
                     const char* y_json, char** ring_element_out);
qmr_status qmr_mu(qmr_session* s, const qmr_module* m, const char* x_json,
                  char** ring_element_out);
qmr_status qmr_apply_transvection(qmr_session* s, const qmr_module* m,
                                  const char* transvection_json, const char* vector_json,
                                  char** vector_out);
/* Returns QMR_ERR_VERIFY when form or mu preservation fails; the report JSON
 * is produced either way. */
qmr_status qmr_verify_isometry(qmr_session* s, const qmr_module* m,
                               const char* transvection_json, unsigned long seed,
                               long samples, char** report_out);
/* request_json = {"p": vector, "witness": vector} */
qmr_status qmr_complete_pair(qmr_session* s, const qmr_module* m, const char* request_json,
                             char** pair_out);

/* ---- whole-input operations ---- */
qmr_status qmr_validate(qmr_session* s, const char* artifact_json, char** report_out);
qmr_status qmr_factorize(qmr_session* s, const char* input_json, char** certificate_out);
qmr_status qmr_verify_certificate(qmr_session* s, const char* input_json,
                                  const char* certificate_json, char** report_out);
/* QMR_ERR_EXHAUSTED when the search ends without a word (report still set).
 * modulus_override > 0 replaces the modulus given in the problem file. */
qmr_status qmr_transport(qmr_session* s, const char* problem_json, long max_depth,
                         long node_budget, long modulus_override, char** report_out);
qmr_status qmr_stability_bound(qmr_session* s, const char* group_json, char** report_out);
qmr_status qmr_invariant_generators(qmr_session* s, const char* input_json,
                                    long degree_bound, char** certificate_out);
/* r_certificate_json may be NULL; the R generators are then recomputed. */
qmr_status qmr_norm_generators(qmr_session* s, const char* input_json,
                               const char* r_certificate_json, long degree_bound,
                               char** certificate_out);
qmr_status qmr_verify_fg(qmr_session* s, const char* input_json, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* QMRING_H */
