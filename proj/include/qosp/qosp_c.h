/*
 * C interface to the qosp kernel: exact computations in the quantum
 * superalgebra U_q(osp(1|2)).
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return QOSP_OK on success; on failure they return a status
 * code and leave a human-readable message in qosp_last_error() (a
 * thread-local buffer). Strings returned through `char**` are heap
 * allocated and must be released with qosp_string_free().
 */
#ifndef QOSP_C_H
#define QOSP_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qosp_status {
    QOSP_OK = 0,
    QOSP_VERIFY_FAILED = 1, /* a verification ran and found a failing relation */
    QOSP_USAGE_ERROR = 2,
    QOSP_ARITH_ERROR = 3,
    QOSP_PARSE_ERROR = 4,
    QOSP_IO_ERROR = 5,
} qosp_status;

typedef struct qosp_field qosp_field;
typedef struct qosp_elem qosp_elem;

const char* qosp_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* qosp_last_error(void);

/* ---- fields ---------------------------------------------------------- */

qosp_status qosp_field_new_generic(qosp_field** out);
qosp_status qosp_field_new_root(int l, qosp_field** out);
void qosp_field_free(qosp_field* field);

/* ---- algebra elements ------------------------------------------------ */

qosp_status qosp_elem_parse(const qosp_field* field, const char* expr, qosp_elem** out);
/* name: "e", "f", "k", "k_inv" */
qosp_status qosp_elem_generator(const qosp_field* field, const char* name, qosp_elem** out);
qosp_status qosp_elem_scasimir(const qosp_field* field, qosp_elem** out);
qosp_status qosp_elem_casimir(const qosp_field* field, qosp_elem** out);

qosp_status qosp_elem_add(const qosp_elem* x, const qosp_elem* y, qosp_elem** out);
qosp_status qosp_elem_sub(const qosp_elem* x, const qosp_elem* y, qosp_elem** out);
qosp_status qosp_elem_mul(const qosp_elem* x, const qosp_elem* y, qosp_elem** out);
qosp_status qosp_elem_neg(const qosp_elem* x, qosp_elem** out);
qosp_status qosp_elem_pow(const qosp_elem* x, long n, qosp_elem** out);

/* 1 / 0, or -1 on error */
int qosp_elem_equal(const qosp_elem* x, const qosp_elem* y);
int qosp_elem_is_zero(const qosp_elem* x);
int qosp_elem_is_central(const qosp_elem* x);
int qosp_elem_is_scentral(const qosp_elem* x);

qosp_status qosp_elem_to_text(const qosp_elem* x, char** out);
qosp_status qosp_elem_to_json(const qosp_elem* x, char** out);
void qosp_elem_free(qosp_elem* x);

/* ---- one-shot JSON entry points (used by the CLI) -------------------- */
/* `l` selects root mode; l = 0 means generic mode where permitted.      */

qosp_status qosp_rootdata_json(int l, char** out);
qosp_status qosp_nf_json(int l, const char* expr, char** out);
/* family: "p", "q" or "r" */
qosp_status qosp_cheb_json(const char* family, int m, char** out);
/* what: "all", "scasm", "srel", "centre"; max_m 0 = default; corrupt may
 * be NULL or a relation name whose sign is flipped (failure-path probe).
 * Returns QOSP_VERIFY_FAILED when a relation fails; *out is valid then. */
qosp_status qosp_verify_json(int l, const char* what, int max_m, const char* corrupt,
                             char** out);
qosp_status qosp_classify_json(int l, char** out);
/* family as in the CLI; unused scalar parameters may be NULL */
qosp_status qosp_rep_build_json(int l, const char* family, const char* lambda,
                                const char* phi, const char* eps, const char* sigma, int d,
                                char** out);
/* Verifies the defining relations and runs the irreducibility oracle on a
 * serialized module; QOSP_VERIFY_FAILED when a relation fails. */
qosp_status qosp_rep_check_json(const char* rep_json, char** out);
qosp_status qosp_eval_json(int l, const char* rep_json, const char* expr, char** out);

void qosp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QOSP_C_H */
