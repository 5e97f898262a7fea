/* C interface to the newform Dedekind sum library.
 *
 * Every call returns a dks_status. On failure dks_last_error() describes the
 * problem (per thread, valid until the next call on that thread). Strings
 * handed out through char** parameters are owned by the caller and released
 * with dks_string_free. Exact values are reported as JSON text.
 */
#ifndef DEDEKIND_DEDEKIND_H
#define DEDEKIND_DEDEKIND_H

#include <stddef.h>
#include <stdint.h>

#if defined(DKS_BUILDING_LIBRARY)
#define DKS_API __attribute__((visibility("default")))
#else
#define DKS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dks_status {
  DKS_OK = 0,
  DKS_ERR_DOMAIN = 1,       /* argument outside the operation's domain */
  DKS_ERR_VALIDATION = 2,   /* characters do not form a valid pair */
  DKS_ERR_PARSE = 3,        /* malformed label, matrix or number */
  DKS_ERR_NOT_RATIONAL = 4,
  DKS_ERR_USAGE = 5,        /* unknown suite name or bad option */
  DKS_ERR_IO = 6,
  DKS_ERR_THEOREM = 7,      /* a theorem-backed invariant failed */
  DKS_ERR_INTERNAL = 8,
  DKS_ERR_NULL = 9,         /* required pointer argument was NULL */
  DKS_ERR_MEMORY = 10
} dks_status;

/* A validated pair (chi1, chi2) of primitive characters. */
typedef struct dks_context dks_context;

DKS_API const char* dks_version(void);
DKS_API const char* dks_last_error(void);
DKS_API const char* dks_status_name(dks_status status);
DKS_API void dks_string_free(char* s);

/* JSON array of {label, modulus, conductor, order, parity, primitive}. */
DKS_API dks_status dks_chars_list(int64_t q, int primitive_only, char** out_json);

/* Labels look like "5:[1]". */
DKS_API dks_status dks_context_new(const char* chi1_label, const char* chi2_label,
                                   dks_context** out);
DKS_API void dks_context_free(dks_context* ctx);
/* {chi1, chi2, psi, N, M, degree} */
DKS_API dks_status dks_context_info(const dks_context* ctx, char** out_json);

/* {"value": {"order", "coeffs"}, "rational": "p/q"}; "rational" only when the
 * value is rational. */
DKS_API dks_status dks_eval_hk(const dks_context* ctx, int64_t h, int64_t k, char** out_json);
/* matrix as "[[a,b],[c,d]]", an element of Gamma0(N) */
DKS_API dks_status dks_eval_gamma(const dks_context* ctx, const char* matrix, char** out_json);

/* Report {h, k, n, lhs, rhs, equal}; *equal is set to 0 or 1. */
DKS_API dks_status dks_knopp_classical(int64_t h, int64_t k, int64_t n, int* equal,
                                       char** out_json);
DKS_API dks_status dks_knopp_newform(const dks_context* ctx, int64_t h, int64_t k, int64_t n,
                                     int* equal, char** out_json);

/* {field_order, degree, denominator, basis, generator_count} */
DKS_API dks_status dks_lattice_compute(const dks_context* ctx, char** out_json);

typedef struct dks_scan_options {
  int64_t qmax;
  unsigned jobs;         /* 0 or 1: single-threaded */
  int include_timing;    /* add elapsed_ms to every record */
} dks_scan_options;

/* Writes JSONL to out_path. *records gets the record count and *all_rank_ok
 * whether every record has full rank. */
DKS_API dks_status dks_scan(const dks_scan_options* opts, const char* out_path, size_t* records,
                            int* all_rank_ok);

typedef struct dks_verify_options {
  uint64_t seed;
  unsigned jobs;
  size_t samples;        /* 0: the default count of each check */
} dks_verify_options;

DKS_API void dks_verify_options_init(dks_verify_options* opts);

/* Receives the report lines of each suite as it finishes. */
typedef void (*dks_report_fn)(const char* text, void* user);

/* Split and decomposition checks for one context; *passed is 0 or 1. */
DKS_API dks_status dks_cohomology(const dks_context* ctx, const dks_verify_options* opts,
                                  dks_report_fn report, void* user, int* passed);

/* suite: knopp-classical, knopp-newform, crossed-hom, scaling, galois,
 * lattice, cohomology, independence or all. */
DKS_API dks_status dks_verify(const char* suite, const dks_verify_options* opts,
                              dks_report_fn report, void* user, int* passed);

#ifdef __cplusplus
}
#endif

#endif
