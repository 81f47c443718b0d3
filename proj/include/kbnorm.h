/* SPDX-License-Identifier: Apache-2.0 */

/* C interface of the kbnorm shared library.
 *
 * kbnorm computes the norm of the differentiation operator D: K_B -> H^2 on
 * finite-dimensional model spaces spanned by Malmquist-Walsh bases, together
 * with the closed-form brackets, certificates and embedding ratios attached
 * to it. Pole configurations are opaque handles; every entry point returns a
 * status code and writes results through out parameters. All functions are
 * thread safe; the last error message is thread local.
 */

#ifndef KBNORM_H_
#define KBNORM_H_

#include <stdint.h>

#if defined(_WIN32)
#define KBNORM_API __declspec(dllexport)
#else
#define KBNORM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kbn_status {
  KBN_OK = 0,
  KBN_ERR_INVALID_ARGUMENT = 1,
  KBN_ERR_POLE_OUTSIDE_DISC = 2,
  KBN_ERR_EVALUATION = 3,
  KBN_ERR_ANALYTICITY = 4,
  KBN_ERR_NO_CONVERGENCE = 5,
  KBN_ERR_INVARIANT = 6,
  KBN_ERR_INTERNAL = 7
} kbn_status;

typedef enum kbn_space {
  KBN_SPACE_BESOV = 0,
  KBN_SPACE_WIENER = 1
} kbn_space;

/* Opaque pole configuration: ordered poles in the open unit disc,
 * repetition = multiplicity. */
typedef struct kbn_config kbn_config;

KBNORM_API const char* kbn_version(void);
KBNORM_API const char* kbn_status_name(kbn_status status);
/* Thread-local message describing the most recent failure. */
KBNORM_API const char* kbn_last_error(void);

/* ---- configurations ---------------------------------------------------- */

KBNORM_API kbn_status kbn_config_create(const double* re, const double* im,
                                        int32_t count, kbn_config** out);
KBNORM_API kbn_status kbn_config_confluent(double re, double im, int32_t count,
                                           kbn_config** out);
KBNORM_API void kbn_config_destroy(kbn_config* config);
KBNORM_API int32_t kbn_config_degree(const kbn_config* config);
KBNORM_API double kbn_config_max_modulus(const kbn_config* config);

/* ---- Blaschke products ------------------------------------------------- */

KBNORM_API kbn_status kbn_blaschke_eval(const kbn_config* config, double z_re,
                                        double z_im, double* out_re,
                                        double* out_im);
KBNORM_API kbn_status kbn_blaschke_derivative(const kbn_config* config,
                                              double z_re, double z_im,
                                              double* out_re, double* out_im);
/* grid_size = 0 picks the policy grid. */
KBNORM_API kbn_status kbn_blaschke_derivative_sup(const kbn_config* config,
                                                  int32_t grid_size,
                                                  double* out);

/* ---- operator norm ------------------------------------------------------ */

typedef struct kbn_norm_result {
  double norm;       /* ||D||_{K_B -> H^2} */
  double lambda_max; /* largest eigenvalue of the derivative Gram */
  double residual;   /* ||G v - lambda v|| / max(lambda, 1) */
  int32_t iterations;
  int32_t dimension; /* Gram size n */
} kbn_norm_result;

/* grid_override = 0 uses the quadrature policy; a positive value is rounded
 * up to the next admissible grid. */
KBNORM_API kbn_status kbn_operator_norm(const kbn_config* config,
                                        int32_t grid_override,
                                        kbn_norm_result* out);

/* ---- closed-form bounds -------------------------------------------------- */

KBNORM_API kbn_status kbn_bound_coefficients(int32_t n, double r,
                                             double* a_lower, double* A_upper,
                                             double* legacy_52);
KBNORM_API kbn_status kbn_n1_exact_norm(double re, double im, double* out);
KBNORM_API kbn_status kbn_confluent_derivative_norm_squared(int32_t n, double r,
                                                            double* out);
KBNORM_API kbn_status kbn_phi_coefficients(int32_t n, double r, double* c0,
                                           double* c1, double* c2);

typedef struct kbn_certificate {
  int32_t n;
  int32_t s;
  double r;
  double q;
  double certified_lower;
  double measured;
  double f_norm_squared;
} kbn_certificate;

KBNORM_API kbn_status kbn_extremal_certificate(int32_t n, double r, int32_t s,
                                               kbn_certificate* out);

typedef struct kbn_bracket {
  double lower;
  double upper;
  double sup_derivative;
  double norm;
  int32_t holds;
} kbn_bracket;

KBNORM_API kbn_status kbn_dyakonov_bracket(const kbn_config* config,
                                           int32_t grid_size, kbn_bracket* out);

typedef struct kbn_bound_report {
  int32_t n;
  double r;
  double norm;  /* ||D|| at the confluent configuration {r, ..., r} */
  double ratio; /* (1-r) norm / n */
  double a_lower;
  double A_upper;
  double legacy_52;
} kbn_bound_report;

KBNORM_API kbn_status kbn_confluent_report(int32_t n, double r,
                                           kbn_bound_report* out);

KBNORM_API kbn_status kbn_randomized_configuration_max(int32_t n, double r,
                                                       int32_t trials,
                                                       uint64_t seed,
                                                       double* out);

typedef struct kbn_embedding_record {
  int32_t space; /* kbn_space */
  double s;
  int32_t n;
  double r;
  int32_t trials;
  double max_ratio;
  double normalized;
} kbn_embedding_record;

KBNORM_API kbn_status kbn_embedding_ratio(int32_t space, double s, int32_t n,
                                          double r, int32_t trials,
                                          uint64_t seed,
                                          kbn_embedding_record* out);

/* ---- verification -------------------------------------------------------- */

typedef void (*kbn_verify_callback)(const char* name, int32_t passed,
                                    const char* detail, void* user);

/* Runs the library invariant suite; *failures receives the number of failed
 * checks. The callback may be NULL. */
KBNORM_API kbn_status kbn_verify(kbn_verify_callback callback, void* user,
                                 int32_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* KBNORM_H_ */
