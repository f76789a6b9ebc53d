/* C interface for the cantornet shared library.
 *
 * Conventions:
 *   - Every fallible function returns cn_status; CN_OK is 0.
 *   - On failure, cn_last_error() returns a thread-local message describing
 *     the most recent error in the calling thread.
 *   - Objects are opaque handles created by cn_*_create/cn_*_generate and
 *     destroyed by the matching cn_*_release (NULL-safe).
 *   - Strings returned through char** are heap-allocated; free them with
 *     cn_string_free.
 */
#ifndef CANTORNET_H
#define CANTORNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cn_status {
    CN_OK = 0,
    CN_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad size, malformed input */
    CN_ERR_DOMAIN = 2,           /* argument outside a mathematical domain  */
    CN_ERR_VALIDATION = 3,       /* weight matrix fails the requirements    */
    CN_ERR_NOT_ON_LINE = 4,      /* projection input too far from the ray   */
    CN_ERR_CAPTURE = 5,          /* sensitivity probe exhausted max_k       */
    CN_ERR_IO = 6,               /* file read/write failure                 */
    CN_ERR_INTERNAL = 7
} cn_status;

const char* cn_version(void);
const char* cn_last_error(void);
void cn_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Truncated-sum threshold parameters                                  */
/* ------------------------------------------------------------------ */
typedef struct cn_delta cn_delta;

/* K in [1, 64]: number of golden-word digits in the truncated sum. */
cn_status cn_delta_create(unsigned K, cn_delta** out);
void cn_delta_release(cn_delta* d);
unsigned cn_delta_K(const cn_delta* d);
double cn_delta_value(const cn_delta* d);
double cn_delta_theta(const cn_delta* d);
double cn_delta_tail_bound(const cn_delta* d);
cn_status cn_delta_to_json(const cn_delta* d, char** out);

/* i-th digit of the golden-rotation word (0-based). */
cn_status cn_fib_digit(uint64_t i, uint32_t* out);

/* ------------------------------------------------------------------ */
/* Weight matrices                                                     */
/* ------------------------------------------------------------------ */
typedef struct cn_matrix cn_matrix;

/* column_mode 0: every row sums to sum_target; 1: every column does.
 * sum_target must lie strictly inside (3/4, 1). */
cn_status cn_matrix_generate(size_t n, uint64_t seed, double sum_target,
                             int column_mode, cn_matrix** out);
cn_status cn_matrix_from_file(const char* path, cn_matrix** out);
void cn_matrix_release(cn_matrix* m);
size_t cn_matrix_n(const cn_matrix* m);
int cn_matrix_column_mode(const cn_matrix* m);
cn_status cn_matrix_entries(const cn_matrix* m, double* buf, size_t buflen);
/* ok receives 1 when the matrix satisfies positivity and the sum-range
 * requirement, else 0 (the call itself still succeeds). */
cn_status cn_matrix_validate(const cn_matrix* m, int* ok, char** report_json);
cn_status cn_matrix_to_csv(const cn_matrix* m, char** out);
cn_status cn_matrix_to_json(const cn_matrix* m, char** out);
cn_status cn_matrix_fingerprint(const cn_matrix* m, char** out);

/* ------------------------------------------------------------------ */
/* Network                                                             */
/* ------------------------------------------------------------------ */
typedef struct cn_network cn_network;

cn_status cn_network_create(const cn_matrix* m, const cn_delta* d, cn_network** out);
void cn_network_release(cn_network* p);
size_t cn_network_n(const cn_network* p);
double cn_network_rho(const cn_network* p);
double cn_network_pi_residual(const cn_network* p);
double cn_network_v_norm2(const cn_network* p);
cn_status cn_network_eigenvector(const cn_network* p, double* buf, size_t buflen);

/* One synchronous update; x and y have length n (y may alias x). */
cn_status cn_network_step(const cn_network* p, const double* x, double* y);

/* Iterate N steps from x0 and write the orbit CSV (header k,x_1,...,x_n,
 * states at multiples of record_every plus the final state) to path. */
cn_status cn_simulate_to_file(const cn_network* p, const double* x0, uint64_t N,
                              uint64_t record_every, const char* path);

/* ------------------------------------------------------------------ */
/* Invariant-ray reduction                                             */
/* ------------------------------------------------------------------ */
cn_status cn_g_tilde(const cn_delta* d, double t, double* out);
cn_status cn_g(const cn_delta* d, double t, double* out);
cn_status cn_embed(const cn_network* p, double t, double* buf, size_t buflen);
cn_status cn_project(const cn_network* p, const double* x, double* t, double* residual);
cn_status cn_diagram_residual(const cn_network* p, double t, double* out);

/* Scalar orbit CSV (header k,t,branch). extended != 0 iterates at 120
 * fractional bits with exact branch decisions; 0 iterates plain doubles. */
cn_status cn_scalar_orbit_to_file(const cn_delta* d, double t0, uint64_t N,
                                  int extended, const char* path);

/* Branch itinerary of the same orbit as a 0/1 string (0 = left of the
 * threshold, 1 = right). Free with cn_string_free. */
cn_status cn_scalar_itinerary(const cn_delta* d, double t0, uint64_t N,
                              int extended, char** out);

/* ------------------------------------------------------------------ */
/* Chaos diagnostics                                                   */
/* ------------------------------------------------------------------ */
typedef struct cn_attractor cn_attractor;

cn_status cn_attractor_estimate(const cn_delta* d, double t0, uint64_t burn_in,
                                uint64_t samples, double resolution,
                                cn_attractor** out);
void cn_attractor_release(cn_attractor* a);
size_t cn_attractor_size(const cn_attractor* a);
cn_status cn_attractor_points(const cn_attractor* a, double* buf, size_t buflen);
cn_status cn_attractor_to_file(const cn_attractor* a, const char* path);
cn_status cn_attractor_hausdorff(const cn_attractor* a, const cn_attractor* b,
                                 double* out);
cn_status cn_attractor_box_count(const cn_attractor* a, double scale, uint64_t* out);

cn_status cn_rotation_alpha(double* out);
cn_status cn_rotation_step(double t, double* out);

/* Right-branch frequency of the 120-bit orbit of length N from t0. */
cn_status cn_branch_frequency(const cn_delta* d, double t0, uint64_t N, double* out);

cn_status cn_omega_check_json(const cn_delta* d, const cn_attractor* a, double t0,
                              uint64_t tail_start, uint64_t tail_len, double tol,
                              int* pass, char** json);

/* v_norm2 scales the scalar separation into network units; pass NaN when no
 * network context applies (eta_network is then null in the JSON). */
cn_status cn_sensitivity_probe_json(const cn_delta* d, double t0, double epsilon,
                                    uint64_t max_k, double v_norm2, char** json);

/* ------------------------------------------------------------------ */
/* Aggregate verification                                              */
/* ------------------------------------------------------------------ */
/* Runs matrix validation, threshold/eigenvalue ordering, codomain check,
 * ray invariance and the one-step conjugacy sweep; pass receives 1 iff all
 * hold. */
cn_status cn_check_json(const cn_matrix* m, const cn_delta* d,
                        uint64_t box_samples, uint64_t orbit_steps,
                        uint64_t sweep_count, uint64_t rng_seed,
                        int* pass, char** json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CANTORNET_H */
