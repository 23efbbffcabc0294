/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SYMDPP_SYMDPP_H
#define SYMDPP_SYMDPP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SYMDPP_API __declspec(dllexport)
#else
#define SYMDPP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every entry point returns one of these. On failure the message is kept per
   thread and read back with symdpp_last_error(). */
typedef enum symdpp_status {
  SYMDPP_OK = 0,
  SYMDPP_ERR_INVALID_ARGUMENT = 1,
  SYMDPP_ERR_DOMAIN = 2,
  SYMDPP_ERR_STRUCTURAL = 3,
  SYMDPP_ERR_ALGORITHM = 4,
  SYMDPP_ERR_NUMERIC = 5,
  SYMDPP_ERR_DEGENERATE = 6,
  SYMDPP_ERR_CONSISTENCY = 7,
  SYMDPP_ERR_REGION = 8,
  SYMDPP_ERR_RESOURCE = 9,
  SYMDPP_ERR_INTERNAL = 10
} symdpp_status;

typedef struct symdpp_params symdpp_params;
typedef struct symdpp_kernel symdpp_kernel;
typedef struct symdpp_batch symdpp_batch;
typedef struct symdpp_table symdpp_table;

SYMDPP_API const char* symdpp_version(void);
SYMDPP_API const char* symdpp_status_name(symdpp_status s);
SYMDPP_API const char* symdpp_last_error(void);

/* Ensemble parameters; p = p_num / p_den, use 1/2 for the combinatorial model. */
SYMDPP_API symdpp_status symdpp_params_create(int n, int k, long p_num, long p_den, symdpp_params** out);
SYMDPP_API void symdpp_params_destroy(symdpp_params* p);
SYMDPP_API symdpp_status symdpp_params_get(const symdpp_params* p, int* n, int* k, int* K);

/* Row lengths of one sampled diagram, zero padded to n entries. */
SYMDPP_API symdpp_status symdpp_sample_shape(const symdpp_params* p, uint64_t seed, uint64_t index, int* rows, size_t len);
/* Probability of the diagram with the given row lengths. `exact` receives the
   reduced fraction when non-null; `needed` the buffer size including the NUL. */
SYMDPP_API symdpp_status symdpp_measure(const symdpp_params* p, const int* rows, size_t nrows, double* value, char* exact,
                                        size_t exact_len, size_t* needed);
SYMDPP_API symdpp_status symdpp_validate_bijection(const symdpp_params* p, int* ok);

/* Christoffel-Darboux kernel on the positive lattice a = 1..n+k. */
SYMDPP_API symdpp_status symdpp_kernel_create(const symdpp_params* p, symdpp_kernel** out);
SYMDPP_API void symdpp_kernel_destroy(symdpp_kernel* k);
SYMDPP_API symdpp_status symdpp_kernel_value(const symdpp_kernel* k, int a, int b, double* out);
SYMDPP_API symdpp_status symdpp_kernel_density(const symdpp_kernel* k, int a, double* out);

SYMDPP_API symdpp_status symdpp_limit_density(double x, double H, double* rho, int* in_support);
SYMDPP_API symdpp_status symdpp_sine_kernel(int d, double rho, double* out);

/* Monte Carlo batch. threads = 0 uses SYMDPP_THREADS or the hardware count. */
SYMDPP_API symdpp_status symdpp_sampling_run(const symdpp_params* p, uint64_t samples, int replicates, uint64_t seed,
                                             const int* anchors, size_t n_anchors, int threads, symdpp_batch** out);
SYMDPP_API void symdpp_batch_destroy(symdpp_batch* b);
SYMDPP_API symdpp_status symdpp_batch_density(const symdpp_batch* b, int a, double* out);
SYMDPP_API symdpp_status symdpp_batch_digest(const symdpp_batch* b, uint64_t* out);
SYMDPP_API symdpp_status symdpp_batch_seconds(const symdpp_batch* b, double* out);

/* Result tables. Every constructor hands back a table to free with
   symdpp_table_destroy. */
SYMDPP_API symdpp_status symdpp_table_measure(const symdpp_params* p, symdpp_table** out);
SYMDPP_API symdpp_status symdpp_table_samples(const symdpp_params* p, uint64_t seed, uint64_t count, symdpp_table** out);
SYMDPP_API symdpp_status symdpp_table_density(const symdpp_batch* b, symdpp_table** out);
SYMDPP_API symdpp_status symdpp_table_polynomials(const symdpp_params* p, int max_m, symdpp_table** out);
SYMDPP_API symdpp_status symdpp_table_check_table1(int K, int n, symdpp_table** out, int* all_match);
/* anchor = 0 emits the full matrix. */
SYMDPP_API symdpp_status symdpp_table_kernel(const symdpp_params* p, int anchor, symdpp_table** out);
/* family 'K' or 'G'. */
SYMDPP_API symdpp_status symdpp_table_asymptotic(const symdpp_params* p, char family, int m, symdpp_table** out);
SYMDPP_API symdpp_status symdpp_table_selftest(const symdpp_params* p, symdpp_table** out, int* all_pass);
/* Empirical, CD and sine ratios around the anchor; b may be null. */
SYMDPP_API symdpp_status symdpp_table_compare(const symdpp_params* p, const symdpp_batch* b, int anchor, int radius,
                                              symdpp_table** out);

SYMDPP_API void symdpp_table_destroy(symdpp_table* t);
SYMDPP_API size_t symdpp_table_rows(const symdpp_table* t);
SYMDPP_API size_t symdpp_table_columns(const symdpp_table* t);
SYMDPP_API const char* symdpp_table_column_name(const symdpp_table* t, size_t col);
SYMDPP_API symdpp_status symdpp_table_number(const symdpp_table* t, size_t row, size_t col, double* out);
/* Text of a cell or metadata entry; same buffer protocol as symdpp_measure. */
SYMDPP_API symdpp_status symdpp_table_text(const symdpp_table* t, size_t row, size_t col, char* buf, size_t len,
                                           size_t* needed);
SYMDPP_API symdpp_status symdpp_table_meta(const symdpp_table* t, const char* key, char* buf, size_t len, size_t* needed);
/* format "csv" or "json"; path null writes to stdout. precision applies to CSV. */
SYMDPP_API symdpp_status symdpp_table_write(const symdpp_table* t, const char* format, const char* path, int precision);

#ifdef __cplusplus
}
#endif

#endif /* SYMDPP_SYMDPP_H */
