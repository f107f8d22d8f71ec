/* poki - Lipschitz interpolation (kinky inference) regression with certified
 * global optimisation of metric hyperparameters.
 *
 * C API over the shared library. All objects are opaque handles released with
 * the matching *_free function. Functions return POKI_OK on success; on
 * failure they return an error code and poki_last_error() carries a message
 * (thread-local, valid until the next failing call on the same thread).
 */
#ifndef POKI_POKI_H
#define POKI_POKI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define POKI_API __declspec(dllexport)
#else
#define POKI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum poki_status {
  POKI_OK = 0,
  POKI_ERR_INVALID_ARGUMENT = 1,
  POKI_ERR_IO = 2,
  POKI_ERR_ESTIMATE_UNDEFINED = 3,
  POKI_ERR_NUMERIC = 4,
  POKI_ERR_INTERNAL = 5
} poki_status;

typedef struct poki_dataset poki_dataset;
typedef struct poki_model poki_model;

POKI_API const char* poki_version(void);
POKI_API const char* poki_last_error(void);
/* Releases strings returned through char** out-parameters. */
POKI_API void poki_string_free(char* s);

/* --- datasets --------------------------------------------------------- */

/* inputs: rows*dim doubles, row-major. */
POKI_API poki_status poki_dataset_create(const double* inputs, size_t rows, size_t dim,
                                         const double* outputs, poki_dataset** out);

/* spec_json: {"generator":"artificial"|"periodic"|"pendulum", "n":N,
 *             "d":D (artificial only), "seed":S,
 *             "noise":{"variant":"none"|"gaussian"|"uniform","param":P,"seed":S2}} */
POKI_API poki_status poki_dataset_generate(const char* spec_json, poki_dataset** out);

POKI_API poki_status poki_dataset_load_csv(const char* path, const size_t* input_columns,
                                           size_t n_input_columns, size_t output_column,
                                           int has_header, poki_dataset** out);
POKI_API poki_status poki_dataset_save_csv(const poki_dataset* data, const char* path);

POKI_API size_t poki_dataset_rows(const poki_dataset* data);
POKI_API size_t poki_dataset_dim(const poki_dataset* data);
POKI_API poki_status poki_dataset_output_stats(const poki_dataset* data, double* mean,
                                               double* stddev);

/* Seeded random split; |train| = round(train_fraction * rows), round half up. */
POKI_API poki_status poki_dataset_split(const poki_dataset* data, double train_fraction,
                                        uint64_t seed, poki_dataset** train, poki_dataset** test);
POKI_API void poki_dataset_free(poki_dataset* data);

/* --- models ------------------------------------------------------------ */

/* config_json: {"method":"lin"|"lacki"|"poki-lc"|"poki-ard"|"poki-periodic",
 *               "seed":S, "budget":B, "tol":T, "split_ratio":R,
 *               "theta_box":{"lo":[...],"hi":[...]}}
 * theta_box is required for poki-periodic and defaults to [0, 2*strongin]
 * per axis for the other poki methods. */
POKI_API poki_status poki_fit(const poki_dataset* data, const char* config_json,
                              poki_model** out);

POKI_API poki_status poki_model_predict(const poki_model* model, const double* x, size_t dim,
                                        double* out);
POKI_API poki_status poki_model_predict_batch(const poki_model* model, const double* xs,
                                              size_t rows, size_t dim, double* out);

/* Self-contained JSON document (KI models embed their conditioning data). */
POKI_API poki_status poki_model_to_json(const poki_model* model, char** json_out);
POKI_API poki_status poki_model_from_json(const char* json, poki_model** out);

/* Fit metadata: {"method":..., "theta":[...] (KI models),
 *                "opt":{"gap":...,"evals":...,"lower_bound":...,
 *                       "min_value":...,"converged":...} (poki methods)} */
POKI_API poki_status poki_model_info(const poki_model* model, char** json_out);
POKI_API void poki_model_free(poki_model* model);

/* --- certified global minimisation -------------------------------------- */

typedef double (*poki_objective_fn)(const double* theta, size_t dim, void* user);

/* Minimises a Holder-continuous objective on [lo, hi] with certified bounds.
 * Terminates at gap <= tol or after `budget` evaluations. If trace_path is
 * non-NULL, writes one CSV line per iteration:
 * iteration,evals,incumbent,lower_bound,gap. */
POKI_API poki_status poki_minimize(poki_objective_fn objective, void* user, const double* lo,
                                   const double* hi, size_t dim, double holder_constant,
                                   double holder_exponent, int budget, double tol,
                                   const char* trace_path, double* argmin, double* min_value,
                                   double* lower_bound, int* evals);

/* --- experiments --------------------------------------------------------- */

/* Runs an experiment suite. config_json schema:
 * {"name":..., "dataset":{...}, "test":{...}, "methods":[{...}],
 *  "seeds":[...], "output":"path", "format":"csv"|"json"}
 * Writes the report file when "output" is set and always returns the records
 * as a JSON array through report_json_out. */
POKI_API poki_status poki_run_experiment(const char* config_json, char** report_json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POKI_POKI_H */
