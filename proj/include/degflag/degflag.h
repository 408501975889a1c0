#ifndef DEGFLAG_H
#define DEGFLAG_H

#include <stddef.h>

#if defined(DFL_BUILDING_LIBRARY)
#define DFL_API __attribute__((visibility("default")))
#else
#define DFL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dfl_status {
  DFL_OK = 0,
  DFL_INVALID_ARGUMENT = 1,
  DFL_OUT_OF_RANGE = 2,
  DFL_STRUCTURAL = 3,
  DFL_BUDGET_EXCEEDED = 4,
  DFL_INTERNAL = 5
} dfl_status;

/* Message for the last failing call on this thread; "" after success. */
DFL_API const char* dfl_last_error(void);
DFL_API const char* dfl_status_name(dfl_status status);
DFL_API const char* dfl_version(void);

/* Every char** result is heap-allocated; release it with dfl_string_free. */
DFL_API void dfl_string_free(char* s);

/* Integers that can exceed 64 bits are passed as decimal strings. */
DFL_API dfl_status dfl_normalized_h(int n, char** out);
DFL_API dfl_status dfl_median_genocchi(int n, char** out);

typedef struct dfl_triangle dfl_triangle;
DFL_API dfl_status dfl_seidel_triangle(int rows, dfl_triangle** out);
DFL_API dfl_status dfl_kreweras_triangle(int rows, dfl_triangle** out);
DFL_API size_t dfl_triangle_rows(const dfl_triangle* t);
/* Rows and entries are 1-based. */
DFL_API dfl_status dfl_triangle_row_length(const dfl_triangle* t, size_t row, size_t* out);
DFL_API dfl_status dfl_triangle_entry(const dfl_triangle* t, size_t row, size_t k, char** out);
DFL_API dfl_status dfl_triangle_to_json(const dfl_triangle* t, char** out);
DFL_API void dfl_triangle_free(dfl_triangle* t);

typedef struct dfl_qpoly dfl_qpoly;
/* Poincare polynomial of the complete degenerate flag variety, 1 <= n <= 8. */
DFL_API dfl_status dfl_poincare(int n, int jobs, dfl_qpoly** out);
DFL_API int dfl_qpoly_degree(const dfl_qpoly* poly);
DFL_API dfl_status dfl_qpoly_coeff(const dfl_qpoly* poly, size_t exponent, char** out);
DFL_API dfl_status dfl_qpoly_eval(const dfl_qpoly* poly, const char* x, char** out);
DFL_API dfl_status dfl_qpoly_to_json(const dfl_qpoly* poly, char** out);
DFL_API void dfl_qpoly_free(dfl_qpoly* poly);

typedef struct dfl_dellac_set dfl_dellac_set;
DFL_API dfl_status dfl_dellac_enumerate(int n, int jobs, dfl_dellac_set** out);
DFL_API size_t dfl_dellac_set_size(const dfl_dellac_set* set);
/* Index is 0-based. */
DFL_API dfl_status dfl_dellac_length(const dfl_dellac_set* set, size_t index, int* out);
DFL_API dfl_status dfl_dellac_refinement(const dfl_dellac_set* set, size_t index, int* out);
DFL_API dfl_status dfl_dellac_grid(const dfl_dellac_set* set, size_t index, char** out);
DFL_API dfl_status dfl_dellac_get_json(const dfl_dellac_set* set, size_t index, char** out);
DFL_API dfl_status dfl_dellac_set_to_json(const dfl_dellac_set* set, char** out);
DFL_API void dfl_dellac_set_free(dfl_dellac_set* set);

/* JSON in, JSON out. Validation reports are {"ok":bool,"violations":[...]}.
 * A structurally malformed input fails with DFL_STRUCTURAL. */
DFL_API dfl_status dfl_validate_dellac(const char* dellac_json, char** report);
DFL_API dfl_status dfl_validate_tuple(const char* tuple_json, char** report);
DFL_API dfl_status dfl_validate_dumont(int n, const char* values_json, char** report);
DFL_API dfl_status dfl_tuple_to_dellac(const char* tuple_json, char** out);
DFL_API dfl_status dfl_dellac_to_tuple(const char* dellac_json, char** out);
DFL_API dfl_status dfl_dumont_to_dellac(int n, const char* values_json, char** out);
DFL_API dfl_status dfl_dellac_to_dumont(const char* dellac_json, char** out);
/* dims == NULL selects complete flags (1, ..., n-1). */
DFL_API dfl_status dfl_enumerate_tuples(int n, const int* dims, size_t ndims, char** out);
DFL_API dfl_status dfl_enumerate_dumont(int n, int jobs, char** out);
/* kind is "tuple" or "dumont". Checks both round trips on the full domain. */
DFL_API dfl_status dfl_bijection_roundtrip(int n, const char* kind, int jobs, char** out);

DFL_API dfl_status dfl_count_points(int n, unsigned p, const int* dims, size_t ndims, int jobs, char** out);
DFL_API dfl_status dfl_cell_counts(int n, unsigned p, const int* dims, size_t ndims, int jobs, char** out);
DFL_API dfl_status dfl_grassmann_cell_dimension(const int* label, size_t d, int n, int* out);

DFL_API dfl_status dfl_pluecker_relation(const int* L, size_t p, const int* J, size_t q, int k, int degenerate,
                                         char** out);
DFL_API dfl_status dfl_pluecker_cutout(int n, unsigned p, const int* dims, size_t ndims, int jobs, char** out);

typedef struct dfl_verify_params {
  int n;
  unsigned p;
  int rows;
  const int* dims; /* NULL for complete flags */
  size_t ndims;
  int jobs;
} dfl_verify_params;

DFL_API dfl_verify_params dfl_verify_defaults(void);
/* passed is set to 1 when every check holds. An unknown suite fails with
 * DFL_INVALID_ARGUMENT. */
DFL_API dfl_status dfl_verify(const char* suite, const dfl_verify_params* params, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif
