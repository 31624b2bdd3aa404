/*
 * C interface to the singular_forms library.
 *
 * Objects are opaque handles created by *_create / *_parse / sf_generate /
 * sf_classify and released with the matching *_free function. Every
 * fallible call returns an sf_status; on failure a message describing the
 * error is available from sf_last_error() on the calling thread. Strings
 * handed out through char** parameters are owned by the caller and must be
 * released with sf_string_free().
 */
#ifndef SFORMS_C_API_H
#define SFORMS_C_API_H

#include <stdint.h>

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#else
#define SF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_INVALID_ARGUMENT = 1,
  SF_ERR_MALFORMED_INPUT = 2,
  SF_ERR_FIELD_MISMATCH = 3,
  SF_ERR_SINGULAR_MATRIX = 4,
  SF_ERR_NOT_DIVISIBLE = 5,
  SF_ERR_NOT_RANK_ONE = 6,
  SF_ERR_WRONG_RANK = 7,
  SF_ERR_DEGREE_NOT_ONE = 8,
  SF_ERR_SPAN_TOO_SMALL = 9,
  SF_ERR_WRONG_SHAPE = 10,
  SF_ERR_INTERNAL = 11
} sf_status;

typedef enum sf_format { SF_FORMAT_JSON = 0, SF_FORMAT_TABLE = 1 } sf_format;

typedef struct sf_field sf_field;
typedef struct sf_matrix sf_matrix;
typedef struct sf_report sf_report;

SF_API const char* sf_version(void);
SF_API const char* sf_status_name(sf_status status);
/* Message of the most recent failure on this thread, or "". */
SF_API const char* sf_last_error(void);
SF_API void sf_string_free(char* s);

/* "q" for the rationals, "gf<p>" for GF(p), p prime, 5 <= p < 2^32. */
SF_API sf_status sf_field_create(const char* name, sf_field** out);
SF_API void sf_field_free(sf_field* field);

/* Matrix JSON: {"n": int, "rows": 3, "cols": 3, "entries": [[[coeffs]]]}. */
SF_API sf_status sf_matrix_parse_json(const sf_field* field, const char* json, sf_matrix** out);
SF_API sf_status sf_matrix_format(const sf_matrix* m, sf_format format, char** out);
SF_API void sf_matrix_free(sf_matrix* m);

/* tag: "zero-row", "zero-column", "zero-square" or "antisymmetric". */
SF_API sf_status sf_generate(const sf_field* field, const char* tag, int n, uint64_t seed,
                             sf_matrix** out);

SF_API sf_status sf_classify(const sf_matrix* m, sf_report** out);
SF_API int sf_report_is_singular(const sf_report* r);
SF_API int sf_report_in_r(const sf_report* r);
SF_API int sf_report_in_c(const sf_report* r);
/* NULL when the report carries no witness. */
SF_API const char* sf_report_tag(const sf_report* r);
SF_API int sf_report_effective_n(const sf_report* r);
/* 1 when the witness verifies against the classified matrix, 0 otherwise. */
SF_API int sf_report_verify(const sf_report* r);
SF_API sf_status sf_report_format(const sf_report* r, sf_format format, char** out);
SF_API void sf_report_free(sf_report* r);

/* Input: a list of coefficient lists, or {"forms": [...]}. */
SF_API sf_status sf_syzygy(const sf_field* field, const char* forms_json, sf_format format,
                           char** out);

/* Stabilizer and orbit dimensions for the four components; n >= 2. */
SF_API sf_status sf_orbit_dims(const sf_field* field, int n, sf_format format, char** out);

/* Runs the acceptance criteria (quick != 0 divides sample counts by 20).
 * Writes one line per criterion to *out and the number of failing
 * criteria to *failures. */
SF_API sf_status sf_selftest(int quick, uint64_t seed, char** out, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* SFORMS_C_API_H */
