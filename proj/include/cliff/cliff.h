/*
 * C interface to the exact Clifford algebra library.
 *
 * All objects are opaque handles created by a cliff_*_create / producing
 * call and released with the matching cliff_*_free. Every fallible call
 * returns a cliff_status; on failure cliff_last_error() holds a message for
 * the calling thread until its next failing call. Strings returned through
 * `char **` out-parameters are heap allocated and must be released with
 * cliff_string_free. Rationals cross the boundary as "a" / "a/b" text.
 */
#ifndef CLIFF_CLIFF_H
#define CLIFF_CLIFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CLIFF_BUILDING_LIBRARY)
#    define CLIFF_API __declspec(dllexport)
#  else
#    define CLIFF_API __declspec(dllimport)
#  endif
#else
#  define CLIFF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cliff_status {
  CLIFF_OK = 0,
  CLIFF_E_INVALID_ARGUMENT = 1,
  CLIFF_E_PARSE = 2,
  CLIFF_E_SIGNATURE_MISMATCH = 3,
  CLIFF_E_DIMENSION_CAP = 4,
  CLIFF_E_DIMENSION_MISMATCH = 5,
  CLIFF_E_NOT_INVERTIBLE = 6,
  CLIFF_E_NOT_A_VECTOR = 7,
  CLIFF_E_NOT_STABLE = 8,
  CLIFF_E_NOT_IN_GROUP = 9,
  CLIFF_E_DEGENERATE_FORM = 10,
  CLIFF_E_NOT_AN_ISOMETRY = 11,
  CLIFF_E_ISOTROPIC_VECTOR = 12,
  CLIFF_E_ZERO_VECTOR = 13,
  CLIFF_E_NOT_IDEMPOTENT = 14,
  CLIFF_E_NOT_SIMPLE = 15,
  CLIFF_E_NO_SOLUTION = 16,
  CLIFF_E_SEARCH_FAILED = 17,
  CLIFF_E_UNEXPECTED_DIMENSION = 18,
  CLIFF_E_INTERNAL = 19
} cliff_status;

typedef struct cliff_algebra cliff_algebra;
typedef struct cliff_mv cliff_mv;
typedef struct cliff_mv_list cliff_mv_list;
typedef struct cliff_matrix cliff_matrix;
typedef struct cliff_ideal cliff_ideal;

CLIFF_API const char *cliff_status_name(cliff_status status);
CLIFF_API const char *cliff_last_error(void);
CLIFF_API void cliff_string_free(char *s);
CLIFF_API const char *cliff_version(void);

/* ---- algebra ----------------------------------------------------------- */

/* Cl(p,q,s). Fails with CLIFF_E_DIMENSION_CAP when p+q+s exceeds `cap`
 * (0 selects the default of 10; at most 16). */
CLIFF_API cliff_status cliff_algebra_create(int p, int q, int s, int cap, cliff_algebra **out);
/* Signature text "p,q" or "p,q,s". */
CLIFF_API cliff_status cliff_algebra_parse(const char *text, int cap, cliff_algebra **out);
CLIFF_API void cliff_algebra_free(cliff_algebra *alg);
CLIFF_API void cliff_algebra_signature(const cliff_algebra *alg, int *p, int *q, int *s);
CLIFF_API int cliff_algebra_dimension(const cliff_algebra *alg);

/* Product of basis blades given as masks: *coef in {-1,0,1}. */
CLIFF_API cliff_status cliff_blade_mul(const cliff_algebra *alg, uint32_t a, uint32_t b, int *coef, uint32_t *out);
CLIFF_API cliff_status cliff_blade_name(const cliff_algebra *alg, uint32_t mask, char **out);

/* ---- multivectors ------------------------------------------------------ */

CLIFF_API cliff_status cliff_mv_parse(const cliff_algebra *alg, const char *text, cliff_mv **out);
CLIFF_API cliff_status cliff_mv_from_vector(const cliff_algebra *alg, const cliff_matrix *coords, cliff_mv **out);
CLIFF_API cliff_status cliff_mv_clone(const cliff_mv *x, cliff_mv **out);
CLIFF_API void cliff_mv_free(cliff_mv *x);
CLIFF_API cliff_status cliff_mv_to_string(const cliff_mv *x, char **out);
CLIFF_API cliff_status cliff_mv_to_approx_string(const cliff_mv *x, int digits, char **out);
CLIFF_API int cliff_mv_equal(const cliff_mv *x, const cliff_mv *y);
CLIFF_API size_t cliff_mv_term_count(const cliff_mv *x);
/* i-th term in ascending mask order. */
CLIFF_API cliff_status cliff_mv_term(const cliff_mv *x, size_t i, uint32_t *mask, char **coef);

CLIFF_API cliff_status cliff_mv_add(const cliff_mv *x, const cliff_mv *y, cliff_mv **out);
CLIFF_API cliff_status cliff_mv_mul(const cliff_mv *x, const cliff_mv *y, cliff_mv **out);
CLIFF_API cliff_status cliff_mv_scale(const cliff_mv *x, const char *rational, cliff_mv **out);

typedef enum cliff_involution {
  CLIFF_INVOLUTION_GRADE = 0,
  CLIFF_INVOLUTION_REVERSE = 1,
  CLIFF_INVOLUTION_CONJUGATE = 2
} cliff_involution;

CLIFF_API cliff_status cliff_mv_involution(const cliff_mv *x, cliff_involution kind, cliff_mv **out);
CLIFF_API cliff_status cliff_mv_grade(const cliff_mv *x, int k, cliff_mv **out);
CLIFF_API cliff_status cliff_mv_norm(const cliff_mv *x, cliff_mv **out);
/* CLIFF_E_NOT_INVERTIBLE for zero divisors. */
CLIFF_API cliff_status cliff_mv_inverse(const cliff_mv *x, cliff_mv **out);

/* ---- lists ------------------------------------------------------------- */

CLIFF_API size_t cliff_mv_list_size(const cliff_mv_list *list);
/* Borrowed pointer, valid while the list lives. */
CLIFF_API const cliff_mv *cliff_mv_list_at(const cliff_mv_list *list, size_t i);
CLIFF_API void cliff_mv_list_free(cliff_mv_list *list);

/* ---- rational matrices and vectors --------------------------------------
 * Text format: rows separated by ';', entries by ','. A vector is a 1 x n
 * matrix. */

CLIFF_API cliff_status cliff_matrix_parse(const char *text, cliff_matrix **out);
CLIFF_API void cliff_matrix_free(cliff_matrix *m);
CLIFF_API size_t cliff_matrix_rows(const cliff_matrix *m);
CLIFF_API size_t cliff_matrix_cols(const cliff_matrix *m);
CLIFF_API cliff_status cliff_matrix_entry(const cliff_matrix *m, size_t r, size_t c, char **out);
CLIFF_API cliff_status cliff_matrix_to_string(const cliff_matrix *m, char **out);
CLIFF_API int cliff_matrix_equal(const cliff_matrix *a, const cliff_matrix *b);
CLIFF_API cliff_status cliff_matrix_mul(const cliff_matrix *a, const cliff_matrix *b, cliff_matrix **out);
/* Row r as a 1 x cols matrix. */
CLIFF_API cliff_status cliff_matrix_row(const cliff_matrix *m, size_t r, cliff_matrix **out);
CLIFF_API cliff_status cliff_matrix_transpose(const cliff_matrix *m, cliff_matrix **out);
CLIFF_API cliff_status cliff_matrix_identity(size_t n, cliff_matrix **out);

/* ---- quadratic spaces ---------------------------------------------------- */

/* diag(+1 x p, -1 x q, 0 x s). */
CLIFF_API cliff_status cliff_standard_form(const cliff_algebra *alg, cliff_matrix **out);

typedef enum cliff_vector_kind {
  CLIFF_LIGHTLIKE = 0,
  CLIFF_TIMELIKE = 1,
  CLIFF_SPACELIKE = 2
} cliff_vector_kind;

CLIFF_API cliff_status cliff_quadratic_value(const cliff_matrix *form, const cliff_matrix *v, char **out);
CLIFF_API cliff_status cliff_classify_vector(const cliff_matrix *form, const cliff_matrix *v, cliff_vector_kind *out);
/* basis: columns of the orthogonal basis; diag: 1 x n Phi values. */
CLIFF_API cliff_status cliff_diagonalize(const cliff_matrix *form, cliff_matrix **basis, cliff_matrix **diag, int *p,
                                         int *q, int *s);
CLIFF_API cliff_status cliff_reflection(const cliff_matrix *form, const cliff_matrix *v, cliff_matrix **out);
/* *det_sign is 0 when m is singular. */
CLIFF_API cliff_status cliff_is_isometry(const cliff_matrix *form, const cliff_matrix *m, int *is_isometry,
                                         int *det_sign);
/* Rows of *vectors are w_1..w_k with s_{w1} o ... o s_{wk} = m. */
CLIFF_API cliff_status cliff_factor(const cliff_matrix *form, const cliff_matrix *m, cliff_matrix **vectors,
                                    size_t *count);
CLIFF_API cliff_status cliff_compose_reflections(const cliff_matrix *form, const cliff_matrix *vectors,
                                                 cliff_matrix **out);

/* ---- groups -------------------------------------------------------------- */

typedef struct cliff_group_report {
  int invertible;
  int in_clifford_group;
  int norm_is_scalar;
  int in_pin;
  int in_spin;
} cliff_group_report;

CLIFF_API cliff_status cliff_group_check(const cliff_mv *x, cliff_group_report *out);
/* Fails with CLIFF_E_NOT_INVERTIBLE or CLIFF_E_NOT_STABLE. */
CLIFF_API cliff_status cliff_twisted_adjoint_apply(const cliff_mv *x, const cliff_matrix *v, cliff_matrix **out);
CLIFF_API cliff_status cliff_twisted_adjoint_matrix(const cliff_mv *x, cliff_matrix **out);
CLIFF_API cliff_status cliff_norm_scalar(const cliff_mv *x, char **out);

typedef struct cliff_lift_info {
  size_t reflection_count;
  int within_n;
  int needs_normalization;
} cliff_lift_info;

/* element: the lift; n_value: N(element) as text; approx: element scaled
 * into Pin in floating point when needs_normalization (may be NULL). */
CLIFF_API cliff_status cliff_lift(const cliff_algebra *alg, const cliff_matrix *m, cliff_mv **element,
                                  char **n_value, char **approx, cliff_lift_info *info);

/* ---- spinors ------------------------------------------------------------- */

CLIFF_API int cliff_radon_hurwitz(int j);
CLIFF_API cliff_status cliff_idempotent_exponent(const cliff_algebra *alg, int *k);

typedef struct cliff_idempotent_report {
  int idempotent;
  int orthogonal;
  int sums_to_one;
} cliff_idempotent_report;

/* idems: the 2^k primitive idempotents; blades: the generating blades as
 * unit multivectors. Either out-pointer may be NULL. */
CLIFF_API cliff_status cliff_idempotents(const cliff_algebra *alg, cliff_mv_list **idems, cliff_mv_list **blades,
                                         cliff_idempotent_report *report);

CLIFF_API cliff_status cliff_ideal_minimal(const cliff_algebra *alg, cliff_ideal **out);
CLIFF_API cliff_status cliff_ideal_faithful(const cliff_algebra *alg, cliff_ideal **out);
CLIFF_API cliff_status cliff_ideal_from_idempotent(const cliff_mv *f, cliff_ideal **out);
CLIFF_API void cliff_ideal_free(cliff_ideal *ideal);
CLIFF_API size_t cliff_ideal_dim(const cliff_ideal *ideal);
CLIFF_API cliff_status cliff_ideal_generator(const cliff_ideal *ideal, cliff_mv **out);
CLIFF_API cliff_status cliff_ideal_basis(const cliff_ideal *ideal, cliff_mv_list **out);
CLIFF_API cliff_status cliff_ideal_is_faithful(const cliff_ideal *ideal, int *out);

/* kind: "R", "C" or "H" (static string). */
CLIFF_API cliff_status cliff_division_ring(const cliff_mv *f, size_t *dim, const char **kind, cliff_mv_list **basis);
CLIFF_API cliff_status cliff_rep_matrix(const cliff_ideal *ideal, const cliff_mv *x, cliff_matrix **out);
CLIFF_API cliff_status cliff_center(const cliff_algebra *alg, cliff_mv_list **basis, int *is_simple);

/* E_ij and E_ji for two idempotents of one complete set. */
CLIFF_API cliff_status cliff_interbasis(const cliff_mv *fi, const cliff_mv *fj, cliff_mv **e_ij, cliff_mv **e_ji);
/* Change of basis A f_i -> A f_j and its inverse. */
CLIFF_API cliff_status cliff_intertwiner(const cliff_mv *fi, const cliff_mv *fj, cliff_matrix **forward,
                                         cliff_matrix **backward);

#ifdef __cplusplus
}
#endif

#endif /* CLIFF_CLIFF_H */
