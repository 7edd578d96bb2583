#ifndef ZPRMOD_H
#define ZPRMOD_H

/*
 * zprmod -- exact linear algebra for submodules of Z_{p^r}^n.
 *
 * The library computes canonical standard-form generator matrices, p-bases,
 * socles, duals, sums and intersections of submodules of Z_{p^r}^n (p prime,
 * r >= 1, p^r < 2^63), together with brute-force enumeration routines meant
 * to serve as reference oracles at small sizes.
 *
 * Conventions:
 *   - Scalars are canonical residues in [0, p^r). Every function accepts
 *     arbitrary 64-bit values and canonicalizes on entry.
 *   - Vectors are arrays of n values; matrices are row-major.
 *   - Functions returning zpr_status yield ZPR_OK on success. On failure a
 *     human-readable message is available from zpr_last_error_message()
 *     (thread-local, valid until the next API call on that thread).
 *   - Objects returned through out-parameters are owned by the caller and
 *     released with the matching *_free function.
 *   - A max_states argument of 0 selects the default guard of 65536 states.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zpr_status {
  ZPR_OK = 0,
  ZPR_ERR_NOT_PRIME = 1,
  ZPR_ERR_BAD_EXPONENT = 2,
  ZPR_ERR_OVERFLOW = 3,
  ZPR_ERR_NOT_A_UNIT = 4,
  ZPR_ERR_DIMENSION_MISMATCH = 5,
  ZPR_ERR_TOO_LARGE = 6,
  ZPR_ERR_NOT_A_SUBMODULE = 7,
  ZPR_ERR_PARSE = 8,
  ZPR_ERR_BAD_ARGUMENT = 9,
  ZPR_ERR_NOMEM = 10,
  ZPR_ERR_INTERNAL = 11
} zpr_status;

typedef struct zpr_ring zpr_ring;     /* the ring Z_{p^r} */
typedef struct zpr_module zpr_module; /* a submodule in canonical form */
typedef struct zpr_pbasis zpr_pbasis; /* an ordered p-basis */
typedef struct zpr_vecset zpr_vecset; /* sorted list of ambient vectors */

const char* zpr_status_name(zpr_status status);
const char* zpr_last_error_message(void);

/* ---------------------------------------------------------------- ring -- */

zpr_status zpr_ring_new(long long p, long long r, zpr_ring** out);
void zpr_ring_free(zpr_ring* ring);
long long zpr_ring_prime(const zpr_ring* ring);
long long zpr_ring_exponent(const zpr_ring* ring);
long long zpr_ring_modulus(const zpr_ring* ring);

long long zpr_reduce(const zpr_ring* ring, long long a);
/* digits d_0..d_{r-1}, least significant first; count must equal r */
zpr_status zpr_padic_digits(const zpr_ring* ring, long long a, long long* digits,
                            size_t count);
zpr_status zpr_compose_digits(const zpr_ring* ring, const long long* digits,
                              size_t count, long long* out);
/* largest i <= r with p^i | a; valuation of 0 is r */
long long zpr_valuation(const zpr_ring* ring, long long a);
zpr_status zpr_unit_inverse(const zpr_ring* ring, long long a, long long* out);

/* ---------------------------------------------------------- submodules -- */

zpr_status zpr_module_from_generators(const zpr_ring* ring, size_t n,
                                      const long long* rows, size_t row_count,
                                      zpr_module** out);
/* Module file format: header "p r n", one generator per line, '#' comments. */
zpr_status zpr_module_parse(const char* text, zpr_module** out);
/* Canonical module file; release with zpr_string_free. */
zpr_status zpr_module_format(const zpr_module* m, char** out);
void zpr_string_free(char* s);
void zpr_module_free(zpr_module* m);

long long zpr_module_prime(const zpr_module* m);
long long zpr_module_exponent(const zpr_module* m);
size_t zpr_module_length(const zpr_module* m);    /* ambient n */
size_t zpr_module_row_count(const zpr_module* m); /* k(M) */
long long zpr_module_pdim(const zpr_module* m);
zpr_status zpr_module_cardinality(const zpr_module* m, unsigned long long* out);
/* (k_0, ..., k_{r-1}); count must equal r */
zpr_status zpr_module_block_counts(const zpr_module* m, long long* counts,
                                   size_t count);
/* canonical rows in original column order; capacity >= row_count * n */
zpr_status zpr_module_generator_rows(const zpr_module* m, long long* rows,
                                     size_t capacity);
/* the same rows with pivot columns grouped block by block */
zpr_status zpr_module_standard_rows(const zpr_module* m, long long* rows,
                                    size_t capacity);
/* perm[j] = original index of permuted column j; count must equal n */
zpr_status zpr_module_permutation(const zpr_module* m, long long* perm,
                                  size_t count);

/* coeffs (length row_count, may be NULL) satisfy v == sum coeffs[j]*row_j;
 * the coefficient of a level-i row is canonical in [0, p^{r-i}) */
zpr_status zpr_module_membership(const zpr_module* m, const long long* v,
                                 int* member, long long* coeffs);
zpr_status zpr_module_equal(const zpr_module* a, const zpr_module* b, int* equal);
zpr_status zpr_module_dual(const zpr_module* m, zpr_module** out);
zpr_status zpr_module_socle(const zpr_module* m, zpr_module** out);
zpr_status zpr_module_sum(const zpr_module* a, const zpr_module* b,
                          zpr_module** out);
zpr_status zpr_module_intersect(const zpr_module* a, const zpr_module* b,
                                zpr_module** out);
/* every element of the module, lexicographically sorted */
zpr_status zpr_module_enumerate(const zpr_module* m, size_t max_states,
                                zpr_vecset** out);

typedef struct zpr_verify_report {
  long long pdim;
  long long pdim_dual;
  long long ambient_pdim;      /* r * n */
  int dim_identity_ok;         /* pdim + pdim_dual == r*n */
  int cardinality_identity_ok; /* |M| * |dual| == p^(r*n) */
  int dual_parameters_ok;      /* standard-form parameter relations */
  int all_ok;
} zpr_verify_report;

zpr_status zpr_module_verify_identities(const zpr_module* m,
                                        zpr_verify_report* out);

/* ------------------------------------------------------------- p-bases -- */

zpr_status zpr_pbasis_from_module(const zpr_module* m, zpr_pbasis** out);
/* validates the two p-basis predicates; ZPR_ERR_BAD_ARGUMENT otherwise */
zpr_status zpr_pbasis_new(const zpr_ring* ring, size_t n,
                          const long long* vectors, size_t count,
                          zpr_pbasis** out);
void zpr_pbasis_free(zpr_pbasis* b);
size_t zpr_pbasis_dim(const zpr_pbasis* b);
size_t zpr_pbasis_length(const zpr_pbasis* b);
/* capacity >= dim * n */
zpr_status zpr_pbasis_vectors(const zpr_pbasis* b, long long* vectors,
                              size_t capacity);
/* the unique digit tuple (entries in [0, p)) with sum digits[j]*v_j == v;
 * digits has length dim and may be NULL */
zpr_status zpr_pbasis_coordinates(const zpr_pbasis* b, const long long* v,
                                  int* member, long long* digits);
/* extend a p-basis of a submodule of m to a p-basis of m; new vectors are
 * prepended. ZPR_ERR_NOT_A_SUBMODULE when the basis lies outside m. */
zpr_status zpr_pbasis_extend(const zpr_pbasis* sub, const zpr_module* m,
                             zpr_pbasis** out);

/* first_violation (may be NULL) gets the smallest failing index when !ok */
zpr_status zpr_check_p_generator_sequence(const zpr_ring* ring, size_t n,
                                          const long long* vectors, size_t count,
                                          size_t max_states, int* ok,
                                          size_t* first_violation);
/* witness (length count, may be NULL) gets a nonzero digit tuple summing to
 * zero when dependent; *witness_set says whether it was filled */
zpr_status zpr_check_p_independent(const zpr_ring* ring, size_t n,
                                   const long long* vectors, size_t count,
                                   size_t max_states, int* independent,
                                   long long* witness, int* witness_set);

/* -------------------------------------------------- brute-force oracle -- */

zpr_status zpr_enumerate_span(const zpr_ring* ring, size_t n,
                              const long long* rows, size_t row_count,
                              size_t max_states, zpr_vecset** out);
zpr_status zpr_enumerate_p_span(const zpr_ring* ring, size_t n,
                                const long long* vectors, size_t count,
                                size_t max_states, zpr_vecset** out,
                                int* collision);
zpr_status zpr_brute_dual(const zpr_ring* ring, size_t n,
                          const long long* elements, size_t element_count,
                          size_t max_states, zpr_vecset** out);
zpr_status zpr_brute_p_independent(const zpr_ring* ring, size_t n,
                                   const long long* vectors, size_t count,
                                   size_t max_states, int* independent,
                                   long long* witness, int* witness_set);

void zpr_vecset_free(zpr_vecset* s);
size_t zpr_vecset_size(const zpr_vecset* s);
size_t zpr_vecset_length(const zpr_vecset* s); /* ambient n */
zpr_status zpr_vecset_row(const zpr_vecset* s, size_t index, long long* out);

#ifdef __cplusplus
}
#endif

#endif /* ZPRMOD_H */
