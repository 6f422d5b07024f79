/*
 * algint — algebraic integration over finite-dimensional associative
 * algebras with identity.
 *
 * C API: opaque handles + status codes. All handle-returning calls
 * write through an out-parameter and return ALGINT_OK on success; on
 * failure the out-parameter is untouched and algint_last_error() holds
 * a message (thread-local). Strings returned through char** are
 * malloc'd; release them with algint_string_free().
 *
 * Scalars cross the boundary as literals: exact values like "2/3" or
 * "1/2+1/2i", approx values in decimal notation. This keeps exact-mode
 * results bit-exact through the API.
 */

#ifndef ALGINT_H
#define ALGINT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct algint_algebra algint_algebra;
typedef struct algint_matrix algint_matrix;
typedef struct algint_element algint_element;
typedef struct algint_intertwiner algint_intertwiner;
typedef struct algint_functional algint_functional;
typedef struct algint_derivation algint_derivation;
typedef struct algint_embedding algint_embedding;

typedef enum {
  ALGINT_OK = 0,
  ALGINT_ERR_INVALID_ARGUMENT = 1,
  ALGINT_ERR_PARSE = 2,
  ALGINT_ERR_MODE_MISMATCH = 3,
  ALGINT_ERR_ALGEBRA_MISMATCH = 4,
  ALGINT_ERR_INDEX = 5,
  ALGINT_ERR_SINGULAR = 6,
  ALGINT_ERR_NO_SOLUTION = 7,
  ALGINT_ERR_NOT_SELF_CONJUGATED = 8,
  ALGINT_ERR_NO_INVERTIBLE_INTERTWINER = 9,
  ALGINT_ERR_COMPLETENESS = 10,
  ALGINT_ERR_NOT_NILPOTENT = 11,
  ALGINT_ERR_NOT_INJECTIVE = 12,
  ALGINT_ERR_NOT_HOMOMORPHISM = 13,
  ALGINT_ERR_INVALID_COCYCLE = 14,
  ALGINT_ERR_CHECK_FAILED = 15,
  ALGINT_ERR_IO = 16,
  ALGINT_ERR_INTERNAL = 17
} algint_status;

#define ALGINT_MODE_EXACT 0
#define ALGINT_MODE_APPROX 1

const char* algint_version(void);
/* Message for the most recent failure on this thread; never NULL. */
const char* algint_last_error(void);
void algint_string_free(char* s);

/* Approx-mode comparison tolerance (default 1e-10). */
double algint_epsilon(void);
algint_status algint_set_epsilon(double eps);

/* --- algebra construction --------------------------------------------- */

algint_status algint_algebra_from_file(const char* path, algint_algebra** out);
algint_status algint_algebra_from_text(const char* text, algint_algebra** out);
algint_status algint_algebra_paragrassmann(int p, int mode, algint_algebra** out);
algint_status algint_algebra_matrix(int n, int mode, algint_algebra** out);
/* e^(nm)-basis form without the identity rebasing; identity/associativity
 * checks are deferred so reports can run on it. */
algint_status algint_algebra_matrix_raw(int n, int mode, algint_algebra** out);
algint_status algint_algebra_grassmann(int n, int mode, algint_algebra** out);
algint_status algint_algebra_cyclic_group(int n, int mode, algint_algebra** out);
algint_status algint_algebra_symmetric3(int mode, algint_algebra** out);
algint_status algint_algebra_klein4(int mode, algint_algebra** out);
/* Klein four-group with the Pauli cocycle (phases 1, -1, i, -i). */
algint_status algint_algebra_pauli(int mode, algint_algebra** out);
/* Z_n with phases omega^(ab), omega = exp(2 pi i/n); approx mode. */
algint_status algint_algebra_cyclic_phase_group(int n, algint_algebra** out);
algint_status algint_algebra_tensor(const algint_algebra* a,
                                    const algint_algebra* b,
                                    algint_algebra** out);
void algint_algebra_free(algint_algebra* a);

/* --- algebra introspection -------------------------------------------- */

int algint_algebra_dim(const algint_algebra* a);
int algint_algebra_mode(const algint_algebra* a);
const char* algint_algebra_name(const algint_algebra* a);
int algint_algebra_identity_index(const algint_algebra* a);
/* 1 when the constructor changed basis to make slot 0 the identity. */
int algint_algebra_is_rebased(const algint_algebra* a);
algint_status algint_algebra_label(const algint_algebra* a, int i, char** out);
/* Label of basis slot i in the pre-rebase coordinates (equals
 * algint_algebra_label when no rebase happened). */
algint_status algint_algebra_original_label(const algint_algebra* a, int i,
                                            char** out);
algint_status algint_algebra_structure_constant(const algint_algebra* a, int i,
                                                int j, int k, char** out);
/* Serialize in the explicit-entries file format. */
algint_status algint_algebra_emit(const algint_algebra* a, char** out);

algint_status algint_algebra_check_identity(const algint_algebra* a, int* ok);

typedef struct {
  int left_ok;      /* L_i L_j = f_ijk L_k       */
  int right_ok;     /* R_i R_j = f_ijk R_k       */
  int commutant_ok; /* [R_i, L_j^T] = 0          */
  int has_failure;  /* a failing associator triple was found */
  int i, j, k;      /* the first failing triple when has_failure */
} algint_assoc_report;

algint_status algint_algebra_check_associativity(const algint_algebra* a,
                                                 algint_assoc_report* out);

algint_status algint_algebra_right_rep(const algint_algebra* a, int i,
                                       algint_matrix** out);
algint_status algint_algebra_left_rep(const algint_algebra* a, int i,
                                      algint_matrix** out);

/* --- matrices ---------------------------------------------------------- */

algint_status algint_matrix_create(int rows, int cols, int mode,
                                   algint_matrix** out);
algint_status algint_matrix_set_entry(algint_matrix* m, int r, int c,
                                      const char* scalar_literal);
int algint_matrix_rows(const algint_matrix* m);
int algint_matrix_cols(const algint_matrix* m);
algint_status algint_matrix_entry(const algint_matrix* m, int r, int c,
                                  char** out);
algint_status algint_matrix_entry_approx(const algint_matrix* m, int r, int c,
                                         double* re, double* im);
void algint_matrix_free(algint_matrix* m);

/* --- elements ----------------------------------------------------------- */

algint_status algint_element_parse(const algint_algebra* a, const char* text,
                                   algint_element** out);
algint_status algint_element_basis(const algint_algebra* a, int i,
                                   algint_element** out);
algint_status algint_element_coeff(const algint_element* e, int i, char** out);
algint_status algint_element_multiply(const algint_element* x,
                                      const algint_element* y,
                                      algint_element** out);
algint_status algint_element_to_string(const algint_element* e, char** out);
void algint_element_free(algint_element* e);

/* --- intertwiners ------------------------------------------------------- */

/* Canonical C: solves C R_i = L_i C, prefers signed-permutation and
 * symmetric involutive members; the seed drives the bounded random
 * fallback search. */
algint_status algint_canonical_intertwiner(const algint_algebra* a,
                                           unsigned long long seed,
                                           algint_intertwiner** out);
algint_status algint_intertwiner_from_matrix(const algint_algebra* a,
                                             const algint_matrix* c,
                                             algint_intertwiner** out);
int algint_intertwiner_space_dim(const algint_intertwiner* c);
/* 1 when C^T = C and C^2 = 1 (for rebased algebras: in the original
 * coordinates, where those identities live). */
int algint_intertwiner_is_canonical(const algint_intertwiner* c);
algint_status algint_intertwiner_matrix(const algint_intertwiner* c,
                                        algint_matrix** out);
/* Pre-rebase form; ALGINT_ERR_INVALID_ARGUMENT when not rebased. */
algint_status algint_intertwiner_original_matrix(const algint_intertwiner* c,
                                                 algint_matrix** out);
algint_status algint_intertwiner_space_basis(const algint_intertwiner* c, int idx,
                                             algint_matrix** out);
void algint_intertwiner_free(algint_intertwiner* c);

/* --- integration -------------------------------------------------------- */

algint_status algint_integration_functional(const algint_algebra* a,
                                            const algint_intertwiner* c,
                                            algint_functional** out);
algint_status algint_functional_mu(const algint_functional* f, int i, char** out);
algint_status algint_functional_gram(const algint_functional* f,
                                     algint_matrix** out);
algint_status algint_integrate(const algint_functional* f,
                               const algint_element* e, char** out);
void algint_functional_free(algint_functional* f);

/* --- derivations --------------------------------------------------------- */

algint_status algint_is_derivation(const algint_algebra* a,
                                   const algint_matrix* d, int* ok);
algint_status algint_inner_derivation(const algint_algebra* a,
                                      const algint_element* e,
                                      algint_derivation** out);
algint_status algint_derivation_matrix(const algint_derivation* d,
                                       algint_matrix** out);
algint_status algint_annihilates_integral(const algint_functional* f,
                                          const algint_derivation* d, int* ok);
/* alpha is a scalar literal in the algebra's mode. */
algint_status algint_invariance_under_flow(const algint_functional* f,
                                           const algint_derivation* d,
                                           const char* alpha, int* ok);
void algint_derivation_free(algint_derivation* d);

/* --- subalgebra integration ---------------------------------------------- */

/* map: dim(big) x dim(small) matrix sending small coordinates to big
 * coordinates; must be injective and multiplicative. */
algint_status algint_embedding_build(const algint_algebra* big,
                                     const algint_algebra* small,
                                     const algint_matrix* map,
                                     algint_embedding** out);
int algint_embedding_complement_dim(const algint_embedding* e);
algint_status algint_embedding_complement_vector(const algint_embedding* e,
                                                 int idx, algint_element** out);
algint_status algint_projector(const algint_embedding* e,
                               const algint_functional* f_big,
                               const algint_functional* f_small,
                               algint_element** out);
algint_status algint_integrate_via_projector(const algint_embedding* e,
                                             const algint_functional* f_big,
                                             const algint_element* projector,
                                             const algint_element* small_elem,
                                             char** out);
void algint_embedding_free(algint_embedding* e);

#ifdef __cplusplus
}
#endif

#endif /* ALGINT_H */
