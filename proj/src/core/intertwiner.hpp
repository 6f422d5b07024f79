#ifndef ALGINT_CORE_INTERTWINER_HPP
#define ALGINT_CORE_INTERTWINER_HPP

#include <cstdint>

#include "algebra.hpp"

namespace algint {

// An invertible C with C*R_i = L_i*C for every basis index, plus the
// solved solution space it was drawn from. For rebased algebras the
// matrix in the original coordinates is kept alongside; canonicality
// (C^T = C and C^2 = 1) is assessed on that form, which is where the
// structure lives.
struct Intertwiner {
  AlgebraPtr algebra;
  Matrix C;                        // current basis
  std::optional<Matrix> original_C; // original basis when the algebra was rebased
  bool canonical = false;
  int space_dim = 0;
  std::vector<Matrix> space_basis; // current basis

  const Matrix& paper_form() const { return original_C ? *original_C : C; }
};

// Basis of {C : C*R_i = L_i*C for all i}; empty means the algebra is
// not self-conjugated. Deterministic (reduced-echelon kernel order).
std::vector<Matrix> intertwiner_space(const Algebra& a);

// Selects a canonical invertible member: candidates are drawn from the
// functionals mu with gram(mu) inside the solved space (every invertible
// intertwiner's inverse is such a gram matrix), preferring
// signed-permutation members, then symmetric involutions, with a
// deterministic entrywise tie-break; falls back to a seeded random
// search over the space. errc::not_self_conjugated /
// errc::no_invertible_intertwiner on failure.
Intertwiner canonical_intertwiner(const AlgebraPtr& a, std::uint64_t seed = 0);

// Wraps a user-supplied matrix after validating the intertwining
// property and invertibility.
Intertwiner intertwiner_from_matrix(const AlgebraPtr& a, const Matrix& c);

// G_{jk} = sum_l f_jkl mu_l. For any functional mu this satisfies
// R_j G = G L_j; when invertible, its inverse is an intertwiner.
Matrix gram_of_functional(const Algebra& a, const Vec& mu);

// Sparse-aware products against the regular representations.
Matrix times_right_rep(const Algebra& a, const Matrix& c, int i);  // C * R_i
Matrix left_rep_times(const Algebra& a, int i, const Matrix& c);   // L_i * C

} // namespace algint

#endif
