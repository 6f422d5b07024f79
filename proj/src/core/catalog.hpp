#ifndef ALGINT_CORE_CATALOG_HPP
#define ALGINT_CORE_CATALOG_HPP

#include "algebra.hpp"

namespace algint {

// A finite group as an explicit multiplication table. Constructors
// verify the group axioms (associativity exhaustively, identity,
// inverses).
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul; // mul[a][b] = index of a*b
  int identity = -1;
  std::vector<int> inverse;

  int order() const { return static_cast<int>(names.size()); }

  static GroupTable from_table(std::vector<std::string> names,
                               std::vector<std::vector<int>> mul);
};

GroupTable cyclic_group(int n);
GroupTable symmetric3();
GroupTable klein4();

// Multiplicative 2-cocycle: unit-modulus phases alpha(a,b) with
// alpha(a,b) alpha(ab,c) = alpha(b,c) alpha(a,bc) and alpha normalized
// at the identity. Validation reports the offending pair/triple.
struct Cocycle {
  Matrix phases; // order x order

  static Cocycle trivial(const GroupTable& g, Mode mode);
  static Cocycle from_phases(const GroupTable& g, Matrix phases);
};

// The Pauli cocycle on the Klein four-group: x(10) x(01) = -i x(11)
// and companions, realised by X, Z, Y = iXZ. Exact phases in {1,-1,i,-i}.
Cocycle pauli_cocycle(const GroupTable& k4, Mode mode);
// alpha(a,b) = omega^(ab) on Z_n with omega = exp(2 pi i / n); approx
// mode (the phases are not Gaussian rationals for n > 4).
Cocycle root_of_unity_cocycle(const GroupTable& cyclic, int n);

// --- algebra families -------------------------------------------------

// theta^(p+1) = 0, basis 1, theta, ..., theta^p.
AlgebraPtr paragrassmann(int p, Mode mode);

// Full N x N matrix algebra on the e^(nm) basis; the identity is
// sum_n e^(nn), so the constructor rebases (slot 0 becomes I).
AlgebraPtr matrix_algebra(int n, Mode mode);
// The raw e-basis form, identity check deferred; useful for reports in
// the paper's own coordinates.
AlgebraPtr matrix_algebra_raw(int n, Mode mode);

// x(a) x(b) = alpha(a,b) x(ab).
AlgebraPtr group_algebra(const GroupTable& g, const Cocycle& c, Mode mode);
AlgebraPtr group_algebra(const GroupTable& g, Mode mode); // trivial cocycle

// n anticommuting generators, basis = ordered subsets, theta_i^2 = 0.
AlgebraPtr grassmann(int n, Mode mode);

// Plain (ungraded) tensor product.
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);

// Element of matrix_algebra(n) with prescribed e^(nm) coefficients
// (row-major n x n grid), mapped through the rebase.
Element matrix_element(const AlgebraPtr& mat_alg, const std::vector<Vec>& entries);

} // namespace algint

#endif
