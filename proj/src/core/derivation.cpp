#include "derivation.hpp"

namespace algint {

bool is_derivation(const Algebra& a, const Matrix& d) {
  const int n = a.dim();
  if (d.rows() != n || d.cols() != n)
    raise(errc::invalid_argument, "derivation matrix has wrong shape");
  if (d.mode() != a.mode())
    raise(errc::mode_mismatch, "derivation matrix mode mismatch");

  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(n, a.mode());
    ei[i] = Scalar::one(a.mode());
    Vec di = d.column(i);
    for (int j = 0; j < n; ++j) {
      Vec ej = zero_vec(n, a.mode());
      ej[j] = Scalar::one(a.mode());
      Vec dj = d.column(j);
      // D(x_i x_j) vs (D x_i) x_j + x_i (D x_j)
      Vec lhs = d * a.multiply_coeffs(ei, ej);
      Vec rhs = a.multiply_coeffs(di, ej);
      Vec rhs2 = a.multiply_coeffs(ei, dj);
      for (int k = 0; k < n; ++k) rhs[k] += rhs2[k];
      if (!vec_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

DerivationMap inner_derivation(const AlgebraPtr& alg, const Element& a) {
  if (!alg) raise(errc::invalid_argument, "null algebra");
  if (a.algebra() != alg)
    raise(errc::algebra_mismatch, "element over a different algebra");

  const int n = alg->dim();
  Matrix d(n, n, alg->mode());
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(n, alg->mode());
    ei[i] = Scalar::one(alg->mode());
    Vec right = alg->multiply_coeffs(ei, a.coeffs()); // x_i * a
    Vec left = alg->multiply_coeffs(a.coeffs(), ei);  // a * x_i
    for (int k = 0; k < n; ++k) d.at(k, i) = right[k] - left[k];
  }
  return DerivationMap{alg, std::move(d)};
}

bool annihilates_integral(const IntegrationFunctional& f, const DerivationMap& d) {
  if (d.algebra != f.algebra)
    raise(errc::algebra_mismatch, "derivation over a different algebra");
  const int n = f.algebra->dim();
  for (int j = 0; j < n; ++j) {
    Scalar acc = Scalar::zero(f.algebra->mode());
    for (int i = 0; i < n; ++i) acc += f.mu[i] * d.D.at(i, j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool invariance_under_flow(const IntegrationFunctional& f, const DerivationMap& d,
                           const Scalar& alpha) {
  if (d.algebra != f.algebra)
    raise(errc::algebra_mismatch, "derivation over a different algebra");
  if (alpha.mode() != f.algebra->mode())
    raise(errc::mode_mismatch, "flow parameter mode mismatch");

  Matrix e = f.algebra->mode() == Mode::exact ? exp_nilpotent(d.D, alpha)
                                              : exp_approx(d.D, alpha);
  const int n = f.algebra->dim();
  double tol = epsilon();
  for (int j = 0; j < n; ++j) {
    Scalar acc = Scalar::zero(f.algebra->mode());
    for (int i = 0; i < n; ++i) acc += f.mu[i] * e.at(i, j);
    if (f.algebra->mode() == Mode::exact) {
      if (!acc.equals(f.mu[j])) return false;
    } else {
      if (!acc.equals(f.mu[j], tol * (1.0 + f.mu[j].magnitude()))) return false;
    }
  }
  return true;
}

} // namespace algint
