#include "integration.hpp"

namespace algint {

IntegrationFunctional integration_functional(const AlgebraPtr& a,
                                             const Intertwiner& c) {
  if (!a) raise(errc::invalid_argument, "null algebra");
  if (c.algebra != a)
    raise(errc::algebra_mismatch, "intertwiner bound to a different algebra");
  if (!a->check_identity())
    raise(errc::check_failed,
          "the identity slot does not hold a two-sided identity; "
          "mu_i = (C^-1)_{i0} needs x_0 = I");

  Matrix c_inv = inverse(c.C);
  Vec mu = c_inv.column(a->identity_index());

  // Completeness: C * G(mu) must be the identity. True for every
  // invertible intertwiner by construction; re-checked to catch solver
  // faults early.
  Matrix g = gram_of_functional(*a, mu);
  if (!(c.C * g).is_identity() || !(g * c.C).is_identity())
    raise(errc::completeness_violation,
          "completeness relation failed for the supplied intertwiner");

  return IntegrationFunctional{a, std::move(mu), c};
}

IntegrationFunctional integration_functional(const AlgebraPtr& a,
                                             std::uint64_t seed) {
  return integration_functional(a, canonical_intertwiner(a, seed));
}

Scalar integrate(const IntegrationFunctional& f, const Element& e) {
  if (e.algebra() != f.algebra)
    raise(errc::algebra_mismatch, "element over a different algebra");
  Scalar acc = Scalar::zero(f.algebra->mode());
  for (int i = 0; i < f.algebra->dim(); ++i) acc += e.coeffs()[i] * f.mu[i];
  return acc;
}

Matrix gram_matrix(const IntegrationFunctional& f) {
  Matrix g = gram_of_functional(*f.algebra, f.mu);
  if (!(f.source.C * g).is_identity() || !(g * f.source.C).is_identity())
    raise(errc::completeness_violation, "gram matrix is not the inverse of C");
  return g;
}

} // namespace algint
