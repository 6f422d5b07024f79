#ifndef ALGINT_CORE_DERIVATION_HPP
#define ALGINT_CORE_DERIVATION_HPP

#include "integration.hpp"

namespace algint {

// A linear map on coefficient vectors satisfying the Leibniz rule
// D(ab) = (Da)b + a(Db).
struct DerivationMap {
  AlgebraPtr algebra;
  Matrix D;
};

// Leibniz rule on all basis pairs.
bool is_derivation(const Algebra& a, const Matrix& d);

// D_a: x |-> x*a - a*x.
DerivationMap inner_derivation(const AlgebraPtr& alg, const Element& a);

// mu^T * D = 0: the functional vanishes on the image of D.
bool annihilates_integral(const IntegrationFunctional& f, const DerivationMap& d);

// mu^T * exp(alpha D) = mu^T. Exact mode requires nilpotent D (the
// series terminates); approx mode uses scaling-and-squaring.
bool invariance_under_flow(const IntegrationFunctional& f, const DerivationMap& d,
                           const Scalar& alpha);

} // namespace algint

#endif
