#ifndef ALGINT_CORE_INTEGRATION_HPP
#define ALGINT_CORE_INTEGRATION_HPP

#include "intertwiner.hpp"

namespace algint {

// The linear functional mu_i = (C^-1)_{i, identity slot}, bound to the
// intertwiner that produced it. The completeness relation
// sum_jl C_ij f_jkl mu_l = delta_ik is re-verified at construction.
struct IntegrationFunctional {
  AlgebraPtr algebra;
  Vec mu;
  Intertwiner source;
};

IntegrationFunctional integration_functional(const AlgebraPtr& a,
                                             const Intertwiner& c);

// Convenience: canonical intertwiner first, then the functional.
IntegrationFunctional integration_functional(const AlgebraPtr& a,
                                             std::uint64_t seed = 0);

Scalar integrate(const IntegrationFunctional& f, const Element& e);

// G_jk = sum_l f_jkl mu_l; asserts C*G = G*C = 1 before returning.
Matrix gram_matrix(const IntegrationFunctional& f);

} // namespace algint

#endif
