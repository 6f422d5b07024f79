#ifndef ALGINT_CORE_SUBALGEBRA_HPP
#define ALGINT_CORE_SUBALGEBRA_HPP

#include "integration.hpp"

namespace algint {

// A unital algebra monomorphism small -> big together with a chosen
// complement, so that big = image(map) (+) span(complement).
struct SubalgebraEmbedding {
  AlgebraPtr big;
  AlgebraPtr small;
  Matrix map;                  // dim(big) x dim(small)
  std::vector<Vec> complement; // standard basis vectors extending the image
};

// Validates injectivity (full column rank) and the homomorphism
// property on all basis pairs plus the identity; the complement is the
// greedy pivot extension by standard basis vectors in index order.
SubalgebraEmbedding build_embedding(const AlgebraPtr& big, const AlgebraPtr& small,
                                    const Matrix& map);

// Decompose a big-algebra coefficient vector into its small-part
// (as small coordinates) and complement-part coefficients.
struct Decomposition {
  Vec small_coords;
  Vec complement_coords;
};
Decomposition decompose(const SubalgebraEmbedding& e, const Vec& big_coords);

// The element P with integral_big(x_i * P) = integral_small(small part
// of x_i) for every basis vector x_i. The linear system's matrix is the
// Gram matrix G = C^-1, so P = C * t is always uniquely determined.
Element projector(const SubalgebraEmbedding& e, const IntegrationFunctional& f_big,
                  const IntegrationFunctional& f_small);

// integral_big(map(b) * P); by construction equals integral_small(b).
Scalar integrate_via_projector(const SubalgebraEmbedding& e,
                               const IntegrationFunctional& f_big,
                               const Element& p, const Element& b_small);

} // namespace algint

#endif
