#include "subalgebra.hpp"

namespace algint {

SubalgebraEmbedding build_embedding(const AlgebraPtr& big, const AlgebraPtr& small,
                                    const Matrix& map) {
  if (!big || !small) raise(errc::invalid_argument, "null algebra");
  if (big->mode() != small->mode())
    raise(errc::mode_mismatch, "embedding across scalar modes");
  const int db = big->dim(), ds = small->dim();
  if (map.rows() != db || map.cols() != ds)
    raise(errc::invalid_argument, "embedding map has wrong shape");
  if (map.mode() != big->mode())
    raise(errc::mode_mismatch, "embedding map mode mismatch");

  if (rank(map) != ds)
    raise(errc::not_injective, "embedding map is not injective");

  // Homomorphism on basis pairs: map(b_i b_j) = map(b_i) map(b_j).
  for (int i = 0; i < ds; ++i) {
    Vec mi = map.column(i);
    for (int j = 0; j < ds; ++j) {
      Vec mj = map.column(j);
      Vec ei = zero_vec(ds, small->mode());
      ei[i] = Scalar::one(small->mode());
      Vec ej = zero_vec(ds, small->mode());
      ej[j] = Scalar::one(small->mode());
      Vec prod_small = small->multiply_coeffs(ei, ej);
      Vec lhs = map * prod_small;
      Vec rhs = big->multiply_coeffs(mi, mj);
      if (!vec_equal(lhs, rhs))
        raise(errc::not_homomorphism,
              "embedding is not multiplicative on (" + small->label(i) + ", " +
                  small->label(j) + ")");
    }
  }
  {
    Vec id_small = zero_vec(ds, small->mode());
    id_small[small->identity_index()] = Scalar::one(small->mode());
    Vec id_big = zero_vec(db, big->mode());
    id_big[big->identity_index()] = Scalar::one(big->mode());
    if (!vec_equal(map * id_small, id_big))
      raise(errc::not_homomorphism,
            "embedding does not send the identity to the identity");
  }

  // Greedy complement: standard basis vectors, in index order, that
  // extend the image to a full basis.
  SubalgebraEmbedding out{big, small, map, {}};
  Matrix ext(db, ds, big->mode());
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < ds; ++j) ext.at(i, j) = map.at(i, j);
  int cur_rank = ds;
  for (int cand = 0; cand < db && cur_rank < db; ++cand) {
    Matrix trial(db, ext.cols() + 1, big->mode());
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < ext.cols(); ++j) trial.at(i, j) = ext.at(i, j);
    trial.at(cand, ext.cols()) = Scalar::one(big->mode());
    if (rank(trial) == cur_rank + 1) {
      ext = std::move(trial);
      ++cur_rank;
      Vec c = zero_vec(db, big->mode());
      c[cand] = Scalar::one(big->mode());
      out.complement.push_back(std::move(c));
    }
  }
  if (cur_rank != db)
    raise(errc::internal, "complement extension failed to reach full rank");
  return out;
}

Decomposition decompose(const SubalgebraEmbedding& e, const Vec& big_coords) {
  const int db = e.big->dim(), ds = e.small->dim();
  const int dc = static_cast<int>(e.complement.size());
  Matrix full(db, ds + dc, e.big->mode());
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < ds; ++j) full.at(i, j) = e.map.at(i, j);
  for (int j = 0; j < dc; ++j)
    for (int i = 0; i < db; ++i) full.at(i, ds + j) = e.complement[j][i];
  SolveResult r = solve(full, big_coords);
  if (r.kind != SolveResult::Kind::unique)
    raise(errc::internal, "direct-sum decomposition was not unique");
  Decomposition d;
  d.small_coords = Vec(r.x.begin(), r.x.begin() + ds);
  d.complement_coords = Vec(r.x.begin() + ds, r.x.end());
  return d;
}

Element projector(const SubalgebraEmbedding& e, const IntegrationFunctional& f_big,
                  const IntegrationFunctional& f_small) {
  if (f_big.algebra != e.big || f_small.algebra != e.small)
    raise(errc::algebra_mismatch,
          "functionals are not bound to the embedding's algebras");
  const int db = e.big->dim();

  // Targets: t_i = integral_small(small part of x_i).
  Vec t = zero_vec(db, e.big->mode());
  for (int i = 0; i < db; ++i) {
    Vec ei = zero_vec(db, e.big->mode());
    ei[i] = Scalar::one(e.big->mode());
    Decomposition dec = decompose(e, ei);
    Scalar acc = Scalar::zero(e.big->mode());
    for (int l = 0; l < e.small->dim(); ++l)
      acc += dec.small_coords[l] * f_small.mu[l];
    t[i] = acc;
  }

  // The system matrix mu(x_i x_j) is the Gram matrix G = C^-1, so the
  // solution is P = C t and is unique.
  Matrix g = gram_matrix(f_big);
  Vec p = f_big.source.C * t;

  // Postcondition: G p = t.
  Vec check = g * p;
  if (!vec_equal(check, t))
    raise(errc::internal, "projector system verification failed");
  return Element(e.big, std::move(p));
}

Scalar integrate_via_projector(const SubalgebraEmbedding& e,
                               const IntegrationFunctional& f_big,
                               const Element& p, const Element& b_small) {
  if (p.algebra() != e.big)
    raise(errc::algebra_mismatch, "projector lives in the wrong algebra");
  if (b_small.algebra() != e.small)
    raise(errc::algebra_mismatch, "element is not in the embedded algebra");
  Vec mapped = e.map * b_small.coeffs();
  Element big_elem(e.big, std::move(mapped));
  return integrate(f_big, multiply(big_elem, p));
}

} // namespace algint
