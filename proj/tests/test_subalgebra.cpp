#include "doctest.h"

#include <random>

#include "core/subalgebra.hppp"

using namespace algint;

namespace {

Scalar q(long n, long d = 1) {
  mpq_class v(n, d);
  v.canonicalize();
  return Scalar::exact_rational(v);
}

int idx(const AlgebraPtr& a, const std::string& label) {
  auto i = a->index_of_label(label);
  REQUIRE(i.has_value());
  return *i;
}

// theta -> sigma_+ = e12, 1 -> 1_2.
SubalgebraEmbedding grassmann_in_m2(const AlgebraPtr& m2, const AlgebraPtr& g1) {
  Matrix map(4, 2, Mode::exact);
  map.at(m2->identity_index(), 0) = q(1);
  map.at(idx(m2, "e12"), 1) = q(1);
  return build_embedding(m2, g1, map);
}

} // namespace

TEST_CASE("the Grassmann-in-M2 embedding validates") {
  auto m2 = matrix_algebra(2, Mode::exact);
  auto g1 = paragrassmann(1, Mode::exact);
  SubalgebraEmbedding e = grassmann_in_m2(m2, g1);
  CHECK(e.complement.size() == 2);
  // greedy complement: the first standard vectors extending {I, e12}
  CHECK(e.complement[0][idx(m2, "e21")].is_one());
  CHECK(e.complement[1][idx(m2, "e22")].is_one());
}

TEST_CASE("the projector for Grassmann-in-M2 is sigma_-") {
  auto m2 = matrix_algebra(2, Mode::exact);
  auto g1 = paragrassmann(1, Mode::exact);
  SubalgebraEmbedding e = grassmann_in_m2(m2, g1);
  auto f_big = integration_functional(m2);
  auto f_small = integration_functional(g1);
  Element p = projector(e, f_big, f_small);
  for (int i = 0; i < 4; ++i) {
    if (i == idx(m2, "e21"))
      CHECK(p.coeff(i).is_one());
    else
      CHECK(p.coeff(i).is_zero());
  }
}

TEST_CASE("Berezin integrals through traces over 2x2 matrices") {
  auto m2 = matrix_algebra(2, Mode::exact);
  auto g1 = paragrassmann(1, Mode::exact);
  SubalgebraEmbedding e = grassmann_in_m2(m2, g1);
  auto f_big = integration_functional(m2);
  auto f_small = integration_functional(g1);
  Element p = projector(e, f_big, f_small);

  // integral of 1 = Tr[sigma_-] = 0
  CHECK(integrate_via_projector(e, f_big, p, Element::identity(g1)).is_zero());
  // integral of theta = Tr[sigma_+ sigma_-] = 1, matching the Berezin
  // value of 1 (a printed 0 elsewhere notwithstanding)
  CHECK(integrate_via_projector(e, f_big, p, Element::basis(g1, 1)).is_one());

  // the defining contract on random elements of B
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  for (int t = 0; t < 8; ++t) {
    Vec v = {q(num(rng), den(rng)), q(num(rng), den(rng))};
    Element b(g1, v);
    CHECK(integrate_via_projector(e, f_big, p, b).equals(integrate(f_small, b)));
  }

  // complement directions integrate to zero against P
  for (const auto& c : e.complement) {
    Element ce(m2, c);
    CHECK(integrate(f_big, multiply(ce, p)).is_zero());
  }
}

TEST_CASE("identity embedding has an empty complement and P = identity") {
  for (const auto& alg :
       {matrix_algebra(2, Mode::exact), paragrassmann(2, Mode::exact)}) {
    Matrix id = Matrix::identity(alg->dim(), Mode::exact);
    SubalgebraEmbedding e = build_embedding(alg, alg, id);
    CHECK(e.complement.empty());
    auto f = integration_functional(alg);
    Element p = projector(e, f, f);
    CHECK(elements_equal(p, Element::identity(alg)));
  }
}

TEST_CASE("paragrassmann 1 embeds in paragrassmann 3 via theta -> theta^2") {
  auto g1 = paragrassmann(1, Mode::exact);
  auto g3 = paragrassmann(3, Mode::exact);
  Matrix map(4, 2, Mode::exact);
  map.at(0, 0) = q(1); // 1 -> 1
  map.at(2, 1) = q(1); // theta -> theta^2
  SubalgebraEmbedding e = build_embedding(g3, g1, map);
  REQUIRE(e.complement.size() == 2);
  CHECK(e.complement[0][1].is_one()); // theta
  CHECK(e.complement[1][3].is_one()); // theta^3

  auto f_big = integration_functional(g3);
  auto f_small = integration_functional(g1);
  Element p = projector(e, f_big, f_small);
  // targets t = (0,0,1,0), C = antidiagonal: P = theta
  CHECK(p.coeff(1).is_one());
  CHECK(p.coeff(0).is_zero());
  CHECK(p.coeff(2).is_zero());
  CHECK(p.coeff(3).is_zero());
  CHECK(integrate_via_projector(e, f_big, p, Element::basis(g1, 1)).is_one());
  CHECK(integrate_via_projector(e, f_big, p, Element::identity(g1)).is_zero());
}

TEST_CASE("embedding rejections: injectivity, multiplicativity, identity") {
  auto g1 = paragrassmann(1, Mode::exact);
  auto g3 = paragrassmann(3, Mode::exact);

  // not injective: theta -> 0
  Matrix zero_map(4, 2, Mode::exact);
  zero_map.at(0, 0) = q(1);
  CHECK_THROWS_WITH_AS(build_embedding(g3, g1, zero_map),
                       doctest::Contains("injective"), error);

  // not multiplicative: theta -> theta (theta^2 = 0 fails in G_3)
  Matrix bad(4, 2, Mode::exact);
  bad.at(0, 0) = q(1);
  bad.at(1, 1) = q(1);
  CHECK_THROWS_WITH_AS(build_embedding(g3, g1, bad),
                       doctest::Contains("multiplicative"), error);

  // identity goes elsewhere: 1 -> theta^2, theta -> theta^3
  Matrix noid(4, 2, Mode::exact);
  noid.at(2, 0) = q(1);
  noid.at(3, 1) = q(1);
  CHECK_THROWS_AS(build_embedding(g3, g1, noid), error);
}

TEST_CASE("the projector system matrix is the gram matrix, hence unique") {
  auto m2 = matrix_algebra(2, Mode::exact);
  auto g1 = paragrassmann(1, Mode::exact);
  SubalgebraEmbedding e = grassmann_in_m2(m2, g1);
  auto f_big = integration_functional(m2);
  auto f_small = integration_functional(g1);

  // coefficient matrix A_ij = mu(x_i x_j) equals gram_matrix(F_big)
  Matrix g = gram_matrix(f_big);
  const int d = m2->dim();
  Matrix a(d, d, Mode::exact);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Element xi = Element::basis(m2, i), xj = Element::basis(m2, j);
      a.at(i, j) = integrate(f_big, multiply(xi, xj));
    }
  CHECK(a.equals(g));
  CHECK(rank(a) == d); // invertible: the system is uniquely solvable

  // and solving the system directly reproduces P
  Element p = projector(e, f_big, f_small);
  Vec t = zero_vec(d, Mode::exact);
  t[idx(m2, "e12")] = q(1); // integral_B of the B-part of each x_i
  auto sol = solve(a, t);
  REQUIRE(sol.kind == SolveResult::Kind::unique);
  CHECK(vec_equal(sol.x, p.coeffs()));
}

TEST_CASE("P depends only on the complement's span, not its basis") {
  auto m2 = matrix_algebra(2, Mode::exact);
  auto g1 = paragrassmann(1, Mode::exact);
  SubalgebraEmbedding e = grassmann_in_m2(m2, g1);
  auto f_big = integration_functional(m2);
  auto f_small = integration_functional(g1);
  Element p0 = projector(e, f_big, f_small);

  // same complement space, different basis: {e21 + e22, e22}
  SubalgebraEmbedding e2 = e;
  Vec c0 = zero_vec(4, Mode::exact), c1 = zero_vec(4, Mode::exact);
  c0[idx(m2, "e21")] = q(1);
  c0[idx(m2, "e22")] = q(1);
  c1[idx(m2, "e22")] = q(1);
  e2.complement = {c0, c1};
  Element p2 = projector(e2, f_big, f_small);
  CHECK(elements_equal(p0, p2));

  // a genuinely different complement space changes the targets off B,
  // so P may change, but the defining contract on B is intact
  SubalgebraEmbedding e3 = e;
  Vec d0 = zero_vec(4, Mode::exact), d1 = zero_vec(4, Mode::exact);
  d0[idx(m2, "e21")] = q(1);
  d1[idx(m2, "e22")] = q(1);
  d1[idx(m2, "e12")] = q(1); // tilt the complement into the image direction
  e3.complement = {d0, d1};
  Element p3 = projector(e3, f_big, f_small);
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> num(-6, 6);
  for (int t = 0; t < 5; ++t) {
    Vec v = {q(num(rng)), q(num(rng))};
    Element b(g1, v);
    CHECK(integrate_via_projector(e3, f_big, p3, b).equals(integrate(f_small, b)));
  }
}
