#include "doctest.h"

#include <random>

#include "core/catalog.hpp"

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

Element rand_element(const AlgebraPtr& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  Vec v = zero_vec(a->dim(), a->mode());
  for (auto& c : v) c = q(num(rng), den(rng));
  return Element(a, std::move(v));
}

// paragrassmann(2) with one perturbed structure constant:
// theta * theta^2 = 1 instead of 0.
AlgebraPtr perturbed_pg2() {
  auto pg = paragrassmann(2, Mode::exact);
  std::vector<FEntry> entries = pg->f().entries();
  entries.push_back({1, 2, 0, Scalar::one(Mode::exact)});
  return Algebra::create("broken", pg->labels(),
                         StructureConstants(3, Mode::exact, entries), 0,
                         Mode::exact, /*defer_checks=*/true);
}

} // namespace

TEST_CASE("multiply: paragrassmann nilpotency") {
  auto pg = paragrassmann(2, Mode::exact);
  Element theta = Element::basis(pg, 1);
  Element theta2 = multiply(theta, theta);
  CHECK(theta2.coeff(2).is_one());
  CHECK(theta2.coeff(0).is_zero());
  CHECK(multiply(theta2, theta).is_zero()); // theta^3 = 0
}

TEST_CASE("multiply: identity element acts trivially") {
  std::mt19937_64 rng(3);
  for (const auto& a : {paragrassmann(3, Mode::exact),
                        group_algebra(symmetric3(), Mode::exact)}) {
    Element id = Element::identity(a);
    Element x = rand_element(a, rng);
    CHECK(elements_equal(multiply(id, x), x));
    CHECK(elements_equal(multiply(x, id), x));
  }
}

TEST_CASE("multiply: matrix units compose as e^(nm) e^(pq) = d_mp e^(nq)") {
  auto m2 = matrix_algebra(2, Mode::exact);
  Element e12 = Element::basis(m2, idx(m2, "e12"));
  Element e21 = Element::basis(m2, idx(m2, "e21"));
  // e12 e21 = e11 = I - e22
  Element prod = multiply(e12, e21);
  CHECK(prod.coeff(idx(m2, "I")).equals(q(1)));
  CHECK(prod.coeff(idx(m2, "e22")).equals(q(-1)));
  CHECK(prod.coeff(idx(m2, "e12")).is_zero());
  CHECK(multiply(e12, e12).is_zero());
  // the displaced label stays addressable
  REQUIRE(m2->named_elements().count("e11") == 1);
  Element e11(m2, m2->named_elements().at("e11"));
  CHECK(elements_equal(prod, e11));
}

TEST_CASE("multiply is bilinear on random elements") {
  std::mt19937_64 rng(17);
  for (const auto& alg : {paragrassmann(3, Mode::exact), matrix_algebra(2, Mode::exact)}) {
    for (int t = 0; t < 5; ++t) {
      Element a = rand_element(alg, rng), b = rand_element(alg, rng),
              c = rand_element(alg, rng);
      Scalar alpha = q(3, 2);
      Element lhs = multiply(add(scale(alpha, a), b), c);
      Element rhs = add(scale(alpha, multiply(a, c)), multiply(b, c));
      CHECK(elements_equal(lhs, rhs));
      // right-linearity too
      lhs = multiply(c, add(scale(alpha, a), b));
      rhs = add(scale(alpha, multiply(c, a)), multiply(c, b));
      CHECK(elements_equal(lhs, rhs));
    }
  }
}

TEST_CASE("multiply is associative on random triples") {
  std::mt19937_64 rng(19);
  for (const auto& alg :
       {paragrassmann(2, Mode::exact), matrix_algebra(2, Mode::exact),
        group_algebra(symmetric3(), Mode::exact), grassmann(2, Mode::exact)}) {
    REQUIRE(alg->check_associativity().all_ok());
    for (int t = 0; t < 4; ++t) {
      Element a = rand_element(alg, rng), b = rand_element(alg, rng),
              c = rand_element(alg, rng);
      CHECK(elements_equal(multiply(multiply(a, b), c), multiply(a, multiply(b, c))));
    }
  }
}

TEST_CASE("right_rep: identity slot gives the identity matrix") {
  auto pg = paragrassmann(2, Mode::exact);
  CHECK(pg->right_rep(0).is_identity());
  CHECK(pg->left_rep(0).is_identity());
}

TEST_CASE("regular representations of the Grassmann generator") {
  auto pg = paragrassmann(1, Mode::exact);
  Matrix r = pg->right_rep(1);
  // (R_theta)_{jk} = f_{j,theta,k}: upper shift
  CHECK(r.at(0, 1).is_one());
  CHECK(r.at(0, 0).is_zero());
  CHECK(r.at(1, 0).is_zero());
  CHECK(r.at(1, 1).is_zero());
  // (L_i)_{jk} = f_{ikj} makes L_theta the transpose of R_theta here
  Matrix l = pg->left_rep(1);
  CHECK(l.equals(r.transpose()));
}

TEST_CASE("reps reproduce multiplication as row/column actions") {
  std::mt19937_64 rng(23);
  for (const auto& alg : {paragrassmann(3, Mode::exact), matrix_algebra(2, Mode::exact)}) {
    Element a = rand_element(alg, rng);
    for (int i = 0; i < alg->dim(); ++i) {
      Element xi = Element::basis(alg, i);
      // coeffs(a x_i) = R_i^T a  (R_i acting on a as a row vector)
      Vec want = multiply(a, xi).coeffs();
      Vec got = alg->right_rep(i).transpose() * a.coeffs();
      CHECK(vec_equal(want, got));
      // coeffs(x_i a) = L_i a  (column action)
      want = multiply(xi, a).coeffs();
      got = alg->left_rep(i) * a.coeffs();
      CHECK(vec_equal(want, got));
    }
  }
}

TEST_CASE("reps are representations: M_i M_j = f_ijk M_k (matrix algebra)") {
  auto m2 = matrix_algebra(2, Mode::exact);
  const int d = m2->dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix rhs_r(d, d, Mode::exact), rhs_l(d, d, Mode::exact);
      for (const auto& [k, v] : m2->f().product_row(i, j)) {
        rhs_r = rhs_r + m2->right_rep(k).scaled(v);
        rhs_l = rhs_l + m2->left_rep(k).scaled(v);
      }
      CHECK((m2->right_rep(i) * m2->right_rep(j)).equals(rhs_r));
      CHECK((m2->left_rep(i) * m2->left_rep(j)).equals(rhs_l));
    }
}

TEST_CASE("left regular rep of Z_2 swaps the basis") {
  auto z2 = group_algebra(cyclic_group(2), Mode::exact);
  Matrix l = z2->left_rep(1);
  CHECK(l.at(0, 1).is_one());
  CHECK(l.at(1, 0).is_one());
  CHECK(l.at(0, 0).is_zero());
  CHECK(l.at(1, 1).is_zero());
}

TEST_CASE("check_associativity: all three characterizations agree") {
  for (const auto& alg :
       {paragrassmann(2, Mode::exact), matrix_algebra(3, Mode::exact),
        group_algebra(cyclic_group(4), Mode::exact), grassmann(2, Mode::exact)}) {
    auto rep = alg->check_associativity();
    CHECK(rep.left_ok);
    CHECK(rep.right_ok);
    CHECK(rep.commutant_ok);
    CHECK_FALSE(rep.first_failure.has_value());
  }
}

TEST_CASE("check_associativity: a perturbed structure constant fails all three") {
  auto broken = perturbed_pg2();
  auto rep = broken->check_associativity();
  CHECK_FALSE(rep.left_ok);
  CHECK_FALSE(rep.right_ok);
  CHECK_FALSE(rep.commutant_ok);
  REQUIRE(rep.first_failure.has_value());
  // (theta theta) theta = 0 but theta (theta theta) = theta theta^2 = 1
  CHECK((*rep.first_failure)[0] == 1);
  CHECK((*rep.first_failure)[1] == 1);
  CHECK((*rep.first_failure)[2] == 1);
}

TEST_CASE("one-dimensional algebra passes the checks") {
  std::vector<FEntry> entries{{0, 0, 0, Scalar::one(Mode::exact)}};
  auto triv = Algebra::create("unit", {"1"}, StructureConstants(1, Mode::exact, entries),
                              0, Mode::exact);
  CHECK(triv->check_associativity().all_ok());
  CHECK(triv->check_identity());
}

TEST_CASE("check_identity under the basis-index convention") {
  CHECK(paragrassmann(2, Mode::exact)->check_identity());
  CHECK(group_algebra(cyclic_group(3), Mode::exact)->check_identity());
  // raw matrix algebra: the identity is a combination, not a basis vector
  CHECK_FALSE(matrix_algebra_raw(2, Mode::exact)->check_identity());
  // the catalog constructor rebases, restoring the convention
  CHECK(matrix_algebra(2, Mode::exact)->check_identity());
}

TEST_CASE("constructor validates unless checks are deferred") {
  auto pg = paragrassmann(2, Mode::exact);
  std::vector<FEntry> entries = pg->f().entries();
  entries.push_back({1, 2, 0, Scalar::one(Mode::exact)});
  CHECK_THROWS_AS(Algebra::create("bad", pg->labels(),
                                  StructureConstants(3, Mode::exact, entries), 0,
                                  Mode::exact),
                  error);
  CHECK_NOTHROW(Algebra::create("bad", pg->labels(),
                                StructureConstants(3, Mode::exact, entries), 0,
                                Mode::exact, /*defer_checks=*/true));
}

TEST_CASE("rebasing stores the change of basis and keeps it invertible") {
  auto m2 = matrix_algebra(2, Mode::exact);
  const RebaseInfo* rb = m2->rebase();
  REQUIRE(rb != nullptr);
  CHECK((rb->basis_change * rb->basis_change_inv).is_identity());
  CHECK(m2->identity_index() == 0);
  CHECK(m2->label(0) == "I");
  // original algebra kept for reporting
  CHECK(rb->original->label(0) == "e11");
  CHECK(rb->original->dim() == 4);
}

TEST_CASE("duplicate labels are rejected") {
  std::vector<FEntry> entries{{0, 0, 0, Scalar::one(Mode::exact)}};
  CHECK_THROWS_AS(Algebra::create("dup", {"a", "a"},
                                  StructureConstants(2, Mode::exact, entries), 0,
                                  Mode::exact, true),
                  error);
}

TEST_CASE("element constructors validate sizes and algebra identity") {
  auto pg = paragrassmann(2, Mode::exact);
  auto z2 = group_algebra(cyclic_group(2), Mode::exact);
  CHECK_THROWS_AS(Element(pg, zero_vec(2, Mode::exact)), error);
  Element a = Element::basis(pg, 1);
  Element b = Element::basis(z2, 1);
  CHECK_THROWS_AS(multiply(a, b), error);
  CHECK_THROWS_AS(add(a, b), error);
}

TEST_CASE("generating_indices finds a small generating set") {
  auto pg = paragrassmann(4, Mode::exact);
  auto gens = generating_indices(*pg);
  CHECK(gens == std::vector<int>{1}); // theta generates everything

  auto m2 = matrix_algebra(2, Mode::exact);
  auto mg = generating_indices(*m2);
  CHECK(mg.size() <= 2);
  CHECK(!mg.empty());
}
