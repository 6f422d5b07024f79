#include "doctest.h"

#include <random>

#include "core/integration.hpp"
#include "core/catalog.hpp"

using namespace algint;

namespace {

Scalar q(long n, long d = 1) {
  mpq_class v(n, d);
  v.canonicalize();
  return Scalar::exact_rational(v);
}

// Independent oracle: the full stacked dense system over d^2 unknowns,
// rows for every basis index, solved with the dense nullspace kernel.
std::vector<Vec> dense_space_oracle(const Algebra& a) {
  const int d = a.dim();
  Matrix sys(d * d * d, d * d, a.mode());
  int row = 0;
  for (int i = 0; i < d; ++i) {
    Matrix r = a.right_rep(i), l = a.left_rep(i);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        // (C R_i - L_i C)_{jk} = sum_m C_jm (R_i)_mk - (L_i)_jm C_mk
        for (int m = 0; m < d; ++m) {
          sys.at(row, j * d + m) += r.at(m, k);
          sys.at(row, m * d + k) -= l.at(j, m);
        }
        ++row;
      }
  }
  return nullspace(sys);
}

Matrix antidiag(int n) {
  Matrix j(n, n, Mode::exact);
  for (int i = 0; i < n; ++i) j.at(i, n - 1 - i) = q(1);
  return j;
}

// The paper's matrix-algebra intertwiner: C_{(mn)(rs)} = d_ms d_nr,
// i.e. slot (m,n) maps to slot (n,m).
Matrix swap_matrix(int n) {
  Matrix c(n * n, n * n, Mode::exact);
  for (int m = 0; m < n; ++m)
    for (int r = 0; r < n; ++r) c.at(m * n + r, r * n + m) = q(1);
  return c;
}

// Group-algebra inversion: C_{ab} = delta_{ab,e}.
Matrix inversion_matrix(const GroupTable& g) {
  const int n = g.order();
  Matrix c(n, n, Mode::exact);
  for (int a = 0; a < n; ++a) c.at(a, g.inverse[a]) = q(1);
  return c;
}

bool is_intertwiner(const Algebra& a, const Matrix& c) {
  for (int i = 0; i < a.dim(); ++i)
    if (!times_right_rep(a, c, i).equals(left_rep_times(a, i, c))) return false;
  return true;
}

// Membership of m in span(basis).
bool in_span(const std::vector<Matrix>& basis, const Matrix& m) {
  const int d = m.rows();
  Matrix sys(d * d, static_cast<int>(basis.size()), m.mode());
  Vec rhs;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      for (size_t b = 0; b < basis.size(); ++b)
        sys.at(r * d + c, static_cast<int>(b)) = basis[b].at(r, c);
      rhs.push_back(m.at(r, c));
    }
  return solve(sys, rhs).kind != SolveResult::Kind::none;
}

} // namespace

TEST_CASE("intertwiner space of the 2x2 matrix algebra has dimension 4") {
  auto raw = matrix_algebra_raw(2, Mode::exact);
  auto basis = intertwiner_space(*raw);
  auto oracle = dense_space_oracle(*raw);
  CHECK(basis.size() == 4);
  CHECK(oracle.size() == 4);
  for (const auto& b : basis) CHECK(is_intertwiner(*raw, b));

  // the rebased form has the same dimension
  auto m2 = matrix_algebra(2, Mode::exact);
  auto basis2 = intertwiner_space(*m2);
  CHECK(basis2.size() == 4);
  for (const auto& b : basis2) CHECK(is_intertwiner(*m2, b));
}

TEST_CASE("paragrassmann space contains the anti-diagonal C") {
  auto pg = paragrassmann(2, Mode::exact);
  auto basis = intertwiner_space(*pg);
  CHECK(basis.size() == 3); // J, J R, J R^2
  CHECK(in_span(basis, antidiag(3)));
  auto oracle = dense_space_oracle(*pg);
  CHECK(oracle.size() == basis.size());
}

TEST_CASE("one-dimensional algebra: space is all 1x1 matrices") {
  std::vector<FEntry> entries{{0, 0, 0, q(1)}};
  auto triv = Algebra::create("unit", {"1"}, StructureConstants(1, Mode::exact, entries),
                              0, Mode::exact);
  auto basis = intertwiner_space(*triv);
  CHECK(basis.size() == 1);
}

TEST_CASE("canonical C for paragrassmann is the anti-diagonal, canonical=true") {
  for (int p = 1; p <= 4; ++p) {
    auto pg = paragrassmann(p, Mode::exact);
    Intertwiner c = canonical_intertwiner(pg);
    CHECK(c.C.equals(antidiag(p + 1)));
    CHECK(c.canonical);
    CHECK(c.space_dim == p + 1);
    CHECK(c.C.is_symmetric());
    CHECK((c.C * c.C).is_identity());
  }
}

TEST_CASE("canonical C for the raw matrix algebra is the index swap") {
  for (int n : {2, 3}) {
    auto raw = matrix_algebra_raw(n, Mode::exact);
    Intertwiner c = canonical_intertwiner(raw);
    CHECK(c.C.equals(swap_matrix(n)));
    CHECK(c.canonical);
    CHECK(c.space_dim == n * n);
  }
}

TEST_CASE("canonical C transports through the rebase of matrix algebras") {
  auto m2 = matrix_algebra(2, Mode::exact);
  Intertwiner c = canonical_intertwiner(m2);
  REQUIRE(c.original_C.has_value());
  CHECK(c.original_C->equals(swap_matrix(2)));
  CHECK(c.canonical); // assessed on the original form
  CHECK(is_intertwiner(*m2, c.C));
  // transport: C' = S^-1 C S^-T
  const RebaseInfo* rb = m2->rebase();
  Matrix expect = rb->basis_change_inv * swap_matrix(2) *
                  rb->basis_change_inv.transpose();
  CHECK(c.C.equals(expect));
}

TEST_CASE("canonical C for group algebras is the inversion map") {
  for (auto make : {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric3()}) {
    auto ga = group_algebra(make, Mode::exact);
    Intertwiner c = canonical_intertwiner(ga);
    CHECK(c.C.equals(inversion_matrix(make)));
    CHECK(c.canonical);
  }
}

TEST_CASE("canonical C for the Pauli projective group algebra") {
  auto g = klein4();
  auto pa = group_algebra(g, pauli_cocycle(g, Mode::exact), Mode::exact);
  Intertwiner c = canonical_intertwiner(pa);
  CHECK(c.canonical);
  CHECK(c.C.is_symmetric());
  CHECK((c.C * c.C).is_identity());
  // x(a) -> phase * x(a^-1); every Klein element is its own inverse
  CHECK(c.C.is_unit_monomial());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) CHECK(c.C.at(a, b).is_zero());
}

TEST_CASE("intertwiner_from_matrix validates and wraps") {
  auto pg = paragrassmann(2, Mode::exact);
  Intertwiner c = intertwiner_from_matrix(pg, antidiag(3));
  CHECK(c.canonical);
  CHECK(c.space_dim == 3);

  Matrix bad = Matrix::identity(3, Mode::exact); // [J R^m] span excludes I
  CHECK_THROWS_AS(intertwiner_from_matrix(pg, bad), error);

  Matrix singular(3, 3, Mode::exact); // zero matrix intertwines but is singular
  CHECK_THROWS_AS(intertwiner_from_matrix(pg, singular), error);
}

TEST_CASE("upper-triangular 2x2 algebra has no invertible intertwiner") {
  // basis e11, e12, e22; identity = e11 + e22 (rebased by the constructor)
  std::vector<FEntry> entries{
      {0, 0, 0, q(1)}, {0, 1, 1, q(1)}, {1, 2, 1, q(1)}, {2, 2, 2, q(1)}};
  Vec identity = {q(1), q(0), q(1)};
  auto t2 = Algebra::create_with_identity_element(
      "upper2", {"e11", "e12", "e22"}, StructureConstants(3, Mode::exact, entries),
      identity, Mode::exact);
  REQUIRE(t2->check_associativity().all_ok());

  auto basis = intertwiner_space(*t2);
  try {
    canonical_intertwiner(t2);
    FAIL("expected an error");
  } catch (const error& e) {
    if (basis.empty())
      CHECK(e.code() == errc::not_self_conjugated);
    else
      CHECK(e.code() == errc::no_invertible_intertwiner);
  }
}

TEST_CASE("every invertible member of the space satisfies completeness") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (const auto& alg :
       {paragrassmann(2, Mode::exact), matrix_algebra(2, Mode::exact),
        group_algebra(cyclic_group(3), Mode::exact)}) {
    auto basis = intertwiner_space(*alg);
    REQUIRE_FALSE(basis.empty());
    int tried = 0;
    while (tried < 5) {
      Matrix c(alg->dim(), alg->dim(), Mode::exact);
      for (const auto& b : basis) c = c + b.scaled(q(coef(rng)));
      if (rank(c) < alg->dim()) continue;
      ++tried;
      Matrix c_inv = inverse(c);
      Vec mu = c_inv.column(alg->identity_index());
      Matrix g = gram_of_functional(*alg, mu);
      CHECK((c * g).is_identity()); // sum_jl C_ij f_jkl mu_l = delta_ik
      CHECK(g.equals(c_inv));
    }
  }
}
