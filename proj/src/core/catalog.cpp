#include "catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace algint {

GroupTable GroupTable::from_table(std::vector<std::string> names,
                                  std::vector<std::vector<int>> mul) {
  GroupTable g;
  g.names = std::move(names);
  g.mul = std::move(mul);
  const int n = g.order();
  if (n <= 0) raise(errc::invalid_argument, "empty group");
  if (static_cast<int>(g.mul.size()) != n)
    raise(errc::invalid_argument, "group table has wrong row count");
  for (const auto& row : g.mul) {
    if (static_cast<int>(row.size()) != n)
      raise(errc::invalid_argument, "group table has a short row");
    for (int v : row)
      if (v < 0 || v >= n)
        raise(errc::invalid_argument, "group table entry out of range");
  }
  // Identity.
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = g.mul[e][a] == a && g.mul[a][e] == a;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) raise(errc::check_failed, "group table has no identity");
  // Associativity, exhaustively.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          raise(errc::check_failed,
                "group table is not associative at (" + g.names[a] + ", " +
                    g.names[b] + ", " + g.names[c] + ")");
  // Inverses.
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) {
        g.inverse[a] = b;
        break;
      }
    if (g.inverse[a] < 0)
      raise(errc::check_failed, "group element '" + g.names[a] + "' has no inverse");
  }
  return g;
}

GroupTable cyclic_group(int n) {
  if (n < 1) raise(errc::invalid_argument, "cyclic group order must be >= 1");
  std::vector<std::string> names;
  names.push_back("e");
  if (n > 1) names.push_back("g");
  for (int i = 2; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return GroupTable::from_table(std::move(names), std::move(mul));
}

GroupTable symmetric3() {
  // Elements as permutations of {0,1,2}: e, r = (012), r2, s = (01),
  // sr = s*r, sr2 = s*r2; composition acts right-to-left.
  const int perms[6][3] = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0},
  };
  std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "sr2"};
  auto compose = [&](int a, int b) {
    int out[3];
    for (int i = 0; i < 3; ++i) out[i] = perms[a][perms[b][i]];
    for (int c = 0; c < 6; ++c)
      if (out[0] == perms[c][0] && out[1] == perms[c][1] && out[2] == perms[c][2])
        return c;
    return -1;
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) mul[a][b] = compose(a, b);
  return GroupTable::from_table(std::move(names), std::move(mul));
}

GroupTable klein4() {
  std::vector<std::string> names = {"e", "x", "z", "y"};
  // Bit-pair addition: e=00, x=10, z=01, y=11.
  auto code = [](int i) { return std::array<int, 2>{i == 1 || i == 3, i == 2 || i == 3}; };
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto ca = code(a), cb = code(b);
      int bx = ca[0] ^ cb[0], bz = ca[1] ^ cb[1];
      mul[a][b] = bx && bz ? 3 : bx ? 1 : bz ? 2 : 0;
    }
  return GroupTable::from_table(std::move(names), std::move(mul));
}

Cocycle Cocycle::trivial(const GroupTable& g, Mode mode) {
  const int n = g.order();
  Matrix p(n, n, mode);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.at(a, b) = Scalar::one(mode);
  return Cocycle{std::move(p)};
}

Cocycle Cocycle::from_phases(const GroupTable& g, Matrix phases) {
  const int n = g.order();
  if (phases.rows() != n || phases.cols() != n)
    raise(errc::invalid_argument, "cocycle table has wrong shape");
  const Mode mode = phases.mode();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Scalar& v = phases.at(a, b);
      bool unit = mode == Mode::exact
                      ? v.abs2_exact() == 1
                      : std::abs(v.abs2_double() - 1.0) <= epsilon();
      if (!unit)
        raise(errc::invalid_cocycle, "cocycle phase at (" + g.names[a] + ", " +
                                         g.names[b] + ") is not unit modulus");
    }
  for (int a = 0; a < n; ++a) {
    if (!phases.at(g.identity, a).is_one() || !phases.at(a, g.identity).is_one())
      raise(errc::invalid_cocycle,
            "cocycle is not normalized at the identity with '" + g.names[a] + "'");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Scalar lhs = phases.at(a, b) * phases.at(g.mul[a][b], c);
        Scalar rhs = phases.at(b, c) * phases.at(a, g.mul[b][c]);
        if (!lhs.equals(rhs))
          raise(errc::invalid_cocycle,
                "cocycle condition fails at (" + g.names[a] + ", " + g.names[b] +
                    ", " + g.names[c] + ")");
      }
  return Cocycle{std::move(phases)};
}

Cocycle pauli_cocycle(const GroupTable& k4, Mode mode) {
  if (k4.order() != 4)
    raise(errc::invalid_argument, "pauli cocycle needs the Klein four-group");
  // Realisation x -> X, z -> Z, y -> Y = iXZ; phases read off the
  // actual 2x2 products, e.g. X Z = -i Y, Z X = i Y, Y Y = 1.
  auto idx = [&](const std::string& n) {
    for (int i = 0; i < 4; ++i)
      if (k4.names[i] == n) return i;
    raise(errc::invalid_argument, "pauli cocycle needs elements named e,x,z,y");
  };
  int e = idx("e"), x = idx("x"), z = idx("z"), y = idx("y");

  Matrix p(4, 4, mode);
  auto one = Scalar::one(mode), i_unit = Scalar::imaginary_unit(mode);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) p.at(a, b) = one;
  p.at(x, z) = -i_unit; // XZ = -iY
  p.at(z, x) = i_unit;  // ZX = iY
  p.at(x, y) = i_unit;  // XY = iZ
  p.at(y, x) = -i_unit; // YX = -iZ
  p.at(z, y) = -i_unit; // ZY = -iX
  p.at(y, z) = i_unit;  // YZ = iX
  (void)e;
  return Cocycle::from_phases(k4, std::move(p));
}

Cocycle root_of_unity_cocycle(const GroupTable& cyclic, int n) {
  if (cyclic.order() != n)
    raise(errc::invalid_argument, "cocycle order does not match the group");
  Matrix p(n, n, Mode::approx);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double ang = 2.0 * std::numbers::pi * ((a * b) % n) / n;
      p.at(a, b) = Scalar::approx(std::cos(ang), std::sin(ang));
    }
  return Cocycle::from_phases(cyclic, std::move(p));
}

AlgebraPtr paragrassmann(int p, Mode mode) {
  if (p < 1) raise(errc::invalid_argument, "paragrassmann order must be >= 1");
  const int d = p + 1;
  std::vector<std::string> labels;
  labels.push_back("1");
  labels.push_back("theta");
  for (int i = 2; i <= p; ++i) labels.push_back("theta^" + std::to_string(i));
  std::vector<FEntry> entries;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i + j <= p) entries.push_back({i, j, i + j, Scalar::one(mode)});
  return Algebra::create("paragrassmann" + std::to_string(p), std::move(labels),
                         StructureConstants(d, mode, entries), 0, mode);
}

namespace {

std::string matrix_label(int n, int row, int col) {
  if (n <= 9) return "e" + std::to_string(row) + std::to_string(col);
  return "e" + std::to_string(row) + "_" + std::to_string(col);
}

struct MatrixBasis {
  int n;
  int index(int row, int col) const { return (row - 1) * n + (col - 1); }
};

} // namespace

AlgebraPtr matrix_algebra_raw(int n, Mode mode) {
  if (n < 1) raise(errc::invalid_argument, "matrix algebra size must be >= 1");
  const int d = n * n;
  MatrixBasis mb{n};
  std::vector<std::string> labels;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) labels.push_back(matrix_label(n, r, c));
  std::vector<FEntry> entries;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      for (int q = 1; q <= n; ++q)
        entries.push_back(
            {mb.index(r, c), mb.index(c, q), mb.index(r, q), Scalar::one(mode)});
  return Algebra::create("matrix" + std::to_string(n), std::move(labels),
                         StructureConstants(d, mode, entries), 0, mode,
                         /*defer_checks=*/true);
}

AlgebraPtr matrix_algebra(int n, Mode mode) {
  if (n < 1) raise(errc::invalid_argument, "matrix algebra size must be >= 1");
  if (n == 1) {
    // e11 is already the identity.
    std::vector<FEntry> entries{{0, 0, 0, Scalar::one(mode)}};
    return Algebra::create("matrix1", {"e11"}, StructureConstants(1, mode, entries),
                           0, mode);
  }
  const int d = n * n;
  MatrixBasis mb{n};
  AlgebraPtr raw = matrix_algebra_raw(n, mode);
  Vec identity = zero_vec(d, mode);
  for (int r = 1; r <= n; ++r) identity[mb.index(r, r)] = Scalar::one(mode);
  std::vector<std::string> labels = raw->labels();
  std::vector<FEntry> entries;
  for (const auto& e : raw->f().entries()) entries.push_back(e);
  return Algebra::create_with_identity_element(
      "matrix" + std::to_string(n), std::move(labels),
      StructureConstants(d, mode, entries), identity, mode);
}

AlgebraPtr group_algebra(const GroupTable& g, const Cocycle& c, Mode mode) {
  const int n = g.order();
  if (c.phases.rows() != n)
    raise(errc::invalid_argument, "cocycle does not match the group order");
  if (c.phases.mode() != mode)
    raise(errc::mode_mismatch, "cocycle phases in the wrong mode");
  std::vector<std::string> labels;
  for (const auto& nm : g.names) labels.push_back("x(" + nm + ")");
  std::vector<FEntry> entries;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      entries.push_back({a, b, g.mul[a][b], c.phases.at(a, b)});
  return Algebra::create("group", std::move(labels),
                         StructureConstants(n, mode, entries), g.identity, mode);
}

AlgebraPtr group_algebra(const GroupTable& g, Mode mode) {
  return group_algebra(g, Cocycle::trivial(g, mode), mode);
}

AlgebraPtr grassmann(int n, Mode mode) {
  if (n < 1) raise(errc::invalid_argument, "grassmann rank must be >= 1");
  if (n > 16) raise(errc::invalid_argument, "grassmann rank too large");
  const int d = 1 << n;

  auto label_of = [&](unsigned mask) -> std::string {
    if (mask == 0) return "1";
    std::string s = "theta";
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s += std::to_string(i + 1);
    return s;
  };

  // Sign of merging two disjoint increasing monomials: count the
  // transpositions needed to interleave them.
  auto merge_sign = [&](unsigned a, unsigned b) -> int {
    int sign = 1;
    for (int i = 0; i < n; ++i) {
      if (!(b & (1u << i))) continue;
      unsigned higher = a >> (i + 1);
      int swaps = 0;
      for (int j = i + 1; j < n; ++j)
        if (higher & (1u << (j - i - 1))) ++swaps;
      if (swaps % 2) sign = -sign;
    }
    return sign;
  };

  std::vector<std::string> labels;
  for (unsigned mask = 0; mask < static_cast<unsigned>(d); ++mask)
    labels.push_back(label_of(mask));
  std::vector<FEntry> entries;
  for (unsigned a = 0; a < static_cast<unsigned>(d); ++a)
    for (unsigned b = 0; b < static_cast<unsigned>(d); ++b) {
      if (a & b) continue; // repeated generator: zero
      int s = merge_sign(a, b);
      entries.push_back({static_cast<int>(a), static_cast<int>(b),
                         static_cast<int>(a | b),
                         s > 0 ? Scalar::one(mode) : -Scalar::one(mode)});
    }
  return Algebra::create("grassmann" + std::to_string(n), std::move(labels),
                         StructureConstants(d, mode, entries), 0, mode);
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a || !b) raise(errc::invalid_argument, "null algebra");
  if (a->mode() != b->mode())
    raise(errc::mode_mismatch, "tensor product across scalar modes");
  const int da = a->dim(), db = b->dim();
  const int d = da * db;
  std::vector<std::string> labels;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) labels.push_back(a->label(i) + "." + b->label(j));
  std::vector<FEntry> entries;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (const auto& [k, va] : a->f().product_row(i, j))
        for (int p = 0; p < db; ++p)
          for (int q = 0; q < db; ++q)
            for (const auto& [r, vb] : b->f().product_row(p, q))
              entries.push_back(
                  {i * db + p, j * db + q, k * db + r, va * vb});
  int id = a->identity_index() * db + b->identity_index();
  return Algebra::create(a->name() + "_x_" + b->name(), std::move(labels),
                         StructureConstants(d, a->mode(), entries), id, a->mode());
}

Element matrix_element(const AlgebraPtr& mat_alg, const std::vector<Vec>& entries) {
  if (!mat_alg) raise(errc::invalid_argument, "null algebra");
  int n = 0;
  while ((n + 1) * (n + 1) <= mat_alg->dim()) ++n;
  if (n * n != mat_alg->dim())
    raise(errc::invalid_argument, "not a matrix algebra dimension");
  if (static_cast<int>(entries.size()) != n)
    raise(errc::invalid_argument, "matrix entry grid has wrong shape");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n)
      raise(errc::invalid_argument, "matrix entry grid has wrong shape");

  MatrixBasis mb{n};
  Vec raw = zero_vec(n * n, mat_alg->mode());
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) raw[mb.index(r, c)] = entries[r - 1][c - 1];
  if (const RebaseInfo* rb = mat_alg->rebase()) return Element(mat_alg, rb->basis_change_inv * raw);
  return Element(mat_alg, std::move(raw));
}

} // namespace algint
