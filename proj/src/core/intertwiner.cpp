#include "intertwiner.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace algint {

Matrix times_right_rep(const Algebra& a, const Matrix& c, int i) {
  const int d = a.dim();
  Matrix out(d, d, a.mode());
  // (C R_i)_{jk} = sum_m C_{jm} f_{mik}
  for (int m = 0; m < d; ++m)
    for (const auto& [k, v] : a.f().product_row(m, i))
      for (int j = 0; j < d; ++j) {
        const Scalar& cjm = c.at(j, m);
        if (!cjm.is_zero()) out.at(j, k) += cjm * v;
      }
  return out;
}

Matrix left_rep_times(const Algebra& a, int i, const Matrix& c) {
  const int d = a.dim();
  Matrix out(d, d, a.mode());
  // (L_i C)_{jk} = sum_m f_{imj} C_{mk}
  for (int m = 0; m < d; ++m)
    for (const auto& [j, v] : a.f().product_row(i, m))
      for (int k = 0; k < d; ++k) {
        const Scalar& cmk = c.at(m, k);
        if (!cmk.is_zero()) out.at(j, k) += v * cmk;
      }
  return out;
}

Matrix gram_of_functional(const Algebra& a, const Vec& mu) {
  const int d = a.dim();
  if (static_cast<int>(mu.size()) != d)
    raise(errc::invalid_argument, "functional size mismatch");
  Matrix g(d, d, a.mode());
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (const auto& [l, v] : a.f().product_row(j, k))
        if (!mu[l].is_zero()) g.at(j, k) += v * mu[l];
  return g;
}

namespace {

using Term = std::pair<int, Scalar>; // (column, coefficient), sorted by column

// Streaming sparse row-echelon accumulator over a fixed column count.
// Rows are normalized to leading coefficient 1; kernel extraction
// back-substitutes through the echelon rows.
class SparseEchelon {
public:
  SparseEchelon(int ncols, Mode mode) : ncols_(ncols), mode_(mode) {}

  void add_row(std::vector<Term> row) {
    drop_zeros(row);
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        Scalar inv = row.front().second.inverse();
        for (auto& [c, v] : row) v *= inv;
        rows_.emplace(lead, std::move(row));
        return;
      }
      axpy(row, -row.front().second, it->second);
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  std::vector<Vec> kernel() const {
    std::vector<bool> is_pivot(ncols_, false);
    for (const auto& [c, _] : rows_) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < ncols_; ++free) {
      if (is_pivot[free]) continue;
      Vec v = zero_vec(ncols_, mode_);
      v[free] = Scalar::one(mode_);
      for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        Scalar acc = Scalar::zero(mode_);
        for (const auto& [c, val] : it->second)
          if (c != it->first && !v[c].is_zero()) acc += val * v[c];
        v[it->first] = -acc;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

private:
  void drop_zeros(std::vector<Term>& row) const {
    double eps = mode_ == Mode::approx ? epsilon() : 0.0;
    std::erase_if(row, [&](const Term& t) {
      return mode_ == Mode::exact ? t.second.is_zero() : t.second.is_zero(eps);
    });
  }

  // row += factor * other (both sorted sparse rows).
  void axpy(std::vector<Term>& row, const Scalar& factor,
            const std::vector<Term>& other) const {
    std::vector<Term> out;
    out.reserve(row.size() + other.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
      if (j >= other.size() || (i < row.size() && row[i].first < other[j].first)) {
        out.push_back(row[i++]);
      } else if (i >= row.size() || other[j].first < row[i].first) {
        out.emplace_back(other[j].first, factor * other[j].second);
        ++j;
      } else {
        Scalar v = row[i].second + factor * other[j].second;
        out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    drop_zeros(out);
    row = std::move(out);
  }

  int ncols_;
  Mode mode_;
  std::map<int, std::vector<Term>> rows_;
};

// Kernel of C |-> (C R_g - L_g C)_{g in gens} as row-major d*d vectors.
std::vector<Vec> solve_space(const Algebra& a, const std::vector<int>& gens) {
  const int d = a.dim();
  SparseEchelon ech(d * d, a.mode());

  for (int g : gens) {
    // Column-major view of R_g and row-major view of L_g.
    std::vector<std::vector<Term>> r_col(d), l_row(d);
    for (int m = 0; m < d; ++m)
      for (const auto& [k, v] : a.f().product_row(m, g)) r_col[k].emplace_back(m, v);
    for (int m = 0; m < d; ++m)
      for (const auto& [j, v] : a.f().product_row(g, m)) l_row[j].emplace_back(m, v);

    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        std::vector<Term> row;
        for (const auto& [m, v] : r_col[k]) row.emplace_back(j * d + m, v);
        for (const auto& [m, v] : l_row[j]) row.emplace_back(m * d + k, -v);
        std::sort(row.begin(), row.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        // merge duplicate columns
        std::vector<Term> merged;
        for (auto& t : row) {
          if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
          else
            merged.push_back(std::move(t));
        }
        if (!merged.empty()) ech.add_row(std::move(merged));
      }
  }
  return ech.kernel();
}

Matrix unflatten(const Vec& v, int d, Mode mode) {
  Matrix m(d, d, mode);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) m.at(j, k) = v[j * d + k];
  return m;
}

bool is_intertwiner_matrix(const Algebra& a, const Matrix& c) {
  for (int i = 0; i < a.dim(); ++i)
    if (!times_right_rep(a, c, i).equals(left_rep_times(a, i, c))) return false;
  return true;
}

std::vector<Matrix> space_in_own_basis(const Algebra& a) {
  const int d = a.dim();
  std::vector<int> gens = generating_indices(a);
  std::vector<Vec> kernel = solve_space(a, gens);

  std::vector<Matrix> basis;
  basis.reserve(kernel.size());
  bool ok = true;
  for (const auto& v : kernel) {
    Matrix c = unflatten(v, d, a.mode());
    if (ok && !is_intertwiner_matrix(a, c)) ok = false;
    basis.push_back(std::move(c));
  }
  if (!ok) {
    // The generating-set shortcut assumes associativity; fall back to
    // the full constraint set for arbitrary input.
    std::vector<int> all(d);
    for (int i = 0; i < d; ++i) all[i] = i;
    basis.clear();
    for (const auto& v : solve_space(a, all))
      basis.push_back(unflatten(v, d, a.mode()));
  }
  return basis;
}

} // namespace

std::vector<Matrix> intertwiner_space(const Algebra& a) {
  if (const RebaseInfo* rb = a.rebase()) {
    // Solve in the sparser original coordinates and transport:
    // X |-> S^-1 X S^-T maps the original solution space onto the
    // rebased one.
    std::vector<Matrix> orig = space_in_own_basis(*rb->original);
    Matrix sit = rb->basis_change_inv.transpose();
    std::vector<Matrix> out;
    out.reserve(orig.size());
    for (const auto& b : orig) out.push_back(rb->basis_change_inv * b * sit);
    return out;
  }
  return space_in_own_basis(a);
}

namespace {

struct Candidate {
  Matrix c;
  bool unit_monomial = false;
  bool symmetric = false;
  bool involutive = false;

  int rank_class() const {
    if (unit_monomial && symmetric && involutive) return 3;
    if (unit_monomial) return 2;
    if (symmetric && involutive) return 1;
    return 0;
  }
};

// Deterministic entrywise tie-break: the candidate whose first
// differing entry (row-major) is larger wins.
bool better_than(const Candidate& a, const Candidate& b) {
  if (a.rank_class() != b.rank_class()) return a.rank_class() > b.rank_class();
  for (int i = 0; i < a.c.rows(); ++i)
    for (int j = 0; j < a.c.cols(); ++j) {
      int cmp = a.c.at(i, j).compare_for_ordering(b.c.at(i, j));
      if (cmp != 0) return cmp > 0;
    }
  return false;
}

std::optional<Candidate> classify(Matrix c, Mode mode) {
  Candidate cand{std::move(c)};
  cand.unit_monomial = cand.c.is_unit_monomial();
  Matrix sq = cand.c * cand.c;
  const int d = cand.c.rows();

  if (!cand.unit_monomial) {
    // Try to rescale to an involution: C^2 = alpha*1 with sqrt(alpha)
    // in the field.
    Scalar alpha = sq.at(0, 0);
    if (!alpha.is_zero() && sq.equals(Matrix::identity(d, mode).scaled(alpha))) {
      if (!alpha.is_one()) {
        if (auto r = alpha.sqrt_in_field()) {
          cand.c = cand.c.scaled(r->inverse());
          sq = cand.c * cand.c;
        }
      }
    }
    if (!sq.is_identity()) {
      // Scale so the first nonzero entry (row-major) equals 1.
      for (int i = 0; i < d * d; ++i) {
        const Scalar& e = cand.c.at(i / d, i % d);
        if (!e.is_zero()) {
          cand.c = cand.c.scaled(e.inverse());
          break;
        }
      }
      sq = cand.c * cand.c;
    } else {
      // Prefer a positive leading entry among the two involutive signs.
      for (int i = 0; i < d * d; ++i) {
        const Scalar& e = cand.c.at(i / d, i % d);
        if (!e.is_zero()) {
          if (e.compare_for_ordering(Scalar::zero(mode)) < 0)
            cand.c = cand.c.scaled(-Scalar::one(mode));
          break;
        }
      }
      sq = cand.c * cand.c;
    }
  }
  cand.symmetric = cand.c.is_symmetric();
  cand.involutive = sq.is_identity();
  return cand;
}

// Functionals mu whose gram matrix lies inside span(basis): the
// candidate source for canonical intertwiners (C = gram(mu)^-1).
std::vector<Vec> gram_compatible_functionals(const Algebra& a,
                                             const std::vector<Matrix>& basis) {
  const int d = a.dim();
  const int s = static_cast<int>(basis.size());
  Matrix k(d * d, d + s, a.mode());
  for (int l = 0; l < d; ++l) {
    Vec mu = zero_vec(d, a.mode());
    mu[l] = Scalar::one(a.mode());
    Matrix fl = gram_of_functional(a, mu);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) k.at(r * d + c, l) = fl.at(r, c);
  }
  for (int m = 0; m < s; ++m)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) k.at(r * d + c, d + m) = -basis[m].at(r, c);

  std::vector<Vec> w;
  for (const auto& v : nullspace(k)) {
    Vec mu(v.begin(), v.begin() + d);
    if (!vec_is_zero(mu)) w.push_back(std::move(mu));
  }
  return w;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  try {
    return inverse(m);
  } catch (const error& e) {
    if (e.code() == errc::singular) return std::nullopt;
    throw;
  }
}

Scalar random_rational(std::mt19937_64& rng, Mode mode) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  int n = num(rng), d = den(rng);
  if (mode == Mode::exact) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar::exact_rational(q);
  }
  return Scalar::approx(static_cast<double>(n) / d);
}

// Shared enumeration over linear combinations of a vector family:
// each basis member, then every {-1,0,1} combination when the family
// is small, then a seeded random sample.
template <typename Emit>
void enumerate_combinations(int dim, Mode mode, std::uint64_t seed, Emit emit) {
  for (int i = 0; i < dim; ++i) {
    Vec coef = zero_vec(dim, mode);
    coef[i] = Scalar::one(mode);
    if (!emit(coef)) return;
  }
  if (dim <= 6) {
    long total = 1;
    for (int i = 0; i < dim; ++i) total *= 3;
    for (long code = 1; code < total; ++code) {
      long c = code;
      Vec coef = zero_vec(dim, mode);
      for (int i = 0; i < dim; ++i) {
        int digit = static_cast<int>(c % 3);
        c /= 3;
        if (digit == 1) coef[i] = Scalar::one(mode);
        if (digit == 2) coef[i] = -Scalar::one(mode);
      }
      if (!emit(coef)) return;
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 32; ++t) {
    Vec coef(static_cast<size_t>(dim), Scalar::zero(mode));
    for (int i = 0; i < dim; ++i) coef[i] = random_rational(rng, mode);
    if (!emit(coef)) return;
  }
}

// Canonical search in the algebra's own coordinates.
std::pair<Matrix, bool> pick_canonical(const Algebra& a,
                                       const std::vector<Matrix>& basis,
                                       std::uint64_t seed) {
  const int d = a.dim();
  const Mode mode = a.mode();

  std::optional<Candidate> best;
  auto consider = [&](const Matrix& m) {
    auto inv = try_inverse(m);
    if (!inv) return;
    auto cand = classify(std::move(*inv), mode);
    if (cand && (!best || better_than(*cand, *best))) best = std::move(*cand);
  };

  // Gram-side candidates: C = gram(mu)^-1.
  std::vector<Vec> w = gram_compatible_functionals(a, basis);
  if (!w.empty()) {
    const int wd = static_cast<int>(w.size());
    enumerate_combinations(wd, mode, seed, [&](const Vec& coef) {
      Vec mu = zero_vec(d, mode);
      for (int i = 0; i < wd; ++i)
        if (!coef[i].is_zero())
          for (int l = 0; l < d; ++l) mu[l] += coef[i] * w[i][l];
      if (!vec_is_zero(mu)) consider(gram_of_functional(a, mu));
      return true;
    });
  }

  if (!best) {
    // Spec-order fallback directly over the solution space.
    const int s = static_cast<int>(basis.size());
    enumerate_combinations(s, mode, seed + 1, [&](const Vec& coef) {
      Matrix m(d, d, mode);
      for (int i = 0; i < s; ++i)
        if (!coef[i].is_zero()) m = m + basis[i].scaled(coef[i]);
      auto inv = try_inverse(m);
      if (inv) {
        auto cand = classify(m, mode);
        if (cand && (!best || better_than(*cand, *best))) best = std::move(*cand);
      }
      return !best; // stop at the first invertible member here
    });
  }

  if (!best)
    raise(errc::no_invertible_intertwiner,
          "intertwiner space contains no invertible member (bounded search)");
  return {best->c, best->symmetric && best->involutive};
}

} // namespace

Intertwiner canonical_intertwiner(const AlgebraPtr& a, std::uint64_t seed) {
  if (!a) raise(errc::invalid_argument, "null algebra");

  const RebaseInfo* rb = a->rebase();
  const Algebra& solve_on = rb ? *rb->original : *a;

  std::vector<Matrix> basis = space_in_own_basis(solve_on);
  if (basis.empty())
    raise(errc::not_self_conjugated,
          "left and right regular representations are not equivalent");

  auto [c_own, canonical] = pick_canonical(solve_on, basis, seed);

  Intertwiner out;
  out.algebra = a;
  out.canonical = canonical;
  out.space_dim = static_cast<int>(basis.size());
  if (rb) {
    Matrix sit = rb->basis_change_inv.transpose();
    out.C = rb->basis_change_inv * c_own * sit;
    out.original_C = c_own;
    out.space_basis.reserve(basis.size());
    for (const auto& b : basis)
      out.space_basis.push_back(rb->basis_change_inv * b * sit);
  } else {
    out.C = c_own;
    out.space_basis = std::move(basis);
  }
  return out;
}

Intertwiner intertwiner_from_matrix(const AlgebraPtr& a, const Matrix& c) {
  if (!a) raise(errc::invalid_argument, "null algebra");
  if (c.rows() != a->dim() || c.cols() != a->dim())
    raise(errc::invalid_argument, "intertwiner has wrong shape");
  if (c.mode() != a->mode())
    raise(errc::mode_mismatch, "intertwiner mode mismatch");
  if (!is_intertwiner_matrix(*a, c))
    raise(errc::invalid_argument, "matrix does not intertwine R and L");
  if (!try_inverse(c))
    raise(errc::singular, "intertwiner matrix is singular");

  Intertwiner out;
  out.algebra = a;
  out.C = c;
  std::vector<Matrix> basis = intertwiner_space(*a);
  out.space_dim = static_cast<int>(basis.size());
  out.space_basis = std::move(basis);
  if (const RebaseInfo* rb = a->rebase()) {
    Matrix orig = rb->basis_change * c * rb->basis_change.transpose();
    out.canonical = orig.is_symmetric() && (orig * orig).is_identity();
    out.original_C = std::move(orig);
  } else {
    out.canonical = c.is_symmetric() && (c * c).is_identity();
  }
  return out;
}

} // namespace algint
