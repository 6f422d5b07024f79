#include "matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace algint {

Vec zero_vec(int n, Mode m) { return Vec(static_cast<size_t>(n), Scalar::zero(m)); }

bool vec_is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].equals(b[i])) return false;
  return true;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    raise(errc::invalid_argument, "dot: size mismatch");
  if (a.empty()) raise(errc::invalid_argument, "dot: empty vectors");
  Scalar acc = Scalar::zero(a[0].mode());
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Matrix::Matrix(int rows, int cols, Mode m)
    : rows_(rows), cols_(cols), mode_(m),
      data_(static_cast<size_t>(rows) * cols, Scalar::zero(m)) {
  if (rows < 0 || cols < 0)
    raise(errc::invalid_argument, "negative matrix dimension");
}

Matrix Matrix::identity(int n, Mode m) {
  Matrix r(n, n, m);
  for (int i = 0; i < n; ++i) r.at(i, i) = Scalar::one(m);
  return r;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, Mode m) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix r(nr, nc, m);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc)
      raise(errc::invalid_argument, "ragged rows");
    for (int j = 0; j < nc; ++j) r.at(i, j) = rows[i][j];
  }
  return r;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, Mode m) {
  int nc = static_cast<int>(cols.size());
  int nr = nc == 0 ? 0 : static_cast<int>(cols[0].size());
  Matrix r(nr, nc, m);
  for (int j = 0; j < nc; ++j) {
    if (static_cast<int>(cols[j].size()) != nr)
      raise(errc::invalid_argument, "ragged columns");
    for (int i = 0; i < nr; ++i) r.at(i, j) = cols[j][i];
  }
  return r;
}

Vec Matrix::row(int r) const {
  Vec v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(r, j));
  return v;
}

Vec Matrix::column(int c) const {
  Vec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
}

void Matrix::set_column(int c, const Vec& v) {
  for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, mode_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) raise(errc::invalid_argument, "matmul: shape mismatch");
  if (mode_ != o.mode_) raise(errc::mode_mismatch, "matmul: mode mismatch");
  Matrix r(rows_, o.cols_, mode_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    raise(errc::invalid_argument, "matvec: shape mismatch");
  Vec r = zero_vec(rows_, mode_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    raise(errc::invalid_argument, "add: shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    raise(errc::invalid_argument, "sub: shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(*this);
  for (auto& e : r.data_) e *= s;
  return r;
}

bool Matrix::equals(const Matrix& o) const { return equals(o, epsilon()); }

bool Matrix::equals(const Matrix& o, double eps) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || mode_ != o.mode_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!data_[i].equals(o.data_[i], eps)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar want = i == j ? Scalar::one(mode_) : Scalar::zero(mode_);
      if (!at(i, j).equals(want)) return false;
    }
  return true;
}

bool Matrix::is_monomial() const {
  if (rows_ != cols_) return false;
  std::vector<int> col_used(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    int found = -1;
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) {
        if (found >= 0) return false;
        found = j;
      }
    }
    if (found < 0) return false;
    if (col_used[found]) return false;
    col_used[found] = 1;
  }
  return true;
}

bool Matrix::is_unit_monomial() const {
  if (!is_monomial()) return false;
  for (const auto& e : data_) {
    if (e.is_zero()) continue;
    if (mode_ == Mode::exact) {
      if (e.abs2_exact() != 1) return false;
    } else {
      if (std::abs(e.abs2_double() - 1.0) > epsilon()) return false;
    }
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (!at(i, j).equals(at(j, i))) return false;
  return true;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : data_) m = std::max(m, e.magnitude());
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

struct Echelon {
  Matrix m;                // reduced row-echelon form
  std::vector<int> pivots; // pivot column per pivot row
};

// Gauss-Jordan to RREF. Approx-mode zero test is relative to the
// largest entry of the input.
Echelon rref(Matrix m) {
  const int nr = m.rows(), nc = m.cols();
  const Mode mode = m.mode();
  double zero_eps = 0.0;
  if (mode == Mode::approx) zero_eps = epsilon() * (1.0 + m.max_abs());

  auto entry_is_zero = [&](const Scalar& s) {
    return mode == Mode::exact ? s.is_zero() : s.is_zero(zero_eps);
  };

  Echelon e{std::move(m), {}};
  int prow = 0;
  for (int col = 0; col < nc && prow < nr; ++col) {
    int sel = -1;
    if (mode == Mode::exact) {
      for (int r = prow; r < nr; ++r)
        if (!entry_is_zero(e.m.at(r, col))) {
          sel = r;
          break;
        }
    } else {
      double best = zero_eps;
      for (int r = prow; r < nr; ++r) {
        double mag = e.m.at(r, col).magnitude();
        if (mag > best) {
          best = mag;
          sel = r;
        }
      }
    }
    if (sel < 0) continue;
    if (sel != prow)
      for (int j = 0; j < nc; ++j) std::swap(e.m.at(sel, j), e.m.at(prow, j));
    Scalar inv = e.m.at(prow, col).inverse();
    for (int j = col; j < nc; ++j) e.m.at(prow, j) *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == prow) continue;
      Scalar f = e.m.at(r, col);
      if (entry_is_zero(f)) continue;
      for (int j = col; j < nc; ++j) e.m.at(r, j) -= f * e.m.at(prow, j);
      e.m.at(r, col) = Scalar::zero(mode);
    }
    e.pivots.push_back(col);
    ++prow;
  }
  return e;
}

} // namespace

SolveResult solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    raise(errc::invalid_argument, "solve: rhs size mismatch");
  for (const auto& s : b)
    if (s.mode() != m.mode()) raise(errc::mode_mismatch, "solve: mode mismatch");

  Matrix aug(m.rows(), m.cols() + 1, m.mode());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));

  SolveResult res;
  for (int p = 0; p < static_cast<int>(e.pivots.size()); ++p) {
    if (e.pivots[p] == m.cols()) { // pivot in the rhs column: inconsistent
      res.kind = SolveResult::Kind::none;
      return res;
    }
  }
  int r = static_cast<int>(e.pivots.size());
  res.space_dim = m.cols() - r;
  res.x = zero_vec(m.cols(), m.mode());
  for (int p = 0; p < r; ++p) res.x[e.pivots[p]] = e.m.at(p, m.cols());
  res.kind = res.space_dim == 0 ? SolveResult::Kind::unique
                                : SolveResult::Kind::underdetermined;
  return res;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols(), m.mode());
    v[free] = Scalar::one(m.mode());
    for (int p = 0; p < static_cast<int>(e.pivots.size()); ++p)
      v[e.pivots[p]] = -e.m.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) raise(errc::invalid_argument, "inverse: not square");
  const int n = m.rows();
  Matrix aug(n, 2 * n, m.mode());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.mode());
  }
  Echelon e = rref(std::move(aug));
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1))
    raise(errc::singular, "inverse: singular matrix");
  Matrix r(n, n, m.mode());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = e.m.at(i, n + j);
  return r;
}

Matrix exp_nilpotent(const Matrix& d, const Scalar& alpha) {
  if (d.rows() != d.cols())
    raise(errc::invalid_argument, "exp_nilpotent: not square");
  const int n = d.rows();
  Matrix term = Matrix::identity(n, d.mode());
  Matrix sum = term;
  Scalar k_fact = Scalar::one(d.mode());
  for (int k = 1; k <= n; ++k) {
    term = term * d;
    if (term.is_zero()) return sum;
    k_fact *= Scalar::from_int(k, d.mode());
    Scalar coeff = Scalar::one(d.mode());
    for (int p = 0; p < k; ++p) coeff *= alpha;
    coeff /= k_fact;
    sum = sum + term.scaled(coeff);
  }
  raise(errc::not_nilpotent, "matrix is not nilpotent up to its dimension");
}

Matrix exp_approx(const Matrix& d, const Scalar& alpha) {
  if (d.mode() != Mode::approx)
    raise(errc::mode_mismatch, "exp_approx needs approx mode");
  if (d.rows() != d.cols())
    raise(errc::invalid_argument, "exp_approx: not square");
  const int n = d.rows();
  Matrix a = d.scaled(alpha);
  double norm = a.max_abs() * n;
  int s = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++s;
  }
  Matrix scaled = a.scaled(Scalar::approx(std::ldexp(1.0, -s)));
  Matrix sum = Matrix::identity(n, Mode::approx);
  Matrix term = sum;
  for (int k = 1; k <= 40; ++k) {
    term = term * scaled;
    term = term.scaled(Scalar::approx(1.0 / k));
    sum = sum + term;
    if (term.max_abs() < 1e-24) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.mode() != b.mode()) raise(errc::mode_mismatch, "kronecker: mode mismatch");
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.mode());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return r;
}

} // namespace algint
