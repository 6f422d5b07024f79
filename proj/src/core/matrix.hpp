#ifndef ALGINT_CORE_MATRIX_HPP
#define ALGINT_CORE_MATRIX_HPP

#include <vector>

#include "scalar.hpp"

namespace algint {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n, Mode m);
bool vec_is_zero(const Vec& v);
bool vec_equal(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b); // plain bilinear dot, no conjugation

// Dense matrix over Scalar. All entries share one mode; operations are
// value-semantic and pure. Exact elimination pivots on the first
// nonzero entry, approx on the entry of largest magnitude.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0), mode_(Mode::exact) {}
  Matrix(int rows, int cols, Mode m);

  static Matrix identity(int n, Mode m);
  static Matrix from_rows(const std::vector<Vec>& rows, Mode m);
  static Matrix from_columns(const std::vector<Vec>& cols, Mode m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Mode mode() const { return mode_; }

  Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  Vec row(int r) const;
  Vec column(int c) const;
  void set_row(int r, const Vec& v);
  void set_column(int c, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  bool equals(const Matrix& o) const;
  bool equals(const Matrix& o, double eps) const;
  bool is_zero() const;
  bool is_identity() const;

  // Exactly one nonzero per row and per column.
  bool is_monomial() const;
  // Monomial with every nonzero of unit modulus (signs/phases).
  bool is_unit_monomial() const;
  bool is_symmetric() const;

  double max_abs() const;

  std::string to_string() const;

private:
  int rows_, cols_;
  Mode mode_;
  std::vector<Scalar> data_;
};

struct SolveResult {
  enum class Kind { unique, none, underdetermined };
  Kind kind = Kind::none;
  Vec x;              // valid for unique and underdetermined (a particular solution)
  int space_dim = 0;  // dimension of the homogeneous solution space
};

SolveResult solve(const Matrix& m, const Vec& b);
int rank(const Matrix& m);
std::vector<Vec> nullspace(const Matrix& m);
Matrix inverse(const Matrix& m); // errc::singular when rank-deficient

// exp(alpha*D) for nilpotent D as a terminating series (exact or approx);
// errc::not_nilpotent when D^rows != 0.
Matrix exp_nilpotent(const Matrix& d, const Scalar& alpha);
// Scaling-and-squaring Taylor exponential, approx mode only.
Matrix exp_approx(const Matrix& d, const Scalar& alpha);

// Kronecker product, used for tensor-product intertwiners.
Matrix kronecker(const Matrix& a, const Matrix& b);

} // namespace algint

#endif
