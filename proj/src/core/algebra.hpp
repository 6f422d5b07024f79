#ifndef ALGINT_CORE_ALGEBRA_HPP
#define ALGINT_CORE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace algint {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct FEntry {
  int i, j, k;
  Scalar value;
};

// Sparse structure-constant tensor: x_i x_j = sum_k f[i][j][k] x_k.
// Stored per (i,j) pair as a sorted list of (k, value); duplicate input
// entries are summed.
class StructureConstants {
public:
  StructureConstants() : dim_(0), mode_(Mode::exact) {}
  StructureConstants(int dim, Mode mode, const std::vector<FEntry>& entries);

  int dim() const { return dim_; }
  Mode mode() const { return mode_; }

  const std::vector<std::pair<int, Scalar>>& product_row(int i, int j) const {
    return table_[static_cast<size_t>(i) * dim_ + j];
  }
  Scalar get(int i, int j, int k) const;

  // All nonzero entries in (i, j, k) order.
  std::vector<FEntry> entries() const;

private:
  int dim_;
  Mode mode_;
  std::vector<std::vector<std::pair<int, Scalar>>> table_;
};

struct AssociativityReport {
  bool left_ok = false;       // L_i L_j = f_ijk L_k
  bool right_ok = false;      // R_i R_j = f_ijk R_k
  bool commutant_ok = false;  // [R_i, L_j^T] = 0
  // First basis triple with (x_i x_j) x_k != x_i (x_j x_k), if any.
  std::optional<std::array<int, 3>> first_failure;

  bool all_ok() const { return left_ok && right_ok && commutant_ok; }
};

// When an algebra is built from a basis in which the identity is a
// combination rather than a basis vector, the constructor changes basis
// so that slot identity_index holds the identity. The original algebra
// and the change-of-basis matrix are kept for label round-tripping and
// for reporting in the original coordinates.
struct RebaseInfo {
  AlgebraPtr original;            // pre-rebase algebra (identity check deferred)
  Matrix basis_change;            // S: columns = new basis in original coordinates
  Matrix basis_change_inv;        // S^-1
  Vec identity_in_original;       // identity element, original coordinates
  int dropped_index;              // original basis slot displaced by the identity
};

// Finite-dimensional algebra over the scalar field, fixed basis,
// represented by its structure constants. Immutable after construction.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
  // Validates associativity and the identity convention unless
  // defer_checks is set (needed to represent broken or not-yet-rebased
  // inputs so diagnostics can run on them).
  static AlgebraPtr create(std::string name, std::vector<std::string> labels,
                           StructureConstants f, int identity_index, Mode mode,
                           bool defer_checks = false);

  // Accepts the identity as an element; rebases when it is not a basis
  // vector so that the new slot 0 is the identity.
  static AlgebraPtr create_with_identity_element(std::string name,
                                                 std::vector<std::string> labels,
                                                 StructureConstants f,
                                                 const Vec& identity, Mode mode);

  const std::string& name() const { return name_; }
  int dim() const { return f_.dim(); }
  Mode mode() const { return mode_; }
  int identity_index() const { return identity_index_; }
  const StructureConstants& f() const { return f_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const;
  std::optional<int> index_of_label(const std::string& l) const;

  // Extra named elements (e.g. an original basis label displaced by a
  // rebase); values are coefficient vectors in the current basis.
  const std::map<std::string, Vec>& named_elements() const { return named_; }

  const RebaseInfo* rebase() const { return rebase_ ? &*rebase_ : nullptr; }

  // Coefficient-level product c_k = sum_ij a_i b_j f_ijk.
  Vec multiply_coeffs(const Vec& a, const Vec& b) const;

  Matrix right_rep(int i) const; // (R_i)_jk = f_jik
  Matrix left_rep(int i) const;  // (L_i)_jk = f_ikj

  AssociativityReport check_associativity() const;
  bool check_identity() const;

  bool same_structure(const Algebra& o) const;

private:
  Algebra(std::string name, std::vector<std::string> labels,
          StructureConstants f, int identity_index, Mode mode)
      : name_(std::move(name)), labels_(std::move(labels)), f_(std::move(f)),
        identity_index_(identity_index), mode_(mode) {}

  std::string name_;
  std::vector<std::string> labels_;
  StructureConstants f_;
  int identity_index_;
  Mode mode_;
  std::optional<RebaseInfo> rebase_;
  std::map<std::string, Vec> named_;
};

// An algebra member as a coefficient vector over the algebra's basis.
class Element {
public:
  Element() = default;
  Element(AlgebraPtr alg, Vec coeffs);

  static Element basis(const AlgebraPtr& alg, int i);
  static Element identity(const AlgebraPtr& alg);
  static Element zero(const AlgebraPtr& alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const Vec& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const;
  bool is_zero() const { return vec_is_zero(coeffs_); }

  std::string to_string() const; // combination of basis labels

private:
  AlgebraPtr alg_;
  Vec coeffs_;
};

Element multiply(const Element& a, const Element& b);
Element add(const Element& a, const Element& b);
Element subtract(const Element& a, const Element& b);
Element scale(const Scalar& s, const Element& a);
bool elements_equal(const Element& a, const Element& b);

// Greedy minimal generating set: basis indices whose generated unital
// subalgebra spans the whole algebra. Used to cut the intertwiner
// system down from dim to a handful of constraints.
std::vector<int> generating_indices(const Algebra& a);

} // namespace algint

#endif
