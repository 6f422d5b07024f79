#include "algebra.hpp"

#include <algorithm>
#include <sstream>

namespace algint {

StructureConstants::StructureConstants(int dim, Mode mode,
                                       const std::vector<FEntry>& entries)
    : dim_(dim), mode_(mode), table_(static_cast<size_t>(dim) * dim) {
  if (dim <= 0) raise(errc::invalid_argument, "algebra dimension must be >= 1");
  std::map<std::tuple<int, int, int>, Scalar> acc;
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      raise(errc::index_out_of_range, "structure constant index out of range");
    if (e.value.mode() != mode)
      raise(errc::mode_mismatch, "structure constant mode mismatch");
    auto key = std::make_tuple(e.i, e.j, e.k);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, e.value);
    else
      it->second += e.value;
  }
  for (const auto& [key, v] : acc) {
    if (v.is_zero()) continue;
    auto [i, j, k] = key;
    table_[static_cast<size_t>(i) * dim_ + j].emplace_back(k, v);
  }
}

Scalar StructureConstants::get(int i, int j, int k) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
    raise(errc::index_out_of_range, "structure constant index out of range");
  for (const auto& [kk, v] : product_row(i, j))
    if (kk == k) return v;
  return Scalar::zero(mode_);
}

std::vector<FEntry> StructureConstants::entries() const {
  std::vector<FEntry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, v] : product_row(i, j)) out.push_back({i, j, k, v});
  return out;
}

namespace {

void validate_labels(const std::vector<std::string>& labels, int dim) {
  if (static_cast<int>(labels.size()) != dim)
    raise(errc::invalid_argument, "label count does not match dimension");
  for (int i = 0; i < dim; ++i) {
    if (labels[i].empty())
      raise(errc::invalid_argument, "empty basis label");
    for (int j = i + 1; j < dim; ++j)
      if (labels[i] == labels[j])
        raise(errc::invalid_argument, "duplicate basis label '" + labels[i] + "'");
  }
}

} // namespace

AlgebraPtr Algebra::create(std::string name, std::vector<std::string> labels,
                           StructureConstants f, int identity_index, Mode mode,
                           bool defer_checks) {
  if (f.mode() != mode) raise(errc::mode_mismatch, "structure constant mode mismatch");
  validate_labels(labels, f.dim());
  if (identity_index < 0 || identity_index >= f.dim())
    raise(errc::index_out_of_range, "identity index out of range");
  auto a = std::shared_ptr<Algebra>(new Algebra(
      std::move(name), std::move(labels), std::move(f), identity_index, mode));
  if (!defer_checks) {
    if (!a->check_identity())
      raise(errc::check_failed,
            "basis element at the identity slot is not a two-sided identity");
    auto rep = a->check_associativity();
    if (!rep.all_ok()) {
      std::ostringstream os;
      os << "structure constants are not associative";
      if (rep.first_failure) {
        auto [i, j, k] = *rep.first_failure;
        os << " (first failing triple " << a->label(i) << ", " << a->label(j)
           << ", " << a->label(k) << ")";
      }
      raise(errc::check_failed, os.str());
    }
  }
  return a;
}

AlgebraPtr Algebra::create_with_identity_element(std::string name,
                                                 std::vector<std::string> labels,
                                                 StructureConstants f,
                                                 const Vec& identity, Mode mode) {
  const int d = f.dim();
  if (static_cast<int>(identity.size()) != d)
    raise(errc::invalid_argument, "identity coefficient count mismatch");

  // Is the identity a plain basis vector?
  int basis_slot = -1;
  bool is_basis = true;
  for (int i = 0; i < d; ++i) {
    if (identity[i].is_zero()) continue;
    if (basis_slot >= 0 || !identity[i].is_one()) {
      is_basis = false;
      break;
    }
    basis_slot = i;
  }
  if (is_basis && basis_slot >= 0)
    return create(std::move(name), std::move(labels), std::move(f), basis_slot,
                  mode);

  // Keep the raw algebra around (checks deferred: its identity is not a
  // basis vector) and rebase so that slot 0 holds the identity.
  AlgebraPtr raw = create(name, labels, f, 0, mode, /*defer_checks=*/true);

  // Verify the claimed identity actually is two-sided.
  for (int j = 0; j < d; ++j) {
    Vec ej = zero_vec(d, mode);
    ej[j] = Scalar::one(mode);
    if (!vec_equal(raw->multiply_coeffs(identity, ej), ej) ||
        !vec_equal(raw->multiply_coeffs(ej, identity), ej))
      raise(errc::check_failed,
            "claimed identity element is not a two-sided identity");
  }

  int dropped = -1;
  for (int i = 0; i < d; ++i)
    if (!identity[i].is_zero()) {
      dropped = i;
      break;
    }
  if (dropped < 0) raise(errc::invalid_argument, "identity element is zero");

  // S columns: identity first, then the remaining original basis vectors.
  Matrix S(d, d, mode);
  std::vector<int> kept;
  for (int i = 0; i < d; ++i) S.at(i, 0) = identity[i];
  {
    int col = 1;
    for (int i = 0; i < d; ++i) {
      if (i == dropped) continue;
      S.at(i, col) = Scalar::one(mode);
      kept.push_back(i);
      ++col;
    }
  }
  Matrix S_inv = inverse(S);

  // New structure constants: f'(i,j,.) = S^-1 * (S_i * S_j under old f).
  std::vector<FEntry> new_entries;
  for (int i = 0; i < d; ++i) {
    Vec yi = S.column(i);
    for (int j = 0; j < d; ++j) {
      Vec yj = S.column(j);
      Vec prod = raw->multiply_coeffs(yi, yj);
      Vec in_new = S_inv * prod;
      for (int k = 0; k < d; ++k)
        if (!in_new[k].is_zero()) new_entries.push_back({i, j, k, in_new[k]});
    }
  }

  std::vector<std::string> new_labels;
  new_labels.push_back("I");
  for (int i : kept) new_labels.push_back(raw->label(i));
  if (std::find(new_labels.begin() + 1, new_labels.end(), "I") !=
      new_labels.end())
    raise(errc::invalid_argument,
          "label 'I' is reserved for the rebased identity slot");

  auto rebased = create(std::move(name), std::move(new_labels),
                        StructureConstants(d, mode, new_entries), 0, mode);
  auto* mut = const_cast<Algebra*>(rebased.get());
  mut->rebase_ = RebaseInfo{raw, S, S_inv, identity, dropped};
  // The displaced original label stays addressable as a named element.
  Vec dropped_coords = zero_vec(d, mode);
  dropped_coords[dropped] = Scalar::one(mode);
  mut->named_[raw->label(dropped)] = S_inv * dropped_coords;
  return rebased;
}

const std::string& Algebra::label(int i) const {
  if (i < 0 || i >= dim()) raise(errc::index_out_of_range, "basis index out of range");
  return labels_[i];
}

std::optional<int> Algebra::index_of_label(const std::string& l) const {
  for (int i = 0; i < dim(); ++i)
    if (labels_[i] == l) return i;
  return std::nullopt;
}

Vec Algebra::multiply_coeffs(const Vec& a, const Vec& b) const {
  const int d = dim();
  if (static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d)
    raise(errc::invalid_argument, "coefficient vector size mismatch");
  Vec out = zero_vec(d, mode_);
  for (int i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, v] : f_.product_row(i, j)) out[k] += ab * v;
    }
  }
  return out;
}

Matrix Algebra::right_rep(int i) const {
  if (i < 0 || i >= dim()) raise(errc::index_out_of_range, "basis index out of range");
  Matrix r(dim(), dim(), mode_);
  for (int j = 0; j < dim(); ++j)
    for (const auto& [k, v] : f_.product_row(j, i)) r.at(j, k) = v;
  return r;
}

Matrix Algebra::left_rep(int i) const {
  if (i < 0 || i >= dim()) raise(errc::index_out_of_range, "basis index out of range");
  Matrix l(dim(), dim(), mode_);
  for (int k = 0; k < dim(); ++k)
    for (const auto& [j, v] : f_.product_row(i, k)) l.at(j, k) = v;
  return l;
}

AssociativityReport Algebra::check_associativity() const {
  const int d = dim();
  AssociativityReport rep;

  std::vector<Matrix> L, R;
  L.reserve(d);
  R.reserve(d);
  for (int i = 0; i < d; ++i) {
    L.push_back(left_rep(i));
    R.push_back(right_rep(i));
  }

  auto rep_product_ok = [&](const std::vector<Matrix>& M) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Matrix rhs(d, d, mode_);
        for (const auto& [k, v] : f_.product_row(i, j)) {
          Matrix t = M[k].scaled(v);
          rhs = rhs + t;
        }
        if (!(M[i] * M[j]).equals(rhs)) return false;
      }
    return true;
  };

  rep.left_ok = rep_product_ok(L);
  rep.right_ok = rep_product_ok(R);

  rep.commutant_ok = true;
  for (int i = 0; i < d && rep.commutant_ok; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix lt = L[j].transpose();
      if (!(R[i] * lt).equals(lt * R[i])) {
        rep.commutant_ok = false;
        break;
      }
    }
  }

  // Definitional associator scan for the diagnostic triple.
  for (int i = 0; i < d && !rep.first_failure; ++i) {
    Vec ei = zero_vec(d, mode_);
    ei[i] = Scalar::one(mode_);
    for (int j = 0; j < d && !rep.first_failure; ++j) {
      Vec ej = zero_vec(d, mode_);
      ej[j] = Scalar::one(mode_);
      Vec ij = multiply_coeffs(ei, ej);
      for (int k = 0; k < d; ++k) {
        Vec ek = zero_vec(d, mode_);
        ek[k] = Scalar::one(mode_);
        Vec lhs = multiply_coeffs(ij, ek);
        Vec rhs = multiply_coeffs(ei, multiply_coeffs(ej, ek));
        if (!vec_equal(lhs, rhs)) {
          rep.first_failure = std::array<int, 3>{i, j, k};
          break;
        }
      }
    }
  }
  return rep;
}

bool Algebra::check_identity() const {
  const int d = dim();
  const int e = identity_index_;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      Scalar want = (j == k) ? Scalar::one(mode_) : Scalar::zero(mode_);
      if (!f_.get(e, j, k).equals(want)) return false;
      if (!f_.get(j, e, k).equals(want)) return false;
    }
  }
  return true;
}

bool Algebra::same_structure(const Algebra& o) const {
  if (dim() != o.dim() || mode_ != o.mode_) return false;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        if (!f_.get(i, j, k).equals(o.f_.get(i, j, k))) return false;
  return true;
}

Element::Element(AlgebraPtr alg, Vec coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (!alg_) raise(errc::invalid_argument, "element without algebra");
  if (static_cast<int>(coeffs_.size()) != alg_->dim())
    raise(errc::invalid_argument, "coefficient count does not match dimension");
  for (const auto& c : coeffs_)
    if (c.mode() != alg_->mode())
      raise(errc::mode_mismatch, "element coefficients in wrong mode");
}

Element Element::basis(const AlgebraPtr& alg, int i) {
  if (i < 0 || i >= alg->dim())
    raise(errc::index_out_of_range, "basis index out of range");
  Vec v = zero_vec(alg->dim(), alg->mode());
  v[i] = Scalar::one(alg->mode());
  return Element(alg, std::move(v));
}

Element Element::identity(const AlgebraPtr& alg) {
  return basis(alg, alg->identity_index());
}

Element Element::zero(const AlgebraPtr& alg) {
  return Element(alg, zero_vec(alg->dim(), alg->mode()));
}

Scalar Element::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size()))
    raise(errc::index_out_of_range, "coefficient index out of range");
  return coeffs_[i];
}

std::string Element::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg_->dim(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[i].to_string() << ")*" << alg_->label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {
void require_same_algebra(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra())
    raise(errc::algebra_mismatch, "elements belong to different algebras");
}
} // namespace

Element multiply(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return Element(a.algebra(),
                 a.algebra()->multiply_coeffs(a.coeffs(), b.coeffs()));
}

Element add(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Vec v = a.coeffs();
  for (size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs()[i];
  return Element(a.algebra(), std::move(v));
}

Element subtract(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Vec v = a.coeffs();
  for (size_t i = 0; i < v.size(); ++i) v[i] -= b.coeffs()[i];
  return Element(a.algebra(), std::move(v));
}

Element scale(const Scalar& s, const Element& a) {
  Vec v = a.coeffs();
  for (auto& c : v) c *= s;
  return Element(a.algebra(), std::move(v));
}

bool elements_equal(const Element& a, const Element& b) {
  return a.algebra() == b.algebra() && vec_equal(a.coeffs(), b.coeffs());
}

std::vector<int> generating_indices(const Algebra& a) {
  const int d = a.dim();
  const Mode mode = a.mode();

  // Span maintained in reduced row-echelon form for membership tests.
  std::vector<Vec> span_rows;
  std::vector<int> pivot_cols;

  auto reduce = [&](Vec v) -> Vec {
    for (size_t r = 0; r < span_rows.size(); ++r) {
      const Scalar& c = v[pivot_cols[r]];
      if (c.is_zero()) continue;
      Scalar f = c;
      for (int j = 0; j < d; ++j) v[j] -= f * span_rows[r][j];
      v[pivot_cols[r]] = Scalar::zero(mode);
    }
    return v;
  };
  auto insert = [&](const Vec& raw) -> bool {
    Vec v = reduce(raw);
    int lead = -1;
    for (int j = 0; j < d; ++j)
      if (!v[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    Scalar inv = v[lead].inverse();
    for (int j = 0; j < d; ++j) v[j] *= inv;
    // Keep earlier rows reduced against the new one.
    for (size_t r = 0; r < span_rows.size(); ++r) {
      Scalar c = span_rows[r][lead];
      if (c.is_zero()) continue;
      for (int j = 0; j < d; ++j) span_rows[r][j] -= c * v[j];
    }
    span_rows.push_back(std::move(v));
    pivot_cols.push_back(lead);
    return true;
  };

  std::vector<Vec> members; // raw members of the subalgebra found so far
  auto add_member = [&](const Vec& v) -> bool {
    if (!insert(v)) return false;
    members.push_back(v);
    return true;
  };

  Vec id = zero_vec(d, mode);
  id[a.identity_index()] = Scalar::one(mode);
  add_member(id);

  std::vector<int> gens;
  for (int i = 0; i < d && static_cast<int>(span_rows.size()) < d; ++i) {
    Vec ei = zero_vec(d, mode);
    ei[i] = Scalar::one(mode);
    if (!add_member(ei)) continue;
    gens.push_back(i);
    // Close under products until the span stabilises.
    size_t frontier = members.size() - 1;
    while (frontier < members.size()) {
      size_t upto = members.size();
      for (size_t n = frontier; n < upto; ++n)
        for (size_t m = 0; m < upto; ++m) {
          add_member(a.multiply_coeffs(members[n], members[m]));
          add_member(a.multiply_coeffs(members[m], members[n]));
        }
      frontier = upto;
    }
  }
  return gens;
}

} // namespace algint
