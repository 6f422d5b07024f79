#include "algint/algint.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "../core/algfile.hpp"
#include "../core/derivation.hpp"
#include "../core/exprparse.hpp"
#include "../core/subalgebra.hpp"

using namespace algint;

struct algint_algebra {
  AlgebraPtr value;
};
struct algint_matrix {
  Matrix value;
};
struct algint_element {
  Element value;
};
struct algint_intertwiner {
  Intertwiner value;
};
struct algint_functional {
  IntegrationFunctional value;
};
struct algint_derivation {
  DerivationMap value;
};
struct algint_embedding {
  SubalgebraEmbedding value;
};

namespace {

thread_local std::string t_last_error = "no error";

algint_status status_of(errc code) {
  switch (code) {
    case errc::invalid_argument: return ALGINT_ERR_INVALID_ARGUMENT;
    case errc::parse: return ALGINT_ERR_PARSE;
    case errc::mode_mismatch: return ALGINT_ERR_MODE_MISMATCH;
    case errc::algebra_mismatch: return ALGINT_ERR_ALGEBRA_MISMATCH;
    case errc::index_out_of_range: return ALGINT_ERR_INDEX;
    case errc::singular: return ALGINT_ERR_SINGULAR;
    case errc::no_solution: return ALGINT_ERR_NO_SOLUTION;
    case errc::not_self_conjugated: return ALGINT_ERR_NOT_SELF_CONJUGATED;
    case errc::no_invertible_intertwiner:
      return ALGINT_ERR_NO_INVERTIBLE_INTERTWINER;
    case errc::completeness_violation: return ALGINT_ERR_COMPLETENESS;
    case errc::not_nilpotent: return ALGINT_ERR_NOT_NILPOTENT;
    case errc::not_injective: return ALGINT_ERR_NOT_INJECTIVE;
    case errc::not_homomorphism: return ALGINT_ERR_NOT_HOMOMORPHISM;
    case errc::invalid_cocycle: return ALGINT_ERR_INVALID_COCYCLE;
    case errc::check_failed: return ALGINT_ERR_CHECK_FAILED;
    case errc::io: return ALGINT_ERR_IO;
    case errc::internal: return ALGINT_ERR_INTERNAL;
  }
  return ALGINT_ERR_INTERNAL;
}

template <typename Fn>
algint_status guarded(Fn&& fn) {
  try {
    fn();
    return ALGINT_OK;
  } catch (const error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ALGINT_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return ALGINT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

algint_status set_string(char** out, const std::string& s) {
  if (!out) {
    t_last_error = "null output pointer";
    return ALGINT_ERR_INVALID_ARGUMENT;
  }
  char* d = dup_string(s);
  if (!d) {
    t_last_error = "out of memory";
    return ALGINT_ERR_INTERNAL;
  }
  *out = d;
  return ALGINT_OK;
}

Mode mode_of(int mode) {
  if (mode == ALGINT_MODE_EXACT) return Mode::exact;
  if (mode == ALGINT_MODE_APPROX) return Mode::approx;
  raise(errc::invalid_argument, "bad mode constant");
}

template <typename H, typename V>
algint_status wrap(V value, H** out) {
  if (!out) {
    t_last_error = "null output pointer";
    return ALGINT_ERR_INVALID_ARGUMENT;
  }
  *out = new H{std::move(value)};
  return ALGINT_OK;
}

#define REQUIRE(cond, msg)                      \
  do {                                          \
    if (!(cond)) {                              \
      t_last_error = (msg);                     \
      return ALGINT_ERR_INVALID_ARGUMENT;       \
    }                                           \
  } while (0)

} // namespace

extern "C" {

const char* algint_version(void) { return "1.0.0"; }

const char* algint_last_error(void) { return t_last_error.c_str(); }

void algint_string_free(char* s) { std::free(s); }

double algint_epsilon(void) { return epsilon(); }

algint_status algint_set_epsilon(double eps) {
  return guarded([&] { set_epsilon(eps); });
}

/* --- algebra construction --------------------------------------------- */

algint_status algint_algebra_from_file(const char* path, algint_algebra** out) {
  REQUIRE(path, "null path");
  AlgebraPtr a;
  auto st = guarded([&] { a = load_algebra_path(path); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_from_text(const char* text, algint_algebra** out) {
  REQUIRE(text, "null text");
  AlgebraPtr a;
  auto st = guarded([&] { a = load_algebra_text(text); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_paragrassmann(int p, int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] { a = paragrassmann(p, mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_matrix(int n, int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] { a = matrix_algebra(n, mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_matrix_raw(int n, int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] { a = matrix_algebra_raw(n, mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_grassmann(int n, int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] { a = grassmann(n, mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_cyclic_group(int n, int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] { a = group_algebra(cyclic_group(n), mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_symmetric3(int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] { a = group_algebra(symmetric3(), mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_klein4(int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] { a = group_algebra(klein4(), mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_pauli(int mode, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] {
    auto g = klein4();
    a = group_algebra(g, pauli_cocycle(g, mode_of(mode)), mode_of(mode));
  });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_cyclic_phase_group(int n, algint_algebra** out) {
  AlgebraPtr a;
  auto st = guarded([&] {
    auto g = cyclic_group(n);
    a = group_algebra(g, root_of_unity_cocycle(g, n), Mode::approx);
  });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(a), out);
}

algint_status algint_algebra_tensor(const algint_algebra* a,
                                    const algint_algebra* b,
                                    algint_algebra** out) {
  REQUIRE(a && b, "null algebra");
  AlgebraPtr t;
  auto st = guarded([&] { t = tensor_product(a->value, b->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(t), out);
}

void algint_algebra_free(algint_algebra* a) { delete a; }

/* --- algebra introspection -------------------------------------------- */

int algint_algebra_dim(const algint_algebra* a) { return a ? a->value->dim() : 0; }

int algint_algebra_mode(const algint_algebra* a) {
  return a && a->value->mode() == Mode::approx ? ALGINT_MODE_APPROX
                                               : ALGINT_MODE_EXACT;
}

const char* algint_algebra_name(const algint_algebra* a) {
  return a ? a->value->name().c_str() : "";
}

int algint_algebra_identity_index(const algint_algebra* a) {
  return a ? a->value->identity_index() : -1;
}

int algint_algebra_is_rebased(const algint_algebra* a) {
  return a && a->value->rebase() ? 1 : 0;
}

algint_status algint_algebra_label(const algint_algebra* a, int i, char** out) {
  REQUIRE(a, "null algebra");
  std::string s;
  auto st = guarded([&] { s = a->value->label(i); });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

algint_status algint_algebra_original_label(const algint_algebra* a, int i,
                                            char** out) {
  REQUIRE(a, "null algebra");
  std::string s;
  auto st = guarded([&] {
    const RebaseInfo* rb = a->value->rebase();
    s = rb ? rb->original->label(i) : a->value->label(i);
  });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

algint_status algint_algebra_structure_constant(const algint_algebra* a, int i,
                                                int j, int k, char** out) {
  REQUIRE(a, "null algebra");
  std::string s;
  auto st = guarded([&] { s = a->value->f().get(i, j, k).to_string(); });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

algint_status algint_algebra_emit(const algint_algebra* a, char** out) {
  REQUIRE(a, "null algebra");
  std::string s;
  auto st = guarded([&] { s = emit_algebra(*a->value); });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

algint_status algint_algebra_check_identity(const algint_algebra* a, int* ok) {
  REQUIRE(a && ok, "null argument");
  return guarded([&] { *ok = a->value->check_identity() ? 1 : 0; });
}

algint_status algint_algebra_check_associativity(const algint_algebra* a,
                                                 algint_assoc_report* out) {
  REQUIRE(a && out, "null argument");
  return guarded([&] {
    AssociativityReport r = a->value->check_associativity();
    out->left_ok = r.left_ok ? 1 : 0;
    out->right_ok = r.right_ok ? 1 : 0;
    out->commutant_ok = r.commutant_ok ? 1 : 0;
    out->has_failure = r.first_failure ? 1 : 0;
    out->i = out->j = out->k = -1;
    if (r.first_failure) {
      out->i = (*r.first_failure)[0];
      out->j = (*r.first_failure)[1];
      out->k = (*r.first_failure)[2];
    }
  });
}

algint_status algint_algebra_right_rep(const algint_algebra* a, int i,
                                       algint_matrix** out) {
  REQUIRE(a, "null algebra");
  Matrix m;
  auto st = guarded([&] { m = a->value->right_rep(i); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(m), out);
}

algint_status algint_algebra_left_rep(const algint_algebra* a, int i,
                                      algint_matrix** out) {
  REQUIRE(a, "null algebra");
  Matrix m;
  auto st = guarded([&] { m = a->value->left_rep(i); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(m), out);
}

/* --- matrices ---------------------------------------------------------- */

algint_status algint_matrix_create(int rows, int cols, int mode,
                                   algint_matrix** out) {
  Matrix m;
  auto st = guarded([&] { m = Matrix(rows, cols, mode_of(mode)); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(m), out);
}

algint_status algint_matrix_set_entry(algint_matrix* m, int r, int c,
                                      const char* scalar_literal) {
  REQUIRE(m && scalar_literal, "null argument");
  return guarded([&] {
    if (r < 0 || r >= m->value.rows() || c < 0 || c >= m->value.cols())
      raise(errc::index_out_of_range, "matrix index out of range");
    m->value.at(r, c) = Scalar::parse(scalar_literal, m->value.mode());
  });
}

int algint_matrix_rows(const algint_matrix* m) { return m ? m->value.rows() : 0; }

int algint_matrix_cols(const algint_matrix* m) { return m ? m->value.cols() : 0; }

algint_status algint_matrix_entry(const algint_matrix* m, int r, int c,
                                  char** out) {
  REQUIRE(m, "null matrix");
  std::string s;
  auto st = guarded([&] {
    if (r < 0 || r >= m->value.rows() || c < 0 || c >= m->value.cols())
      raise(errc::index_out_of_range, "matrix index out of range");
    s = m->value.at(r, c).to_string();
  });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

algint_status algint_matrix_entry_approx(const algint_matrix* m, int r, int c,
                                         double* re, double* im) {
  REQUIRE(m && re && im, "null argument");
  return guarded([&] {
    if (r < 0 || r >= m->value.rows() || c < 0 || c >= m->value.cols())
      raise(errc::index_out_of_range, "matrix index out of range");
    auto z = m->value.at(r, c).to_complex();
    *re = z.real();
    *im = z.imag();
  });
}

void algint_matrix_free(algint_matrix* m) { delete m; }

/* --- elements ----------------------------------------------------------- */

algint_status algint_element_parse(const algint_algebra* a, const char* text,
                                   algint_element** out) {
  REQUIRE(a && text, "null argument");
  Element e;
  auto st = guarded([&] { e = parse_element(text, a->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(e), out);
}

algint_status algint_element_basis(const algint_algebra* a, int i,
                                   algint_element** out) {
  REQUIRE(a, "null algebra");
  Element e;
  auto st = guarded([&] { e = Element::basis(a->value, i); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(e), out);
}

algint_status algint_element_coeff(const algint_element* e, int i, char** out) {
  REQUIRE(e, "null element");
  std::string s;
  auto st = guarded([&] { s = e->value.coeff(i).to_string(); });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

algint_status algint_element_multiply(const algint_element* x,
                                      const algint_element* y,
                                      algint_element** out) {
  REQUIRE(x && y, "null element");
  Element e;
  auto st = guarded([&] { e = multiply(x->value, y->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(e), out);
}

algint_status algint_element_to_string(const algint_element* e, char** out) {
  REQUIRE(e, "null element");
  return set_string(out, e->value.to_string());
}

void algint_element_free(algint_element* e) { delete e; }

/* --- intertwiners ------------------------------------------------------- */

algint_status algint_canonical_intertwiner(const algint_algebra* a,
                                           unsigned long long seed,
                                           algint_intertwiner** out) {
  REQUIRE(a, "null algebra");
  Intertwiner c;
  auto st = guarded([&] { c = canonical_intertwiner(a->value, seed); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(c), out);
}

algint_status algint_intertwiner_from_matrix(const algint_algebra* a,
                                             const algint_matrix* c,
                                             algint_intertwiner** out) {
  REQUIRE(a && c, "null argument");
  Intertwiner w;
  auto st = guarded([&] { w = intertwiner_from_matrix(a->value, c->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(w), out);
}

int algint_intertwiner_space_dim(const algint_intertwiner* c) {
  return c ? c->value.space_dim : 0;
}

int algint_intertwiner_is_canonical(const algint_intertwiner* c) {
  return c && c->value.canonical ? 1 : 0;
}

algint_status algint_intertwiner_matrix(const algint_intertwiner* c,
                                        algint_matrix** out) {
  REQUIRE(c, "null intertwiner");
  return wrap(c->value.C, out);
}

algint_status algint_intertwiner_original_matrix(const algint_intertwiner* c,
                                                 algint_matrix** out) {
  REQUIRE(c, "null intertwiner");
  REQUIRE(c->value.original_C.has_value(), "algebra was not rebased");
  return wrap(*c->value.original_C, out);
}

algint_status algint_intertwiner_space_basis(const algint_intertwiner* c, int idx,
                                             algint_matrix** out) {
  REQUIRE(c, "null intertwiner");
  REQUIRE(idx >= 0 && idx < static_cast<int>(c->value.space_basis.size()),
          "space basis index out of range");
  return wrap(c->value.space_basis[idx], out);
}

void algint_intertwiner_free(algint_intertwiner* c) { delete c; }

/* --- integration -------------------------------------------------------- */

algint_status algint_integration_functional(const algint_algebra* a,
                                            const algint_intertwiner* c,
                                            algint_functional** out) {
  REQUIRE(a && c, "null argument");
  IntegrationFunctional f;
  auto st = guarded([&] { f = integration_functional(a->value, c->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(f), out);
}

algint_status algint_functional_mu(const algint_functional* f, int i, char** out) {
  REQUIRE(f, "null functional");
  std::string s;
  auto st = guarded([&] {
    if (i < 0 || i >= static_cast<int>(f->value.mu.size()))
      raise(errc::index_out_of_range, "mu index out of range");
    s = f->value.mu[i].to_string();
  });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

algint_status algint_functional_gram(const algint_functional* f,
                                     algint_matrix** out) {
  REQUIRE(f, "null functional");
  Matrix g;
  auto st = guarded([&] { g = gram_matrix(f->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(g), out);
}

algint_status algint_integrate(const algint_functional* f,
                               const algint_element* e, char** out) {
  REQUIRE(f && e, "null argument");
  std::string s;
  auto st = guarded([&] { s = integrate(f->value, e->value).to_string(); });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

void algint_functional_free(algint_functional* f) { delete f; }

/* --- derivations --------------------------------------------------------- */

algint_status algint_is_derivation(const algint_algebra* a,
                                   const algint_matrix* d, int* ok) {
  REQUIRE(a && d && ok, "null argument");
  return guarded([&] { *ok = is_derivation(*a->value, d->value) ? 1 : 0; });
}

algint_status algint_inner_derivation(const algint_algebra* a,
                                      const algint_element* e,
                                      algint_derivation** out) {
  REQUIRE(a && e, "null argument");
  DerivationMap d;
  auto st = guarded([&] { d = inner_derivation(a->value, e->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(d), out);
}

algint_status algint_derivation_matrix(const algint_derivation* d,
                                       algint_matrix** out) {
  REQUIRE(d, "null derivation");
  return wrap(d->value.D, out);
}

algint_status algint_annihilates_integral(const algint_functional* f,
                                          const algint_derivation* d, int* ok) {
  REQUIRE(f && d && ok, "null argument");
  return guarded([&] { *ok = annihilates_integral(f->value, d->value) ? 1 : 0; });
}

algint_status algint_invariance_under_flow(const algint_functional* f,
                                           const algint_derivation* d,
                                           const char* alpha, int* ok) {
  REQUIRE(f && d && alpha && ok, "null argument");
  return guarded([&] {
    Scalar a = Scalar::parse(alpha, f->value.algebra->mode());
    *ok = invariance_under_flow(f->value, d->value, a) ? 1 : 0;
  });
}

void algint_derivation_free(algint_derivation* d) { delete d; }

/* --- subalgebra integration ---------------------------------------------- */

algint_status algint_embedding_build(const algint_algebra* big,
                                     const algint_algebra* small,
                                     const algint_matrix* map,
                                     algint_embedding** out) {
  REQUIRE(big && small && map, "null argument");
  SubalgebraEmbedding e;
  auto st =
      guarded([&] { e = build_embedding(big->value, small->value, map->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(e), out);
}

int algint_embedding_complement_dim(const algint_embedding* e) {
  return e ? static_cast<int>(e->value.complement.size()) : 0;
}

algint_status algint_embedding_complement_vector(const algint_embedding* e,
                                                 int idx, algint_element** out) {
  REQUIRE(e, "null embedding");
  REQUIRE(idx >= 0 && idx < static_cast<int>(e->value.complement.size()),
          "complement index out of range");
  Element el;
  auto st = guarded([&] { el = Element(e->value.big, e->value.complement[idx]); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(el), out);
}

algint_status algint_projector(const algint_embedding* e,
                               const algint_functional* f_big,
                               const algint_functional* f_small,
                               algint_element** out) {
  REQUIRE(e && f_big && f_small, "null argument");
  Element p;
  auto st =
      guarded([&] { p = projector(e->value, f_big->value, f_small->value); });
  if (st != ALGINT_OK) return st;
  return wrap(std::move(p), out);
}

algint_status algint_integrate_via_projector(const algint_embedding* e,
                                             const algint_functional* f_big,
                                             const algint_element* projector_el,
                                             const algint_element* small_elem,
                                             char** out) {
  REQUIRE(e && f_big && projector_el && small_elem, "null argument");
  std::string s;
  auto st = guarded([&] {
    s = integrate_via_projector(e->value, f_big->value, projector_el->value,
                                small_elem->value)
            .to_string();
  });
  if (st != ALGINT_OK) return st;
  return set_string(out, s);
}

void algint_embedding_free(algint_embedding* e) { delete e; }

} // extern "C"
