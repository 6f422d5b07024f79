#ifndef ALGINT_CORE_SCALAR_HPP
#define ALGINT_CORE_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace algint {

enum class Mode { exact, approx };

std::string to_string(Mode m);

// Global zero/equality tolerance for approx mode. Exact mode never
// consults it. Single knob, overridable per call where it matters.
double epsilon();
void set_epsilon(double eps);

// A field element: either a Gaussian rational (exact, GMP-backed) or a
// complex double (approx). The two modes never mix silently; combining
// them raises errc::mode_mismatch.
class Scalar {
public:
  Scalar() : mode_(Mode::exact) {}

  static Scalar exact_int(long v);
  static Scalar exact_rational(const mpq_class& re);
  static Scalar exact_gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar approx(double re, double im = 0.0);
  static Scalar approx(std::complex<double> z);
  static Scalar zero(Mode m);
  static Scalar one(Mode m);
  static Scalar imaginary_unit(Mode m);
  static Scalar from_int(long v, Mode m);

  // "p/q", "p", "p/q+r/si", "3-2i", "i"-free literals per the element
  // grammar; approx additionally accepts decimal/scientific notation.
  static Scalar parse(const std::string& text, Mode m);

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }

  const mpq_class& exact_re() const { return re_; }
  const mpq_class& exact_im() const { return im_; }
  std::complex<double> approx_value() const;
  // Lossy view; exact values are converted through double.
  std::complex<double> to_complex() const;

  bool is_zero() const;           // exact: == 0; approx: |z| <= epsilon()
  bool is_zero(double eps) const; // approx override
  bool is_one() const;
  bool is_real() const;

  Scalar operator-() const;
  Scalar conj() const;
  Scalar inverse() const; // errc::singular on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Exact: literal equality. Approx: |a-b| <= epsilon().
  bool equals(const Scalar& o) const;
  bool equals(const Scalar& o, double eps) const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.equals(b); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !a.equals(b); }

  // |z|^2 as a rational (exact) or double (approx real part).
  mpq_class abs2_exact() const;
  double abs2_double() const;

  // Entry magnitude used for pivoting and printing decisions.
  double magnitude() const;

  // Square root within the field: exact succeeds only when the root is
  // again a Gaussian rational; approx always succeeds.
  std::optional<Scalar> sqrt_in_field() const;

  // Total order used for deterministic report/candidate tie-breaking:
  // compares (re, im) lexicographically (exact: rational order; approx:
  // double order). Not a field order, just a stable one.
  int compare_for_ordering(const Scalar& o) const;

  std::string to_string() const;

private:
  void require_same_mode(const Scalar& o) const;

  Mode mode_;
  mpq_class re_, im_;        // exact payload
  std::complex<double> a_{}; // approx payload
};

} // namespace algint

#endif
