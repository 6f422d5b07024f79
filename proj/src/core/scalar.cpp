#include "scalar.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <sstream>

namespace algint {

namespace {
std::atomic<double> g_epsilon{1e-10};
} // namespace

double epsilon() { return g_epsilon.load(); }

void set_epsilon(double eps) {
  if (!(eps > 0.0))
    raise(errc::invalid_argument, "tolerance must be positive");
  g_epsilon.store(eps);
}

std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "approx"; }

Scalar Scalar::exact_int(long v) {
  Scalar s;
  s.mode_ = Mode::exact;
  s.re_ = v;
  return s;
}

Scalar Scalar::exact_rational(const mpq_class& re) {
  Scalar s;
  s.mode_ = Mode::exact;
  s.re_ = re;
  return s;
}

Scalar Scalar::exact_gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s;
  s.mode_ = Mode::exact;
  s.re_ = re;
  s.im_ = im;
  return s;
}

Scalar Scalar::approx(double re, double im) {
  Scalar s;
  s.mode_ = Mode::approx;
  s.a_ = {re, im};
  return s;
}

Scalar Scalar::approx(std::complex<double> z) {
  Scalar s;
  s.mode_ = Mode::approx;
  s.a_ = z;
  return s;
}

Scalar Scalar::zero(Mode m) { return m == Mode::exact ? exact_int(0) : approx(0.0); }

Scalar Scalar::one(Mode m) { return m == Mode::exact ? exact_int(1) : approx(1.0); }

Scalar Scalar::imaginary_unit(Mode m) {
  return m == Mode::exact ? exact_gaussian(0, 1) : approx(0.0, 1.0);
}

Scalar Scalar::from_int(long v, Mode m) {
  return m == Mode::exact ? exact_int(v) : approx(static_cast<double>(v));
}

std::complex<double> Scalar::approx_value() const {
  if (mode_ != Mode::approx)
    raise(errc::mode_mismatch, "approx_value() on exact scalar");
  return a_;
}

std::complex<double> Scalar::to_complex() const {
  if (mode_ == Mode::approx) return a_;
  return {re_.get_d(), im_.get_d()};
}

bool Scalar::is_zero() const { return is_zero(epsilon()); }

bool Scalar::is_zero(double eps) const {
  if (mode_ == Mode::exact) return sgn(re_) == 0 && sgn(im_) == 0;
  return std::abs(a_) <= eps;
}

bool Scalar::is_one() const {
  if (mode_ == Mode::exact) return re_ == 1 && sgn(im_) == 0;
  return std::abs(a_ - std::complex<double>(1.0, 0.0)) <= epsilon();
}

bool Scalar::is_real() const {
  if (mode_ == Mode::exact) return sgn(im_) == 0;
  return std::abs(a_.imag()) <= epsilon();
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (mode_ == Mode::exact) {
    s.re_ = -re_;
    s.im_ = -im_;
  } else {
    s.a_ = -a_;
  }
  return s;
}

Scalar Scalar::conj() const {
  Scalar s(*this);
  if (mode_ == Mode::exact)
    s.im_ = -im_;
  else
    s.a_ = std::conj(a_);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero(0.0) || (mode_ == Mode::exact && is_zero()))
    raise(errc::singular, "division by zero");
  if (mode_ == Mode::exact) {
    mpq_class n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) raise(errc::singular, "division by zero");
    return exact_gaussian(re_ / n, -im_ / n);
  }
  return approx(1.0 / a_);
}

void Scalar::require_same_mode(const Scalar& o) const {
  if (mode_ != o.mode_)
    raise(errc::mode_mismatch, "mixed exact/approx arithmetic");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(o);
  if (mode_ == Mode::exact) {
    re_ += o.re_;
    im_ += o.im_;
  } else {
    a_ += o.a_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(o);
  if (mode_ == Mode::exact) {
    re_ -= o.re_;
    im_ -= o.im_;
  } else {
    a_ -= o.a_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_mode(o);
  if (mode_ == Mode::exact) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
    } else {
      mpq_class r = re_ * o.re_ - im_ * o.im_;
      mpq_class i = re_ * o.im_ + im_ * o.re_;
      re_ = r;
      im_ = i;
    }
  } else {
    a_ *= o.a_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::equals(const Scalar& o) const { return equals(o, epsilon()); }

bool Scalar::equals(const Scalar& o, double eps) const {
  require_same_mode(o);
  if (mode_ == Mode::exact) return re_ == o.re_ && im_ == o.im_;
  return std::abs(a_ - o.a_) <= eps;
}

mpq_class Scalar::abs2_exact() const {
  if (mode_ != Mode::exact)
    raise(errc::mode_mismatch, "abs2_exact() on approx scalar");
  return re_ * re_ + im_ * im_;
}

double Scalar::abs2_double() const {
  if (mode_ == Mode::exact) return abs2_exact().get_d();
  return std::norm(a_);
}

double Scalar::magnitude() const { return std::sqrt(abs2_double()); }

namespace {

// Rational square root: succeeds iff numerator and denominator are
// perfect squares (input must be >= 0).
std::optional<mpq_class> sqrt_rational(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

} // namespace

std::optional<Scalar> Scalar::sqrt_in_field() const {
  if (mode_ == Mode::approx) return approx(std::sqrt(a_));
  // gaussian sqrt: z = a+bi = (x+yi)^2 needs |z| rational and
  // (a+|z|)/2, (|z|-a)/2 rational squares.
  mpq_class a = re_, b = im_;
  auto norm = sqrt_rational(a * a + b * b);
  if (!norm) return std::nullopt;
  mpq_class x2 = (*norm + a) / 2, y2 = (*norm - a) / 2;
  auto x = sqrt_rational(x2), y = sqrt_rational(y2);
  if (!x || !y) return std::nullopt;
  mpq_class yy = (sgn(b) < 0) ? mpq_class(-*y) : *y;
  Scalar r = exact_gaussian(*x, yy);
  // Guard against the b != 2xy branch cut quirk.
  Scalar sq = r * r;
  if (sq.re_ == a && sq.im_ == b) return r;
  r = exact_gaussian(-*x, yy);
  sq = r * r;
  if (sq.re_ == a && sq.im_ == b) return r;
  return std::nullopt;
}

int Scalar::compare_for_ordering(const Scalar& o) const {
  require_same_mode(o);
  if (mode_ == Mode::exact) {
    int c = cmp(re_, o.re_);
    if (c != 0) return c;
    return cmp(im_, o.im_);
  }
  if (a_.real() < o.a_.real()) return -1;
  if (a_.real() > o.a_.real()) return 1;
  if (a_.imag() < o.a_.imag()) return -1;
  if (a_.imag() > o.a_.imag()) return 1;
  return 0;
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string double_str(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

// number := sign? digits ('/' digits)?            (exact)
//         | sign? decimal                          (approx only)
// Returns the numeric text (without a trailing 'i').
bool scan_number(Cursor& c, Mode m, std::string& out) {
  c.skip_ws();
  size_t start = c.pos;
  size_t p = c.pos;
  const std::string& s = c.s;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
  size_t digits0 = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  if (p == digits0) return false;
  if (p < s.size() && s[p] == '/') {
    size_t q = p + 1;
    size_t digits1 = q;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == digits1) return false;
    p = q;
  } else if (m == Mode::approx) {
    if (p < s.size() && s[p] == '.') {
      ++p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    }
    if (p < s.size() && (s[p] == 'e' || s[p] == 'E')) {
      size_t q = p + 1;
      if (q < s.size() && (s[q] == '+' || s[q] == '-')) ++q;
      size_t digits1 = q;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      if (q > digits1) p = q;
    }
  }
  out = s.substr(start, p - start);
  c.pos = p;
  return true;
}

mpq_class rational_from_text(const std::string& t) {
  auto slash = t.find('/');
  mpz_class num, den = 1;
  std::string ntext = slash == std::string::npos ? t : t.substr(0, slash);
  if (!ntext.empty() && ntext[0] == '+') ntext = ntext.substr(1);
  if (mpz_set_str(num.get_mpz_t(), ntext.c_str(), 10) != 0)
    raise(errc::parse, "bad rational literal '" + t + "'");
  if (slash != std::string::npos) {
    if (mpz_set_str(den.get_mpz_t(), t.substr(slash + 1).c_str(), 10) != 0 ||
        sgn(den) == 0)
      raise(errc::parse, "bad rational literal '" + t + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

double double_from_text(const std::string& t) {
  auto slash = t.find('/');
  if (slash != std::string::npos)
    return rational_from_text(t).get_d();
  return std::stod(t);
}

} // namespace

Scalar Scalar::parse(const std::string& text, Mode m) {
  Cursor c{text};
  std::string first;
  if (!scan_number(c, m, first))
    raise(errc::parse, "malformed scalar literal '" + text + "'");

  bool first_imag = false;
  if (c.pos < text.size() && text[c.pos] == 'i') {
    first_imag = true;
    ++c.pos;
  }

  std::string second;
  bool has_second = false, second_imag = false;
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    if (first_imag)
      raise(errc::parse, "malformed scalar literal '" + text + "'");
    if (!scan_number(c, m, second))
      raise(errc::parse, "malformed scalar literal '" + text + "'");
    has_second = true;
    if (c.pos < text.size() && text[c.pos] == 'i') {
      second_imag = true;
      ++c.pos;
    }
    if (!second_imag)
      raise(errc::parse, "expected imaginary part in '" + text + "'");
  }
  if (!c.done())
    raise(errc::parse, "trailing characters in scalar literal '" + text + "'");

  if (m == Mode::exact) {
    mpq_class re = 0, im = 0;
    if (first_imag)
      im = rational_from_text(first);
    else
      re = rational_from_text(first);
    if (has_second) im = rational_from_text(second);
    return exact_gaussian(re, im);
  }
  double re = 0, im = 0;
  if (first_imag)
    im = double_from_text(first);
  else
    re = double_from_text(first);
  if (has_second) im = double_from_text(second);
  return approx(re, im);
}

std::string Scalar::to_string() const {
  if (mode_ == Mode::exact) {
    bool has_re = sgn(re_) != 0, has_im = sgn(im_) != 0;
    if (!has_im) return rational_str(re_);
    std::string im_part = rational_str(im_) + "i";
    if (!has_re) return im_part;
    if (sgn(im_) > 0) return rational_str(re_) + "+" + im_part;
    return rational_str(re_) + im_part; // sign carried by the imag part
  }
  double re = a_.real(), im = a_.imag();
  if (im == 0.0) return double_str(re);
  std::string im_part = double_str(im) + "i";
  if (re == 0.0) return im_part;
  if (im > 0.0) return double_str(re) + "+" + im_part;
  return double_str(re) + im_part;
}

} // namespace algint
