#include "exprparse.hpp"

#include <algorithm>
#include <cctype>

namespace algint {

namespace {

class ElementParser {
public:
  ElementParser(const std::string& text, AlgebraPtr alg)
      : s_(text), alg_(std::move(alg)) {
    for (int i = 0; i < alg_->dim(); ++i) {
      Vec v = zero_vec(alg_->dim(), alg_->mode());
      v[i] = Scalar::one(alg_->mode());
      symbols_.emplace_back(alg_->label(i), std::move(v));
    }
    for (const auto& [name, v] : alg_->named_elements())
      symbols_.emplace_back(name, v);
    std::sort(symbols_.begin(), symbols_.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
      return a.first < b.first;
    });
  }

  Element run() {
    skip_ws();
    if (done()) fail("empty input");
    Element acc = parse_term();
    skip_ws();
    while (!done() && (peek() == '+' || peek() == '-')) {
      char op = take();
      Element t = parse_term();
      acc = op == '+' ? add(acc, t) : subtract(acc, t);
      skip_ws();
    }
    if (!done()) fail("unexpected input");
    return acc;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::string ctx = s_.substr(pos_, std::min<size_t>(12, s_.size() - pos_));
    raise(errc::parse, msg + " at position " + std::to_string(pos_ + 1) +
                           (ctx.empty() ? "" : " near '" + ctx + "'"));
  }

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  // rational := sign? digits ('/' digits)?  ; approx also decimals.
  bool scan_rational(std::string& out) {
    size_t p = pos_;
    if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
    size_t d0 = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p == d0) return false;
    if (p < s_.size() && s_[p] == '/') {
      size_t q = p + 1, d1 = p + 1;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
      if (q == d1) return false;
      p = q;
    } else if (alg_->mode() == Mode::approx) {
      if (p < s_.size() && s_[p] == '.') {
        ++p;
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
      }
      if (p < s_.size() && (s_[p] == 'e' || s_[p] == 'E')) {
        size_t q = p + 1;
        if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
        size_t d1 = q;
        while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        if (q > d1) p = q;
      }
    }
    out = s_.substr(pos_, p - pos_);
    pos_ = p;
    return true;
  }

  // scalar := rational 'i'? | '(' rational ('+'|'-') rational 'i' ')'
  std::optional<Scalar> try_scalar() {
    skip_ws();
    size_t save = pos_;
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      std::string re;
      if (!scan_rational(re)) {
        pos_ = save;
        return std::nullopt;
      }
      skip_ws();
      if (peek() != '+' && peek() != '-') {
        pos_ = save;
        return std::nullopt;
      }
      std::string im;
      if (!scan_rational(im)) {
        pos_ = save;
        return std::nullopt;
      }
      if (peek() != 'i') {
        pos_ = save;
        return std::nullopt;
      }
      ++pos_;
      skip_ws();
      if (peek() != ')') {
        pos_ = save;
        return std::nullopt;
      }
      ++pos_;
      Scalar r = Scalar::parse(re, alg_->mode());
      Scalar i = Scalar::parse(im, alg_->mode());
      return r + i * Scalar::imaginary_unit(alg_->mode());
    }
    std::string lit;
    if (!scan_rational(lit)) return std::nullopt;
    bool imag = false;
    if (peek() == 'i') {
      imag = true;
      ++pos_;
    }
    Scalar v = Scalar::parse(lit, alg_->mode());
    return imag ? v * Scalar::imaginary_unit(alg_->mode()) : v;
  }

  // Greedy longest match against basis labels and named elements.
  std::optional<Vec> try_label() {
    skip_ws();
    for (const auto& [name, v] : symbols_) {
      if (s_.compare(pos_, name.size(), name) == 0) {
        pos_ += name.size();
        return v;
      }
    }
    return std::nullopt;
  }

  std::optional<Element> try_factor() {
    auto base = try_label();
    if (!base) return std::nullopt;
    Element e(alg_, *base);
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        digits += s_[pos_++];
      if (digits.empty()) fail("expected integer exponent");
      long k = std::stol(digits);
      Element acc = Element::identity(alg_);
      for (long t = 0; t < k; ++t) acc = multiply(acc, e);
      return acc;
    }
    return e;
  }

  Element parse_term() {
    skip_ws();
    std::optional<Scalar> coeff = try_scalar();
    std::optional<Element> prod;
    bool expect_factor = false;
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        expect_factor = true;
        skip_ws();
      }
      auto f = try_factor();
      if (!f) {
        if (expect_factor) fail("expected a basis label");
        break;
      }
      expect_factor = false;
      prod = prod ? multiply(*prod, *f) : *f;
    }
    if (!coeff && !prod) fail("expected a term");
    if (!prod) return scale(*coeff, Element::identity(alg_));
    return coeff ? scale(*coeff, *prod) : *prod;
  }

  const std::string& s_;
  size_t pos_ = 0;
  AlgebraPtr alg_;
  std::vector<std::pair<std::string, Vec>> symbols_;
};

} // namespace

Element parse_element(const std::string& text, const AlgebraPtr& algebra) {
  if (!algebra) raise(errc::invalid_argument, "null algebra");
  return ElementParser(text, algebra).run();
}

} // namespace algint
