#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ponsyz/error.hpp"
#include "ponsyz/exact/scalar.hpp"

namespace ponsyz {

/// Binary form of degree n in u, v. Coefficient i multiplies u^i v^(n-i).
/// The zero form keeps its degree so that V_n membership stays typed.
class BinForm {
 public:
  explicit BinForm(std::size_t degree = 0) : coeffs_(degree + 1, Rational(0)) {}

  BinForm(std::size_t degree, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != degree + 1)
      throw Error(ErrorKind::InvalidArgument, "binary form coefficient count must be degree + 1");
  }

  static BinForm monomial(std::size_t u_exp, std::size_t v_exp, const Rational& c = Rational(1)) {
    BinForm f(u_exp + v_exp);
    f.coeffs_[u_exp] = c;
    return f;
  }

  /// a*u + b*v
  static BinForm linear(const Rational& a, const Rational& b) { return BinForm(1, {b, a}); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Rational& coeff(std::size_t u_exp) const { return coeffs_.at(u_exp); }
  void set_coeff(std::size_t u_exp, const Rational& c) { coeffs_.at(u_exp) = c; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
  }

  /// Exponent of the largest power of u dividing the form (degree + 1 for zero).
  std::size_t u_valuation() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && sgn(coeffs_[i]) == 0) ++i;
    return i;
  }

  std::size_t v_valuation() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && sgn(coeffs_[coeffs_.size() - 1 - i]) == 0) ++i;
    return i;
  }

  BinForm& operator+=(const BinForm& o) {
    check_same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  BinForm& operator-=(const BinForm& o) {
    check_same_degree(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  BinForm& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend BinForm operator+(BinForm a, const BinForm& b) { return a += b; }
  friend BinForm operator-(BinForm a, const BinForm& b) { return a -= b; }
  friend BinForm operator*(BinForm a, const Rational& c) { return a *= c; }
  friend BinForm operator*(const Rational& c, BinForm a) { return a *= c; }
  BinForm operator-() const { return *this * Rational(-1); }

  friend BinForm operator*(const BinForm& f, const BinForm& g) {
    BinForm h(f.degree() + g.degree());
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (sgn(f.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) h.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return h;
  }

  friend bool operator==(const BinForm&, const BinForm&) = default;

 private:
  void check_same_degree(const BinForm& o) const {
    if (o.degree() != degree()) throw Error(ErrorKind::InvalidArgument, "adding binary forms of different degree");
  }

  std::vector<Rational> coeffs_;
};

inline BinForm mul(const BinForm& f, const BinForm& g) { return f * g; }

inline Rational eval(const BinForm& f, const Rational& a, const Rational& b) {
  // Horner in u with v-powers accumulated from the top.
  Rational result(0);
  Rational v_power(1);
  const std::size_t n = f.degree();
  std::vector<Rational> v_powers(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    v_powers[i] = v_power;
    v_power *= b;
  }
  for (std::size_t i = n + 1; i-- > 0;) result = result * a + f.coeff(i) * v_powers[n - i];
  return result;
}

/// Scales so the coefficient of the highest u-power present is 1.
inline BinForm monic(BinForm f) {
  for (std::size_t i = f.degree() + 1; i-- > 0;) {
    if (sgn(f.coeff(i)) != 0) {
      const Rational lead = f.coeff(i);
      f *= Rational(1) / lead;
      break;
    }
  }
  return f;
}

namespace detail {

/// Univariate polynomial over Q as a coefficient vector, index = power.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline UPoly upoly_rem(UPoly a, const UPoly& b) {
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / lead;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// Long division by a form whose top (u^m) coefficient is nonzero.
inline std::optional<BinForm> divide_top(const BinForm& f, const BinForm& g) {
  const std::size_t n = f.degree();
  const std::size_t m = g.degree();
  if (n < m) return std::nullopt;
  std::vector<Rational> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rational> q(n - m + 1);
  const Rational& lead = g.coeff(m);
  for (std::size_t i = n - m + 1; i-- > 0;) {
    q[i] = r[i + m] / lead;
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j <= m; ++j) r[i + j] -= q[i] * g.coeff(j);
  }
  for (const auto& c : r)
    if (sgn(c) != 0) return std::nullopt;
  return BinForm(n - m, std::move(q));
}

}  // namespace detail

/// Exact quotient f / g, or nullopt when g does not divide f.
inline std::optional<BinForm> try_divide(const BinForm& f, const BinForm& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero form");
  if (f.degree() < g.degree()) return std::nullopt;
  // Peel the v-power of g so the remaining divisor has a nonzero top coefficient.
  const std::size_t e = g.v_valuation();
  const std::size_t n = f.degree();
  for (std::size_t i = n - e + 1; i <= n; ++i)
    if (sgn(f.coeff(i)) != 0) return std::nullopt;
  BinForm f1(n - e, std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(n - e + 1)));
  const std::size_t m = g.degree() - e;
  BinForm g1(m, std::vector<Rational>(g.coeffs().begin(), g.coeffs().begin() + static_cast<std::ptrdiff_t>(m + 1)));
  return detail::divide_top(f1, g1);
}

inline BinForm divexact(const BinForm& f, const BinForm& g) {
  auto q = try_divide(f, g);
  if (!q) throw Error(ErrorKind::NotDivisible, "binary form division is not exact");
  return *std::move(q);
}

inline bool divides(const BinForm& g, const BinForm& f) { return try_divide(f, g).has_value(); }

/// Greatest common divisor, normalized so the highest u-power coefficient
/// is 1. Zero inputs are ignored.
inline BinForm gcd_forms(std::span<const BinForm> forms) {
  std::size_t u_common = 0;
  std::size_t v_common = 0;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    u_common = any ? std::min(u_common, f.u_valuation()) : f.u_valuation();
    v_common = any ? std::min(v_common, f.v_valuation()) : f.v_valuation();
    any = true;
  }
  if (!any) throw Error(ErrorKind::InvalidArgument, "gcd of zero forms is undefined");

  // Dehomogenize at v = 1 after removing u^u_common v^v_common.
  detail::UPoly g;
  bool first = true;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    const std::size_t len = f.degree() - u_common - v_common + 1;
    detail::UPoly p(f.coeffs().begin() + static_cast<std::ptrdiff_t>(u_common),
                    f.coeffs().begin() + static_cast<std::ptrdiff_t>(u_common + len));
    g = first ? detail::upoly_gcd(p, p) : detail::upoly_gcd(g, p);
    first = false;
  }
  const std::size_t e = g.size() - 1;
  BinForm out(u_common + v_common + e);
  for (std::size_t i = 0; i <= e; ++i) out.set_coeff(u_common + i, g[i]);
  return monic(out);
}

inline BinForm gcd_forms(std::initializer_list<BinForm> forms) {
  return gcd_forms(std::span<const BinForm>(forms.begin(), forms.size()));
}

namespace detail {

inline void append_power(std::ostream& os, char var, std::size_t e, bool& need_space) {
  if (e == 0) return;
  if (need_space) os << ' ';
  os << var;
  if (e > 1) os << '^' << e;
  need_space = true;
}

}  // namespace detail

/// Prints terms from the highest u-power down, e.g. "u^4 + 2 u^2 v^2 - v^4".
inline std::string to_string(const BinForm& f) {
  std::ostringstream os;
  bool first = true;
  const std::size_t n = f.degree();
  for (std::size_t i = n + 1; i-- > 0;) {
    const Rational& c = f.coeff(i);
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool need_space = false;
    if (mag != 1 || n == 0) {
      os << mag.get_str();
      need_space = true;
    }
    detail::append_power(os, 'u', i, need_space);
    detail::append_power(os, 'v', n - i, need_space);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const BinForm& f) { return os << to_string(f); }

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t small_integer() {
    mpz_class z = integer();
    if (!z.fits_ulong_p() || z > 1000000) fail("exponent out of range");
    return static_cast<std::size_t>(z.get_ui());
  }

  /// integer or p/q
  Rational coefficient() {
    mpz_class num = integer();
    if (consume('/')) {
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      return rational(num, den);
    }
    return Rational(num);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at position " << pos_ << " in \"" << text_ << '"';
    throw Error(ErrorKind::Parse, os.str());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a sum of terms `[coef] [u[^i]] [v[^j]]` with optional `*`
/// between factors. All terms must have the same total degree; when
/// `expected_degree` is given it must match.
inline BinForm parse_form(std::string_view text, std::optional<std::size_t> expected_degree = std::nullopt) {
  detail::Scanner sc(text);
  struct Term {
    Rational coeff;
    std::size_t u = 0;
    std::size_t v = 0;
  };
  std::vector<Term> terms;
  if (sc.at_end()) sc.fail("empty form");

  bool first = true;
  while (!sc.at_end()) {
    Rational sign(1);
    if (sc.consume('+')) {
    } else if (sc.consume('-')) {
      sign = -1;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;

    Term t{Rational(1)};
    bool have_factor = false;
    if (sc.peek_digit()) {
      t.coeff = sc.coefficient();
      have_factor = true;
    }
    while (true) {
      if (have_factor) sc.consume('*');
      const char c = sc.peek();
      if (c != 'u' && c != 'v') break;
      sc.consume(c);
      std::size_t e = 1;
      if (sc.consume('^')) e = sc.small_integer();
      (c == 'u' ? t.u : t.v) += e;
      have_factor = true;
    }
    if (!have_factor) sc.fail("expected a coefficient or variable");
    t.coeff *= sign;
    terms.push_back(std::move(t));
  }

  const std::size_t degree = terms.front().u + terms.front().v;
  for (const auto& t : terms)
    if (t.u + t.v != degree) throw Error(ErrorKind::Parse, "inhomogeneous form: \"" + std::string(text) + '"');

  // A lone constant 0 may stand for the zero form of any degree.
  const bool bare_zero = terms.size() == 1 && degree == 0 && sgn(terms.front().coeff) == 0;
  if (expected_degree && degree != *expected_degree && !bare_zero) {
    std::ostringstream os;
    os << "form has degree " << degree << ", expected " << *expected_degree << ": \"" << text << '"';
    throw Error(ErrorKind::Parse, os.str());
  }
  BinForm f(bare_zero && expected_degree ? *expected_degree : degree);
  for (const auto& t : terms) f.set_coeff(t.u, f.coeff(t.u) + t.coeff);
  return f;
}

}  // namespace ponsyz
