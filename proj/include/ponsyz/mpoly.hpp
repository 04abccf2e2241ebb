#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ponsyz/binform.hpp"
#include "ponsyz/error.hpp"
#include "ponsyz/exact/matrix.hpp"
#include "ponsyz/exact/scalar.hpp"
#include "ponsyz/laplace.hpp"

namespace ponsyz {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded lexicographic order with x0 > x1 > ... ; `operator()` is a
/// "greater than" so maps iterate from the leading term down.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse polynomial in x0..x{nvars-1} over Q. Zero coefficients are never
/// stored.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static MPoly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    MPoly p(nvars);
    p.add_term(std::move(e), Rational(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Exponent e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "exponent length differs from nvars");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// Leading term in grlex order; requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of the zero polynomial");
    return *terms_.begin();
  }

  /// Degree of the leading term (-1 for zero).
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(ponsyz::total_degree(terms_.begin()->first)); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = ponsyz::total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return ponsyz::total_degree(t.first) == d; });
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong length");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_ && sgn(t) != 0; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  MPoly& operator+=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
    } else {
      for (auto& [e, x] : terms_) x *= c;
    }
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const { return *this * Rational(-1); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_vars(b);
    MPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

 private:
  void check_vars(const MPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "polynomials over different variable sets");
  }

  std::size_t nvars_;
  TermMap terms_;
};

inline MPoly derivative(const MPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw Error(ErrorKind::InvalidArgument, "derivative variable index out of range");
  MPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(std::move(d), c * e[var]);
  }
  return out;
}

/// Exact quotient p / q by grlex division, or nullopt if q does not divide p.
inline std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (p.nvars() != q.nvars()) throw Error(ErrorKind::InvalidArgument, "polynomials over different variable sets");
  const auto& [lq_exp, lq_coeff] = q.leading_term();
  MPoly remainder = p;
  MPoly quotient(p.nvars());
  while (!remainder.is_zero()) {
    const auto& [lr_exp, lr_coeff] = remainder.leading_term();
    Exponent shift(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (lr_exp[i] < lq_exp[i]) return std::nullopt;
      shift[i] = lr_exp[i] - lq_exp[i];
    }
    MPoly step(p.nvars());
    step.add_term(std::move(shift), lr_coeff / lq_coeff);
    remainder -= step * q;
    quotient += step;
  }
  return quotient;
}

inline MPoly divexact_mpoly(const MPoly& p, const MPoly& q) {
  auto r = try_divide(p, q);
  if (!r) throw Error(ErrorKind::NotDivisible, "polynomial division is not exact");
  return *std::move(r);
}

/// Integer-primitive representative with positive grlex leading coefficient.
inline MPoly normalize_primitive(const MPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot normalize the zero polynomial");
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale = rational(den_lcm, num_gcd);
  if (sgn(p.leading_term().second) < 0) scale = -scale;
  return p * scale;
}

/// True iff p = c q for some nonzero scalar c (two zeros are proportional).
inline bool proportional(const MPoly& p, const MPoly& q) {
  if (p.nvars() != q.nvars()) return false;
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.term_count() != q.term_count()) return false;
  const Rational ratio = p.leading_term().second / q.leading_term().second;
  auto it = q.terms().begin();
  for (const auto& [e, c] : p.terms()) {
    if (it->first != e || c != ratio * it->second) return false;
    ++it;
  }
  return true;
}

inline std::string variable_name(std::size_t i) { return "x" + std::to_string(i); }

/// Grlex order, e.g. "x0^2 x3 - 2 x0 x1 x2 + 3/2 x1".
inline std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    const Rational mag = abs(c);
    bool need_space = false;
    if (mag != 1 || ponsyz::total_degree(e) == 0) {
      os << mag.get_str();
      need_space = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_space) os << ' ';
      os << variable_name(i);
      if (e[i] > 1) os << '^' << e[i];
      need_space = true;
    }
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << to_string(p); }

/// Parses sums of terms `[coef] [*] x<i>[^e] ...` over `nvars` variables.
inline MPoly parse_mpoly(std::string_view text, std::size_t nvars) {
  detail::Scanner sc(text);
  MPoly p(nvars);
  if (sc.at_end()) sc.fail("empty polynomial");
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
    Rational coeff(1);
    Exponent e(nvars, 0);
    bool have_factor = false;
    if (sc.peek_digit()) {
      coeff = sc.coefficient();
      have_factor = true;
    }
    while (true) {
      if (have_factor) sc.consume('*');
      if (sc.peek() != 'x') break;
      sc.consume('x');
      const std::size_t index = sc.small_integer();
      if (index >= nvars) sc.fail("variable index out of range");
      unsigned power = 1;
      if (sc.consume('^')) power = static_cast<unsigned>(sc.small_integer());
      e[index] += power;
      have_factor = true;
    }
    if (!have_factor) sc.fail("expected a coefficient or variable");
    p.add_term(std::move(e), coeff * sign);
  }
  return p;
}

/// Matrix of polynomials sharing one variable set.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, MPoly(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }

  const MPoly& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, MPoly p) {
    if (p.nvars() != nvars_) throw Error(ErrorKind::InvalidArgument, "entry has wrong variable count");
    data_.at(i * cols_ + j) = std::move(p);
  }

  /// Numeric matrix obtained by evaluating every entry at `point`.
  Matrix<Rational> evaluate(std::span<const Rational> point) const {
    Matrix<Rational> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<MPoly> data_;
};

inline MPoly poly_matrix_det(const PolyMatrix& m, std::size_t size_bound = kDefaultDetSizeBound) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square polynomial matrix");
  return laplace_det(
      m.rows(), [&m](std::size_t i, std::size_t j) -> const MPoly& { return m(i, j); },
      MPoly::constant(m.nvars(), Rational(1)), size_bound);
}

/// Projective point; the stored representative has first nonzero coordinate 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) != 0; });
    if (it == coords_.end()) throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
    const Rational lead = *it;
    for (auto& c : coords_) c /= lead;
  }

  std::span<const Rational> coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

inline std::string to_string(const ProjPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) s += " : ";
    s += p.coords()[i].get_str();
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << to_string(p); }

class ProjLine {
 public:
  ProjLine(ProjPoint p, ProjPoint q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.dimension() != q_.dimension())
      throw Error(ErrorKind::InvalidArgument, "line endpoints live in different spaces");
    if (p_ == q_) throw Error(ErrorKind::InvalidArgument, "line needs two distinct points");
  }

  const ProjPoint& first() const { return p_; }
  const ProjPoint& second() const { return q_; }

 private:
  ProjPoint p_;
  ProjPoint q_;
};

/// Substitutes x = s*p + t*q and returns the binary form in (s, t), written
/// with u = s and v = t. It is identically zero iff the line lies on p = 0.
inline BinForm restrict_to_line(const MPoly& p, const ProjLine& line) {
  if (!p.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "restriction requires a homogeneous polynomial");
  const std::size_t nvars = p.nvars();
  if (line.first().dimension() != nvars) throw Error(ErrorKind::InvalidArgument, "line lives in the wrong space");
  if (p.is_zero()) return BinForm(0);

  std::vector<BinForm> coordinate;
  coordinate.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    coordinate.push_back(BinForm::linear(line.first().coords()[i], line.second().coords()[i]));

  const auto degree = static_cast<std::size_t>(p.total_degree());
  BinForm out(degree);
  for (const auto& [e, c] : p.terms()) {
    BinForm term = BinForm::monomial(0, 0, c);
    for (std::size_t i = 0; i < nvars; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * coordinate[i];
    out += term;
  }
  return out;
}

}  // namespace ponsyz
