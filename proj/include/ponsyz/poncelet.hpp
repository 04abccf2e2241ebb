#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ponsyz/binform.hpp"
#include "ponsyz/error.hpp"
#include "ponsyz/exact/matrix.hpp"
#include "ponsyz/mpoly.hpp"
#include "ponsyz/random.hpp"
#include "ponsyz/syzygy.hpp"

namespace ponsyz {

// Coordinate conventions
// ----------------------
// P^{k+1} has coordinates x_0..x_{k+1}. A point a corresponds to the binary
// form alpha_a = sum_m a_m u^{k+1-m} v^m, and a parameter (a:b) on the
// projective line corresponds to the osculating hyperplane
// L_{(a:b)} = sum_m a^{k+1-m} b^m x_m, so that L_{(a:b)}(x) = alpha_x(a, b).
// Row j of the Poncelet matrix is sum_i x_i z_{(k+1-i)+j} modulo the system,
// with z_l = u^l v^{n-l}.

/// Parameter (a:b) on the projective line, i.e. the root of b u - a v.
struct Param {
  Rational a;
  Rational b;

  friend bool operator==(const Param&, const Param&) = default;
};

inline bool projectively_equal(const Param& p, const Param& q) { return p.a * q.b == p.b * q.a; }

inline std::string to_string(const Param& p) { return p.a.get_str() + ":" + p.b.get_str(); }

inline void check_distinct(const std::vector<Param>& params) {
  for (const auto& p : params)
    if (sgn(p.a) == 0 && sgn(p.b) == 0) throw Error(ErrorKind::InvalidArgument, "parameter (0:0) is not a point");
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (projectively_equal(params[i], params[j]))
        throw Error(ErrorKind::InvalidArgument, "parameters must be pairwise distinct: " + to_string(params[i]));
}

/// b u - a v, vanishing at (u:v) = (a:b).
inline BinForm linear_factor(const Param& p) { return BinForm::linear(p.b, -p.a); }

inline BinForm form_with_roots(const std::vector<Param>& roots) {
  BinForm f = BinForm::monomial(0, 0);
  for (const auto& p : roots) f = f * linear_factor(p);
  return f;
}

/// Lexicographically ordered r-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

/// The (n-k) x (n+1) band matrix whose row j holds x_0..x_{k+1} in columns
/// j..j+k+1.
inline PolyMatrix band_matrix(std::size_t n, std::size_t k) {
  if (n < k) throw Error(ErrorKind::InvalidArgument, "band matrix needs n >= k");
  const std::size_t nvars = k + 2;
  PolyMatrix m(n - k, n + 1, nvars);
  for (std::size_t j = 0; j < n - k; ++j)
    for (std::size_t i = 0; i <= k + 1; ++i) m.set(j, j + i, MPoly::variable(nvars, i));
  return m;
}

struct PonceletMatrixResult {
  PolyMatrix matrix;
  /// u-exponents of the complement monomials labelling the columns.
  std::vector<std::size_t> complement;
};

inline PonceletMatrixResult poncelet_matrix(const LinearSystem& system) {
  const std::size_t n = system.n();
  const std::size_t k = system.k();
  const std::size_t nvars = k + 2;
  const auto complement = system.complement_columns();
  PolyMatrix m(n - k, complement.size(), nvars);
  std::vector<Rational> unit(n + 1, Rational(0));
  for (std::size_t j = 0; j < n - k; ++j) {
    std::vector<MPoly> row(complement.size(), MPoly(nvars));
    for (std::size_t i = 0; i <= k + 1; ++i) {
      const std::size_t l = (k + 1 - i) + j;
      unit[l] = 1;
      const auto coords = system.quotient_coordinates(unit);
      unit[l] = 0;
      for (std::size_t c = 0; c < coords.size(); ++c)
        if (sgn(coords[c]) != 0) row[c] += coords[c] * MPoly::variable(nvars, i);
    }
    for (std::size_t c = 0; c < complement.size(); ++c) m.set(j, c, std::move(row[c]));
  }
  return {std::move(m), complement};
}

/// Raw determinant of the Poncelet matrix (zero for degenerate systems).
inline MPoly poncelet_determinant(const LinearSystem& system) { return poly_matrix_det(poncelet_matrix(system).matrix); }

struct PonceletHypersurface {
  MPoly equation;
  std::vector<BinForm> source;

  std::size_t degree() const { return static_cast<std::size_t>(equation.total_degree()); }
};

/// Canonical equation of the Poncelet hypersurface. A vanishing determinant
/// is reported as a Degenerate error.
inline PonceletHypersurface poncelet_polynomial(const LinearSystem& system) {
  MPoly det = poncelet_determinant(system);
  if (det.is_zero()) throw Error(ErrorKind::Degenerate, "Poncelet determinant vanishes identically");
  return {normalize_primitive(det), system.forms()};
}

inline MPoly osculating_form(const Param& p, std::size_t k) {
  if (sgn(p.a) == 0 && sgn(p.b) == 0) throw Error(ErrorKind::InvalidArgument, "osculating form at (0:0)");
  MPoly out(k + 2);
  Rational b_power(1);
  for (std::size_t m = 0; m <= k + 1; ++m) {
    Rational c = b_power;
    for (std::size_t e = 0; e < k + 1 - m; ++e) c *= p.a;
    Exponent ex(k + 2, 0);
    ex[m] = 1;
    out.add_term(std::move(ex), c);
    b_power *= p.b;
  }
  return out;
}

namespace detail {

/// Rows are the coefficient vectors of the osculating forms at `params`.
inline Matrix<Rational> osculating_matrix(const std::vector<Param>& params, std::size_t k) {
  Matrix<Rational> m(params.size(), k + 2);
  for (std::size_t r = 0; r < params.size(); ++r) {
    const MPoly l = osculating_form(params[r], k);
    for (std::size_t c = 0; c < k + 2; ++c) {
      Exponent e(k + 2, 0);
      e[c] = 1;
      m(r, c) = l.coeff(e);
    }
  }
  return m;
}

}  // namespace detail

/// Common point of the k+1 osculating hyperplanes at distinct parameters.
inline ProjPoint vertex_point(const std::vector<Param>& params, std::size_t k) {
  if (params.size() != k + 1) throw Error(ErrorKind::InvalidArgument, "a vertex needs exactly k + 1 parameters");
  check_distinct(params);
  const auto kernel = kernel_basis(detail::osculating_matrix(params, k));
  if (kernel.size() != 1) throw Error(ErrorKind::InvalidArgument, "osculating hyperplanes are not independent");
  return ProjPoint(kernel.front());
}

/// Common line of the k osculating hyperplanes at distinct parameters.
inline ProjLine config_line(const std::vector<Param>& params, std::size_t k) {
  if (params.size() != k) throw Error(ErrorKind::InvalidArgument, "a configuration line needs exactly k parameters");
  check_distinct(params);
  const auto kernel = kernel_basis(detail::osculating_matrix(params, k));
  if (kernel.size() != 2) throw Error(ErrorKind::InvalidArgument, "osculating hyperplanes are not independent");
  return ProjLine(ProjPoint(kernel[0]), ProjPoint(kernel[1]));
}

/// alpha_a = sum_m a_m u^{k+1-m} v^m.
inline BinForm point_form(const ProjPoint& a) {
  const std::size_t k1 = a.dimension() - 1;
  BinForm f(k1);
  for (std::size_t m = 0; m <= k1; ++m) f.set_coeff(k1 - m, a.coords()[m]);
  return f;
}

/// Whether s lies in the column span of the band matrix at a, i.e. in the
/// image of V_{n-k-1} -> V_n at that point. The band pattern is written in
/// the x_{c-j} layout, so it is evaluated at the reversed coordinates.
inline bool band_membership(const BinForm& s, const ProjPoint& a) {
  const std::size_t k = a.dimension() - 2;
  const std::size_t n = s.degree();
  std::vector<Rational> reversed(a.coords().rbegin(), a.coords().rend());
  const Matrix<Rational> columns = transpose(band_matrix(n, k).evaluate(reversed));
  return solve(columns, s.coeffs()).has_value();
}

/// a lies in the zero locus of the section s iff alpha_a divides s.
/// Cross-checked against band-matrix membership.
inline bool zero_locus_check(const BinForm& s, const ProjPoint& a) {
  if (s.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero section");
  if (a.dimension() < 2) throw Error(ErrorKind::InvalidArgument, "point must live in P^{k+1} with k >= 0");
  const std::size_t k = a.dimension() - 2;
  if (s.degree() <= k) throw Error(ErrorKind::InvalidArgument, "section degree must exceed k");
  const bool by_division = divides(point_form(a), s);
  const bool by_membership = band_membership(s, a);
  if (by_division != by_membership)
    throw Error(ErrorKind::Internal, "divisibility and band-matrix membership disagree");
  return by_division;
}

/// Builds s with the given n distinct roots, checks every vertex of its zero
/// locus and returns how many there are.
inline std::size_t zero_locus_count(const std::vector<Param>& roots, std::size_t k) {
  check_distinct(roots);
  if (roots.size() <= k) throw Error(ErrorKind::InvalidArgument, "need more than k roots");
  const BinForm s = form_with_roots(roots);
  std::size_t count = 0;
  for (const auto& subset : subsets(roots.size(), k + 1)) {
    std::vector<Param> chosen;
    for (auto i : subset) chosen.push_back(roots[i]);
    if (!zero_locus_check(s, vertex_point(chosen, k)))
      throw Error(ErrorKind::Internal, "vertex outside the zero locus of its section");
    ++count;
  }
  return count;
}

inline bool is_singular_at(const MPoly& equation, const ProjPoint& a) {
  if (equation.evaluate(a.coords()) != 0) return false;
  for (std::size_t i = 0; i < equation.nvars(); ++i)
    if (derivative(equation, i).evaluate(a.coords()) != 0) return false;
  return true;
}

inline bool is_singular_at(const PonceletHypersurface& h, const ProjPoint& a) { return is_singular_at(h.equation, a); }

namespace detail {

inline std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  const mpz_class limit("1000000000000");
  mpz_class x = abs(value);
  if (x > limit) throw Error(ErrorKind::Precondition, "coefficient too large for rational root search");
  const unsigned long v = x.get_ui();
  std::vector<mpz_class> out;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.emplace_back(d);
    if (d != v / d) out.emplace_back(v / d);
  }
  return out;
}

}  // namespace detail

/// Roots (with multiplicity) of a binary form that splits into rational
/// linear factors; nullopt if some factor is irrational.
inline std::optional<std::vector<Param>> rational_roots(const BinForm& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero form");
  std::vector<Param> roots;
  const std::size_t ua = g.u_valuation();
  const std::size_t vb = g.v_valuation();
  for (std::size_t i = 0; i < ua; ++i) roots.push_back({Rational(0), Rational(1)});
  for (std::size_t i = 0; i < vb; ++i) roots.push_back({Rational(1), Rational(0)});
  const std::size_t m = g.degree() - ua - vb;
  if (m == 0) return roots;

  std::vector<Rational> core(g.coeffs().begin() + static_cast<std::ptrdiff_t>(ua),
                             g.coeffs().begin() + static_cast<std::ptrdiff_t>(ua + m + 1));
  BinForm h(m, std::move(core));
  mpz_class den = 1;
  for (const auto& c : h.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  h *= Rational(den);

  // Root u/v = p/q requires p | h[0] and q | h[m].
  const auto ps = detail::positive_divisors(h.coeff(0).get_num());
  const auto qs = detail::positive_divisors(h.coeff(m).get_num());
  for (const auto& q : qs)
    for (const auto& p : ps)
      for (int sign : {1, -1}) {
        const Param root{rational(mpz_class(p * sign), q), Rational(1)};
        while (h.degree() > 0) {
          auto quotient = try_divide(h, linear_factor(root));
          if (!quotient) break;
          h = *std::move(quotient);
          roots.push_back(root);
        }
      }
  if (h.degree() != 0) return std::nullopt;
  return roots;
}

struct BasePointFactorization {
  std::vector<Param> base_points;
  std::vector<MPoly> factors;
  MPoly residual;
  MPoly equation;
  /// Poncelet polynomial of the system divided by its base divisor.
  MPoly residual_system_equation;

  bool residual_matches() const { return proportional(residual, residual_system_equation); }
};

/// Splits the Poncelet polynomial into the osculating hyperplanes at the
/// base points and the Poncelet polynomial of the residual system. Base
/// points are detected when `roots` is not supplied.
inline BasePointFactorization factor_base_points(const LinearSystem& system,
                                                 std::optional<std::vector<Param>> roots = std::nullopt) {
  const BinForm g = base_divisor(system);
  const std::size_t k = system.k();
  const MPoly equation = poncelet_polynomial(system).equation;
  if (g.degree() == 0) return {{}, {}, equation, equation, equation};

  if (!roots) {
    roots = rational_roots(g);
    if (!roots) throw Error(ErrorKind::Precondition, "base divisor " + to_string(g) + " is not a product of rational linear forms");
  } else if (monic(form_with_roots(*roots)) != g) {
    throw Error(ErrorKind::InvalidArgument, "supplied roots do not match the base divisor " + to_string(g));
  }

  BasePointFactorization out{*roots, {}, equation, equation, MPoly(k + 2)};
  for (const auto& p : out.base_points) {
    MPoly l = normalize_primitive(osculating_form(p, k));
    out.residual = divexact_mpoly(out.residual, l);
    out.factors.push_back(std::move(l));
  }

  std::vector<BinForm> reduced;
  for (const auto& f : system.forms()) reduced.push_back(divexact(f, g));
  out.residual_system_equation = poncelet_polynomial(LinearSystem(std::move(reduced))).equation;
  return out;
}

struct LineCheck {
  std::vector<std::size_t> subset;
  ProjLine line;
  bool contained = false;
};

struct VertexCheck {
  std::vector<std::size_t> subset;
  ProjPoint point;
  bool singular = false;
};

/// Line configuration of a system with a linear syzygy and the checks run
/// against its Poncelet hypersurface.
struct ConfigReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<Param> params;
  std::vector<BinForm> forms;
  MPoly equation;
  std::vector<LineCheck> lines;
  std::vector<VertexCheck> vertices;
  /// The configuration lines span P^{k+1}.
  bool lines_span_space = false;
  bool vertices_distinct = false;

  std::size_t lines_contained() const {
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const auto& l) { return l.contained; }));
  }
  std::size_t vertices_singular() const {
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(), [](const auto& v) { return v.singular; }));
  }
  bool pass() const {
    return lines.size() == binomial(n - 1, k) && vertices.size() == binomial(n - 1, k + 1) &&
           lines_contained() == lines.size() && vertices_singular() == vertices.size() && lines_span_space &&
           vertices_distinct;
  }
};

/// Builds Lambda = <u f, v f, random completion> with f vanishing at the
/// n-1 given parameters, and checks that its Poncelet hypersurface contains
/// every configuration line and is singular at every vertex.
inline ConfigReport verify_teorema(std::size_t n, std::size_t k, const std::vector<Param>& params, std::uint64_t seed,
                                   int budget = kDefaultRetryBudget) {
  if (k < 1 || params.size() + 1 != n || n < k + 2)
    throw Error(ErrorKind::InvalidArgument, "verify_teorema needs k >= 1 and n - 1 >= k + 1 parameters");
  check_distinct(params);

  const BinForm f = form_with_roots(params);
  SeededRng rng(seed);
  std::optional<LinearSystem> system;
  MPoly equation(k + 2);
  for (int attempt = 0; attempt < budget && !system; ++attempt) {
    std::vector<BinForm> forms{BinForm::monomial(1, 0) * f, BinForm::monomial(0, 1) * f};
    while (forms.size() < k + 1) forms.push_back(rng.form(n));
    try {
      LinearSystem candidate(std::move(forms));
      if (base_divisor(candidate).degree() != 0) continue;
      equation = poncelet_polynomial(candidate).equation;
      system = std::move(candidate);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidArgument && e.kind() != ErrorKind::Degenerate) throw;
    }
  }
  if (!system) throw Error(ErrorKind::RetryExhausted, "could not complete <u f, v f> to a nondegenerate system");

  ConfigReport report;
  report.n = n;
  report.k = k;
  report.seed = seed;
  report.params = params;
  report.forms = system->forms();
  report.equation = equation;

  std::vector<std::vector<Rational>> span_rows;
  for (const auto& subset : subsets(params.size(), k)) {
    std::vector<Param> chosen;
    for (auto i : subset) chosen.push_back(params[i]);
    ProjLine line = config_line(chosen, k);
    const bool contained = restrict_to_line(equation, line).is_zero();
    span_rows.emplace_back(line.first().coords().begin(), line.first().coords().end());
    span_rows.emplace_back(line.second().coords().begin(), line.second().coords().end());
    report.lines.push_back({subset, std::move(line), contained});
  }
  Matrix<Rational> span_matrix(span_rows.size(), k + 2);
  for (std::size_t r = 0; r < span_rows.size(); ++r)
    for (std::size_t c = 0; c < k + 2; ++c) span_matrix(r, c) = span_rows[r][c];
  report.lines_span_space = rank(span_matrix) == k + 2;

  for (const auto& subset : subsets(params.size(), k + 1)) {
    std::vector<Param> chosen;
    for (auto i : subset) chosen.push_back(params[i]);
    ProjPoint point = vertex_point(chosen, k);
    const bool singular = is_singular_at(equation, point);
    report.vertices.push_back({subset, std::move(point), singular});
  }
  report.vertices_distinct = true;
  for (std::size_t i = 0; i < report.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < report.vertices.size(); ++j)
      if (report.vertices[i].point == report.vertices[j].point) report.vertices_distinct = false;
  return report;
}

/// Whether all vertices of Z(s), s = sum combination_i f_i with the given n
/// distinct roots, lie on the Poncelet hypersurface of the system.
inline bool vertices_on_hypersurface(const LinearSystem& system, const std::vector<Rational>& combination,
                                     const std::vector<Param>& roots) {
  if (combination.size() != system.k() + 1)
    throw Error(ErrorKind::InvalidArgument, "combination needs one coefficient per basis form");
  check_distinct(roots);
  if (roots.size() != system.n()) throw Error(ErrorKind::InvalidArgument, "need exactly n distinct roots");
  BinForm s(system.n());
  for (std::size_t i = 0; i < combination.size(); ++i) s += combination[i] * system.forms()[i];
  if (s.is_zero()) throw Error(ErrorKind::InvalidArgument, "chosen member is the zero form");
  for (const auto& p : roots)
    if (eval(s, p.a, p.b) != 0) throw Error(ErrorKind::InvalidArgument, "claimed root " + to_string(p) + " is not a root");

  const MPoly equation = poncelet_polynomial(system).equation;
  const std::size_t k = system.k();
  for (const auto& subset : subsets(roots.size(), k + 1)) {
    std::vector<Param> chosen;
    for (auto i : subset) chosen.push_back(roots[i]);
    if (equation.evaluate(vertex_point(chosen, k).coords()) != 0) return false;
  }
  return true;
}

/// Pairwise distinct parameters with small integer entries.
inline std::vector<Param> random_params(SeededRng& rng, std::size_t count, std::int64_t bound = 9) {
  std::vector<Param> out;
  while (out.size() < count) {
    Param p{Rational(static_cast<long>(rng.uniform(-bound, bound))), Rational(static_cast<long>(rng.uniform(0, bound)))};
    if (sgn(p.a) == 0 && sgn(p.b) == 0) continue;
    if (std::any_of(out.begin(), out.end(), [&](const Param& q) { return projectively_equal(p, q); })) continue;
    out.push_back(std::move(p));
  }
  return out;
}

struct PlantedSystem {
  LinearSystem system;
  std::vector<Param> base_points;
};

/// g * <h_0, ..., h_k> with g a product of `base_degree` distinct rational
/// linear forms and h_i random forms of degree n - base_degree without
/// common factors.
inline PlantedSystem planted_base_point_system(std::size_t n, std::size_t k, std::size_t base_degree,
                                               std::uint64_t seed, int budget = kDefaultRetryBudget) {
  if (base_degree == 0 || base_degree + k > n)
    throw Error(ErrorKind::Precondition, "planted base divisor must have degree between 1 and n - k");
  SeededRng rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Param> roots = random_params(rng, base_degree);
    const BinForm g = form_with_roots(roots);
    std::vector<BinForm> residual;
    for (std::size_t i = 0; i <= k; ++i) residual.push_back(rng.form(n - base_degree));
    try {
      LinearSystem reduced(residual);
      if (base_divisor(reduced).degree() != 0) continue;
      if (poncelet_determinant(reduced).is_zero()) continue;
      std::vector<BinForm> forms;
      for (const auto& h : residual) forms.push_back(g * h);
      return {LinearSystem(std::move(forms)), std::move(roots)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidArgument) throw;
    }
  }
  throw Error(ErrorKind::RetryExhausted, "could not plant a base divisor");
}

/// Tallies of random zero-locus probes comparing divisibility with
/// band-matrix membership.
struct ZeroLocusProbeSummary {
  std::size_t probes = 0;
  std::size_t disagreements = 0;
  std::size_t vertex_probes = 0;
  std::size_t vertex_hits = 0;
  std::size_t off_vertex_probes = 0;
  std::size_t off_vertex_hits = 0;

  bool pass() const {
    return disagreements == 0 && vertex_hits == vertex_probes && off_vertex_hits == 0;
  }
};

/// Each probe draws a section with n distinct rational roots, then either
/// one of its vertices or a random integer point that is not a vertex.
inline ZeroLocusProbeSummary zero_locus_probes(std::size_t n, std::size_t k, std::size_t probes, std::uint64_t seed) {
  if (n <= k) throw Error(ErrorKind::InvalidArgument, "need n > k");
  SeededRng rng(seed);
  ZeroLocusProbeSummary out;
  for (std::size_t t = 0; t < probes; ++t) {
    const auto roots = random_params(rng, n);
    const BinForm s = form_with_roots(roots);
    const auto all_subsets = subsets(n, k + 1);
    std::vector<ProjPoint> vertices;
    for (const auto& subset : all_subsets) {
      std::vector<Param> chosen;
      for (auto i : subset) chosen.push_back(roots[i]);
      vertices.push_back(vertex_point(chosen, k));
    }

    const bool at_vertex = rng.uniform(0, 1) == 0;
    std::optional<ProjPoint> a;
    if (at_vertex) {
      a = vertices[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(vertices.size()) - 1))];
    } else {
      while (!a) {
        std::vector<Rational> coords;
        for (std::size_t i = 0; i < k + 2; ++i) coords.emplace_back(static_cast<long>(rng.uniform(-9, 9)));
        if (std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
        ProjPoint candidate(std::move(coords));
        if (std::find(vertices.begin(), vertices.end(), candidate) == vertices.end()) a = std::move(candidate);
      }
    }

    const bool by_division = divides(point_form(*a), s);
    const bool by_membership = band_membership(s, *a);
    ++out.probes;
    if (by_division != by_membership) ++out.disagreements;
    if (at_vertex) {
      ++out.vertex_probes;
      if (by_division) ++out.vertex_hits;
    } else {
      ++out.off_vertex_probes;
      if (by_division) ++out.off_vertex_hits;
    }
  }
  return out;
}

}  // namespace ponsyz
