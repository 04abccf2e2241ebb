#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ponsyz/binform.hpp"
#include "ponsyz/error.hpp"
#include "ponsyz/exact/matrix.hpp"
#include "ponsyz/laplace.hpp"
#include "ponsyz/random.hpp"

namespace ponsyz {

/// A (k+1)-dimensional subspace of V_n, held by a basis f_0..f_k. The
/// basis must be linearly independent, which forces k <= n; k = n (the
/// whole of V_n) is allowed.
class LinearSystem {
 public:
  explicit LinearSystem(std::vector<BinForm> forms) : forms_(std::move(forms)) {
    if (forms_.empty()) throw Error(ErrorKind::InvalidArgument, "a linear system needs at least one form");
    const std::size_t n = forms_.front().degree();
    for (const auto& f : forms_)
      if (f.degree() != n) throw Error(ErrorKind::InvalidArgument, "all forms of a linear system must share one degree");
    echelon_ = row_reduce(basis_matrix());
    if (echelon_.rank() != forms_.size())
      throw Error(ErrorKind::InvalidArgument, "basis forms of a linear system are linearly dependent");
  }

  std::size_t n() const { return forms_.front().degree(); }
  std::size_t k() const { return forms_.size() - 1; }
  const std::vector<BinForm>& forms() const { return forms_; }

  /// (k+1) x (n+1) coefficient matrix, row i = f_i.
  Matrix<Rational> basis_matrix() const {
    Matrix<Rational> m(forms_.size(), n() + 1);
    for (std::size_t i = 0; i < forms_.size(); ++i)
      for (std::size_t c = 0; c <= n(); ++c) m(i, c) = forms_[i].coeff(c);
    return m;
  }

  /// Coefficient indices (u-exponents) not used as pivots by the reduced
  /// basis. The monomials u^c v^(n-c) for these c span a complement of the
  /// system in V_n.
  std::vector<std::size_t> complement_columns() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c <= n(); ++c) {
      if (p < echelon_.pivots.size() && echelon_.pivots[p] == c) {
        ++p;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  /// Coordinates of the class of `w` in V_n / span, in the complement basis.
  std::vector<Rational> quotient_coordinates(std::span<const Rational> w) const {
    if (w.size() != n() + 1) throw Error(ErrorKind::InvalidArgument, "vector length differs from n + 1");
    std::vector<Rational> reduced(w.begin(), w.end());
    for (std::size_t r = 0; r < echelon_.pivots.size(); ++r) {
      const Rational factor = reduced[echelon_.pivots[r]];
      if (sgn(factor) == 0) continue;
      for (std::size_t c = 0; c <= n(); ++c) reduced[c] -= factor * echelon_.reduced(r, c);
    }
    std::vector<Rational> out;
    for (auto c : complement_columns()) out.push_back(reduced[c]);
    return out;
  }

  bool contains(const BinForm& f) const {
    if (f.degree() != n()) return false;
    const auto q = quotient_coordinates(f.coeffs());
    return std::all_of(q.begin(), q.end(), [](const Rational& c) { return sgn(c) == 0; });
  }

 private:
  std::vector<BinForm> forms_;
  Echelon<Rational> echelon_;
};

/// Twists b_1 <= ... <= b_k of the kernel bundle plus the degree of the
/// base divisor; parts sum to n - base_degree.
struct SplittingType {
  std::vector<unsigned> parts;
  unsigned base_degree = 0;

  unsigned sum() const {
    unsigned s = 0;
    for (auto b : parts) s += b;
    return s;
  }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

inline std::string to_string(const SplittingType& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "," : "") + std::to_string(s.parts[i]);
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const SplittingType& s) { return os << to_string(s); }

/// A degree-d relation (g_0, ..., g_k) with sum g_i f_i = 0.
struct Syzygy {
  std::size_t degree = 0;
  std::vector<BinForm> entries;
};

/// Multiplication map Lambda (x) V_d -> V_{n+d}. Column i*(d+1) + j holds
/// the coefficients of f_i * u^j v^(d-j).
inline Matrix<Rational> build_phi(const LinearSystem& system, std::size_t d) {
  const std::size_t n = system.n();
  const std::size_t forms = system.k() + 1;
  Matrix<Rational> phi(n + d + 1, forms * (d + 1));
  for (std::size_t i = 0; i < forms; ++i) {
    const BinForm& f = system.forms()[i];
    for (std::size_t j = 0; j <= d; ++j)
      for (std::size_t a = 0; a <= n; ++a) phi(a + j, i * (d + 1) + j) = f.coeff(a);
  }
  return phi;
}

inline std::size_t syzygy_count(const LinearSystem& system, std::size_t d) {
  return (system.k() + 1) * (d + 1) - rank(build_phi(system, d));
}

inline std::vector<Syzygy> syzygy_basis(const LinearSystem& system, std::size_t d) {
  const std::size_t forms = system.k() + 1;
  std::vector<Syzygy> out;
  for (const auto& vec : kernel_basis(build_phi(system, d))) {
    Syzygy s{d, {}};
    for (std::size_t i = 0; i < forms; ++i) {
      std::vector<Rational> c(vec.begin() + static_cast<std::ptrdiff_t>(i * (d + 1)),
                              vec.begin() + static_cast<std::ptrdiff_t>((i + 1) * (d + 1)));
      s.entries.emplace_back(d, std::move(c));
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// sum g_i f_i, which is zero for a genuine syzygy.
inline BinForm apply_syzygy(const LinearSystem& system, const Syzygy& s) {
  BinForm total(system.n() + s.degree);
  for (std::size_t i = 0; i < s.entries.size(); ++i) total += s.entries[i] * system.forms()[i];
  return total;
}

/// r(d) for d = 0..max_degree.
inline std::vector<std::size_t> syzygy_counts(const LinearSystem& system, std::size_t max_degree) {
  std::vector<std::size_t> r;
  for (std::size_t d = 0; d <= max_degree; ++d) r.push_back(syzygy_count(system, d));
  return r;
}

inline BinForm base_divisor(const LinearSystem& system) { return gcd_forms(system.forms()); }

/// Recovers the splitting from first differences of r(d): the number of
/// parts <= d equals r(d) - r(d-1).
inline SplittingType splitting_type(const LinearSystem& system) {
  SplittingType s;
  s.base_degree = static_cast<unsigned>(base_divisor(system).degree());
  const std::size_t k = system.k();
  std::size_t previous_r = 0;
  std::size_t previous_at_most = 0;
  for (std::size_t d = 1; d <= system.n() && s.parts.size() < k; ++d) {
    const std::size_t r = syzygy_count(system, d);
    const std::size_t at_most = r - previous_r;
    for (std::size_t c = previous_at_most; c < at_most; ++c) s.parts.push_back(static_cast<unsigned>(d));
    previous_r = r;
    previous_at_most = at_most;
  }
  if (s.parts.size() != k || s.sum() + s.base_degree != system.n())
    throw Error(ErrorKind::Internal, "splitting recovery did not account for every summand");
  return s;
}

/// h^0(E(d)) for a bundle with the given splitting: sum of max(0, d - b + 1).
inline std::size_t expected_syzygy_count(const SplittingType& s, std::size_t d) {
  std::size_t r = 0;
  for (auto b : s.parts)
    if (d + 1 > b) r += d + 1 - b;
  return r;
}

/// r (n + r - (d+1) k); may be negative when the stratum fills the Grassmannian.
inline long expected_codim(long k, long n, long r, long d) { return r * (n + r - (d + 1) * k); }

/// Splitting of a general member of the stratum: d (r times), then the
/// remaining degree n - d r spread as evenly as possible over k - r parts.
inline SplittingType generic_splitting(long k, long n, long r, long d) {
  auto none = [&](const char* why) {
    std::ostringstream os;
    os << "no generic stratum member with k=" << k << " n=" << n << " r=" << r << " d=" << d << ": " << why;
    return Error(ErrorKind::Precondition, os.str());
  };
  if (k < 1 || n <= k || r < 1 || r > k || d < 0) throw none("parameters out of range");
  SplittingType s;
  if (r == k) {
    if (n != d * k) throw none("r = k forces n = d k");
    s.parts.assign(static_cast<std::size_t>(k), static_cast<unsigned>(d));
    return s;
  }
  const long rest = n - d * r;
  const long a = rest / (k - r);
  const long b = rest % (k - r);
  if (a <= d) throw none("the remaining summands would not exceed d");
  s.parts.assign(static_cast<std::size_t>(r), static_cast<unsigned>(d));
  s.parts.insert(s.parts.end(), static_cast<std::size_t>(k - r - b), static_cast<unsigned>(a));
  s.parts.insert(s.parts.end(), static_cast<std::size_t>(b), static_cast<unsigned>(a + 1));
  return s;
}

/// h^1(E (x) E^dual) = sum over ordered pairs of max(0, b_i - b_j - 1).
inline long h1_end(const SplittingType& s) {
  if (s.base_degree != 0) throw Error(ErrorKind::Precondition, "h1_end applies only to base-point-free systems");
  long total = 0;
  for (auto bi : s.parts)
    for (auto bj : s.parts) total += std::max(0L, static_cast<long>(bi) - static_cast<long>(bj) - 1);
  return total;
}

/// Codimension of the tangent space to the stratum {rank Phi_d <= rank at
/// this system}: the rank of Hom(Lambda, V_n/Lambda) -> Hom(ker, coker).
inline long tangent_codim(const LinearSystem& system, std::size_t d) {
  if (base_divisor(system).degree() != 0)
    throw Error(ErrorKind::Precondition, "tangent_codim requires a base-point-free system");
  const Matrix<Rational> phi = build_phi(system, d);
  const auto kernel = kernel_basis(phi);
  if (kernel.empty()) throw Error(ErrorKind::Precondition, "tangent_codim requires at least one syzygy of degree d");
  const auto functionals = cokernel_basis(phi);
  const auto complement = system.complement_columns();

  const std::size_t forms = system.k() + 1;
  Matrix<Rational> map(forms * complement.size(), kernel.size() * functionals.size());
  for (std::size_t i = 0; i < forms; ++i)
    for (std::size_t ci = 0; ci < complement.size(); ++ci) {
      const std::size_t row = i * complement.size() + ci;
      const std::size_t c = complement[ci];
      for (std::size_t a = 0; a < kernel.size(); ++a)
        for (std::size_t b = 0; b < functionals.size(); ++b) {
          // Perturbing f_i by u^c v^(n-c) sends kernel vector a to
          // sum_j kernel[a][i, j] e_{c+j}; pair it with functional b.
          Rational value(0);
          for (std::size_t j = 0; j <= d; ++j) value += kernel[a][i * (d + 1) + j] * functionals[b][c + j];
          map(row, a * functionals.size() + b) = value;
        }
    }
  return static_cast<long>(rank(map));
}

inline constexpr int kDefaultRetryBudget = 50;

/// Signed maximal minors of a random (k+1) x k matrix whose column j has
/// forms of degree parts[j]. The result has exactly the requested
/// splitting; draws repeat until it does.
inline LinearSystem hilbert_burch_sample(const SplittingType& target, std::uint64_t seed,
                                         int budget = kDefaultRetryBudget) {
  const std::size_t k = target.parts.size();
  if (k == 0 || target.base_degree != 0)
    throw Error(ErrorKind::Precondition, "Hilbert-Burch sampling needs at least one part and no base divisor");
  if (!std::is_sorted(target.parts.begin(), target.parts.end()) ||
      std::any_of(target.parts.begin(), target.parts.end(), [](unsigned b) { return b == 0; }))
    throw Error(ErrorKind::Precondition, "parts must be positive and sorted");

  SeededRng rng(seed);
  const BinForm one = BinForm::monomial(0, 0);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::vector<BinForm>> s(k + 1);
    for (auto& row : s)
      for (std::size_t j = 0; j < k; ++j) row.push_back(rng.form(target.parts[j]));

    std::vector<BinForm> minors;
    for (std::size_t skip = 0; skip <= k; ++skip) {
      auto entry = [&](std::size_t i, std::size_t j) -> const BinForm& { return s[i < skip ? i : i + 1][j]; };
      BinForm m = laplace_det(k, entry, one);
      minors.push_back(skip % 2 == 0 ? std::move(m) : -m);
    }
    try {
      LinearSystem system(std::move(minors));
      if (splitting_type(system) == target) return system;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidArgument) throw;
    }
  }
  throw Error(ErrorKind::RetryExhausted, "Hilbert-Burch sampling exhausted its retry budget");
}

/// Shape of a system with a linear syzygy: f of degree n-1 with u f and v f
/// in the system, plus a basis starting (u f, v f).
struct LinearSyzygyForm {
  BinForm f;
  Syzygy syzygy;
  std::vector<BinForm> basis;
};

inline std::optional<LinearSyzygyForm> normalize_linear_syzygy(const LinearSystem& system) {
  auto syzygies = syzygy_basis(system, 1);
  if (syzygies.empty()) return std::nullopt;
  Syzygy s = std::move(syzygies.front());

  // g_i = alpha_i u + beta_i v, so u (sum alpha f) = -v (sum beta f).
  const std::size_t n = system.n();
  BinForm beta_sum(n);
  BinForm alpha_sum(n);
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    beta_sum += s.entries[i].coeff(0) * system.forms()[i];
    alpha_sum += s.entries[i].coeff(1) * system.forms()[i];
  }
  const BinForm f = divexact(beta_sum, BinForm::monomial(1, 0));
  const Rational scale = Rational(1) / f.coeff(f.degree() - f.v_valuation());
  const BinForm f_monic = f * scale;
  for (auto& g : s.entries) g *= scale;
  if (alpha_sum * scale != -(BinForm::monomial(0, 1) * f_monic))
    throw Error(ErrorKind::Internal, "linear syzygy does not factor through a common form");

  LinearSyzygyForm out{f_monic, std::move(s), {}};
  out.basis = {BinForm::monomial(1, 0) * f_monic, BinForm::monomial(0, 1) * f_monic};
  for (const auto& g : system.forms()) {
    if (out.basis.size() == system.k() + 1) break;
    Matrix<Rational> trial(out.basis.size() + 1, n + 1);
    for (std::size_t i = 0; i < out.basis.size(); ++i)
      for (std::size_t c = 0; c <= n; ++c) trial(i, c) = out.basis[i].coeff(c);
    for (std::size_t c = 0; c <= n; ++c) trial(out.basis.size(), c) = g.coeff(c);
    if (rank(trial) == out.basis.size() + 1) out.basis.push_back(g);
  }
  return out;
}

/// Outcome of one stratum codimension trial.
struct StratumReport {
  long k = 0;
  long n = 0;
  long d = 0;
  long r = 0;
  std::uint64_t seed = 0;
  long expected_codim = 0;
  long tangent_codim = 0;
  long h1_codim = 0;
  SplittingType splitting;
  std::vector<BinForm> forms;

  bool agree() const { return expected_codim == tangent_codim && tangent_codim == h1_codim; }
};

/// Samples general members of the stratum of systems with r syzygies of
/// degree d and compares three codimension counts. Trial t uses seed + t.
inline std::vector<StratumReport> verify_dime(long k, long n, long r, long d, int trials, std::uint64_t seed) {
  const long expected = expected_codim(k, n, r, d);
  if (expected < 0) throw Error(ErrorKind::Precondition, "expected codimension is negative");
  const SplittingType splitting = generic_splitting(k, n, r, d);
  std::vector<StratumReport> reports;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    const LinearSystem system = hilbert_burch_sample(splitting, trial_seed);
    StratumReport rep;
    rep.k = k;
    rep.n = n;
    rep.d = d;
    rep.r = r;
    rep.seed = trial_seed;
    rep.expected_codim = expected;
    rep.splitting = splitting_type(system);
    rep.tangent_codim = tangent_codim(system, static_cast<std::size_t>(d));
    rep.h1_codim = h1_end(rep.splitting);
    rep.forms = system.forms();
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace ponsyz
