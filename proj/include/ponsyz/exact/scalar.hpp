#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "ponsyz/error.hpp"

namespace ponsyz {

/// Arbitrary-precision rational, always kept in lowest terms by gmpxx
/// arithmetic. Values built from a numerator/denominator pair must go
/// through `rational()` so they are canonicalized.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Element of the prime field Z/PZ, stored as the reduced representative
/// in [0, P). Used for fast randomized rank checks; conclusions drawn in
/// this field are probabilistic.
template <std::uint32_t P = 2147483647u>
class ModP {
  static_assert(P > 2 && P % 2 == 1, "modulus must be an odd prime");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr ModP() = default;
  constexpr ModP(std::int64_t value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::uint32_t>(((value % std::int64_t{P}) + P) % P)) {}

  constexpr std::uint32_t value() const { return value_; }

  constexpr ModP& operator+=(ModP o) {
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + o.value_) % P);
    return *this;
  }
  constexpr ModP& operator-=(ModP o) {
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + P - o.value_) % P);
    return *this;
  }
  constexpr ModP& operator*=(ModP o) {
    value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % P);
    return *this;
  }
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }

  friend constexpr ModP operator+(ModP a, ModP b) { return a += b; }
  friend constexpr ModP operator-(ModP a, ModP b) { return a -= b; }
  friend constexpr ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  constexpr ModP operator-() const { return ModP{} - *this; }
  friend constexpr bool operator==(ModP a, ModP b) = default;

  ModP inverse() const {
    if (value_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero in prime field");
    // Fermat: a^(P-2)
    ModP result{1};
    ModP base = *this;
    std::uint32_t e = P - 2;
    while (e != 0) {
      if (e & 1u) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.value_; }

 private:
  std::uint32_t value_ = 0;
};

template <std::uint32_t P>
bool is_zero(const ModP<P>& a) {
  return a.value() == 0;
}

/// Reduces an integral rational into the prime field. The denominator must
/// be invertible modulo P.
template <std::uint32_t P>
ModP<P> reduce_mod(const Rational& q) {
  const mpz_class p{static_cast<unsigned long>(P)};
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator vanishes modulo P");
  return ModP<P>(static_cast<std::int64_t>(num.get_ui())) /
         ModP<P>(static_cast<std::int64_t>(den.get_ui()));
}

}  // namespace ponsyz
