#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

/// A reduced rational c = num/den in (-1/2, 1/2], the angle of q = exp(2 pi i c).
class RationalC {
 public:
  RationalC() = default;
  /// Throws std::invalid_argument if den <= 0 or the value lies outside (-1/2, 1/2].
  RationalC(long num, long den);
  explicit RationalC(const mpq_class& value);
  /// Parses "r/m", "-r/m" or an integer ("0").
  static RationalC parse(std::string_view text);

  long num() const { return num_; }
  long den() const { return den_; }
  mpq_class value() const { return mpq_class(num_, den_); }
  std::string to_string() const;

  std::strong_ordering operator<=>(const RationalC& o) const { return cmp(value(), o.value()) <=> 0; }
  bool operator==(const RationalC& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  long num_ = 0;
  long den_ = 1;
};

/// Order of q = exp(2 pi i c), i.e. the smallest e with [e]_q = 0;
/// nullopt stands for e = infinity (c = 0).
std::optional<int> smallest_e(const RationalC& c);

/// Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1} modulo
/// Phi_m, under the embedding zeta_m -> exp(2 pi i / m). Coordinates share
/// one positive denominator.
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(long c);  // NOLINT(google-explicit-constructor)
  CycloNum(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  /// zeta_m^k.
  static CycloNum zeta(int m, long k = 1);
  /// sum over j of coeffs[j] zeta_m^j (any length; exponents taken mod m).
  static CycloNum from_powers(int m, const std::vector<mpz_class>& coeffs, const mpz_class& den = 1);
  /// Rational coordinates of length phi(m).
  static CycloNum from_coords(int m, const std::vector<mpq_class>& coords);

  int conductor() const { return m_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  mpq_class rational_value() const;
  std::vector<mpq_class> coords() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  /// The same element written over conductor m2 (a multiple of conductor()).
  CycloNum promoted(int m2) const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  CycloNum operator-() const;
  bool operator==(const CycloNum& o) const;

  CycloNum inverse() const;
  /// Field automorphism zeta -> zeta^{-1} (complex conjugation).
  CycloNum conj() const;
  /// Field automorphism zeta -> zeta^k for k coprime to the conductor.
  CycloNum galois(int k) const;
  bool is_real() const { return conj() == *this; }

  /// Floating approximation of the real and imaginary parts (diagnostics only).
  std::pair<double, double> approx() const;
  std::string to_string() const;

 private:
  void normalize();
  int m_ = 1;
  std::vector<mpz_class> num_;  // length phi(m_), empty when zero
  mpz_class den_ = 1;
};

int euler_phi(int m);

/// p evaluated at q = exp(2 pi i c) inside Q(zeta_den).
CycloNum specialize(const LaurentPoly& p, const RationalC& c);

/// q = exp(2 pi i c) as an element of Q(zeta_den).
CycloNum q_at(const RationalC& c);

/// If x = zeta_N^j for some N dividing 2*conductor (or the conductor itself),
/// returns (N, j) with N minimal.
std::optional<std::pair<int, int>> as_root_of_unity(const CycloNum& x);

}  // namespace hecke
