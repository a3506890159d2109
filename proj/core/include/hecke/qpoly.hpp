#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

/// Polynomial in q with rational coefficients, stored ascending and trimmed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  QPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly from_integers(const std::vector<mpz_class>& coeffs);
  static QPoly monomial(int exp, const mpq_class& c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : mpq_class(0); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  /// Quotient and remainder; throws on division by zero.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly monic() const;
  QPoly scaled(const mpq_class& s) const;
  mpq_class eval(const mpq_class& x) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Monic greatest common divisor (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);

/// Element of Q(q) as a reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const QPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Multiplicity of the irreducible polynomial `p` in num minus that in den.
  int valuation(const QPoly& p) const;
  /// The element as a Laurent polynomial, if it is one with integer coefficients.
  std::optional<LaurentPoly> to_laurent() const;
  std::string to_string() const;

 private:
  void reduce();
  QPoly num_;
  QPoly den_;
};

}  // namespace hecke
