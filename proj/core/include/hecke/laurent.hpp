#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// Integer Laurent polynomial in one variable q. Stored densely from the
/// lowest nonzero exponent; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  /// Takes coefficients for q^low, q^{low+1}, ...
  LaurentPoly(int low, std::vector<mpz_class> coeffs);

  static LaurentPoly monomial(int exp, const mpz_class& c = 1);
  static LaurentPoly q() { return monomial(1); }
  /// [k]_q = 1 + q + ... + q^{k-1}.
  static LaurentPoly q_integer(int k);
  /// Product of [j]_q over j = 1..k.
  static LaurentPoly q_factorial(int k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Nonzero single term c q^k.
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Exponent of the lowest and highest nonzero term (zero polynomial: 0).
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int exp) const;
  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, mpz_class>> terms() const;
  const std::vector<mpz_class>& dense() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }

  /// Substitution q -> q^{-1}.
  LaurentPoly bar() const;
  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  /// Exact quotient in Z[q, q^{-1}] if `d` divides this, otherwise nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  mpq_class eval(const mpq_class& x) const;
  /// "3q^-1 + 1 - q^2"-style rendering; "0" for zero.
  std::string to_string() const;
  /// Sparse exponent -> coefficient map, both as decimal strings.
  std::map<std::string, std::string> to_sparse() const;
  static LaurentPoly from_sparse(const std::map<std::string, std::string>& m);

 private:
  void normalize();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Polynomial part of p after clearing the lowest q-power: returns (k, f)
/// with p = q^k f, f in Z[q], f(0) != 0.
std::pair<int, std::vector<mpz_class>> split_q_power(const LaurentPoly& p);

/// Integer coefficients of the e-th cyclotomic polynomial, ascending.
const std::vector<mpz_class>& cyclotomic_polynomial(int e);

/// Multiplicity of Phi_e in p for 2 <= e <= e_max; only positive entries
/// are reported. Throws std::invalid_argument on the zero polynomial.
std::map<int, int> cyclotomic_root_multiplicities(const LaurentPoly& p, int e_max);

/// Balanced base-2^bits decoding of x = sum c_k Q^k (Q = 2^bits) into a
/// Laurent polynomial. Returns nullopt if x is not of that form with
/// |c_k| < Q/2.
std::optional<LaurentPoly> decode_at_power_of_two(const mpq_class& x, unsigned bits);

}  // namespace hecke
