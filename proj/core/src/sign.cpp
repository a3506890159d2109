#include "hecke/sign.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hecke {

namespace {

// cos(2 pi j / m) rounded at `bits`, returned exactly as a rational. The
// absolute error is below 2^(5 - bits): the angle carries three roundings of
// relative size 2^-bits on a magnitude below 2 pi, and cos is 1-Lipschitz.
mpq_class cos_approx(long j, long m, mpfr_prec_t bits) {
  mpfr_t x;
  mpfr_init2(x, bits);
  mpfr_const_pi(x, MPFR_RNDN);
  mpfr_mul_ui(x, x, static_cast<unsigned long>(2 * j), MPFR_RNDN);
  mpfr_div_ui(x, x, static_cast<unsigned long>(m), MPFR_RNDN);
  mpfr_cos(x, x, MPFR_RNDN);
  mpq_class out;
  mpfr_get_q(out.get_mpq_t(), x);
  mpfr_clear(x);
  return out;
}

}  // namespace

unsigned default_precision_bits() {
  if (const char* env = std::getenv("HECKE_PRECISION_BITS")) {
    try {
      const long v = std::stol(env);
      if (v >= 16 && v <= (1L << 20)) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 64;
}

SignCert sign_of_real(const CycloNum& x, unsigned start_bits) {
  if (!x.is_real()) throw std::invalid_argument("sign_of_real: value is not real");
  SignCert cert{x, 0, 0};
  if (x.is_zero()) return cert;
  if (x.is_rational()) {
    cert.sign = sgn(x.rational_value());
    return cert;
  }
  const long m = x.conductor();
  const auto& num = x.numerators();
  mpz_class weight = 0;
  for (const auto& c : num) weight += abs(c);
  for (unsigned bits = std::max(start_bits, 16u); bits <= (1u << 22); bits *= 2) {
    mpq_class sum = 0;
    for (std::size_t j = 0; j < num.size(); ++j)
      if (num[j] != 0) sum += num[j] * cos_approx(static_cast<long>(j), m, static_cast<mpfr_prec_t>(bits));
    // |true - sum| <= weight * 2^(5 - bits); the common denominator is positive.
    mpq_class err(weight);
    err.get_den() <<= (bits - 5);
    err.canonicalize();
    if (abs(sum) > err) {
      cert.sign = sgn(sum);
      cert.precision_used = bits;
      return cert;
    }
  }
  throw std::runtime_error("sign_of_real: precision limit reached");
}

}  // namespace hecke
