#pragma once

#include "hecke/cyclo.hpp"

namespace hecke {

struct SignCert {
  CycloNum value;
  int sign = 0;
  /// Working precision (bits) at which the enclosure excluded zero; 0 when
  /// the sign was decided exactly.
  unsigned precision_used = 0;
};

/// Certified sign of a real cyclotomic number under zeta_m -> exp(2 pi i/m).
/// Throws std::invalid_argument if conj(x) != x.
SignCert sign_of_real(const CycloNum& x, unsigned start_bits = 64);

/// Default starting precision: HECKE_PRECISION_BITS if set, else 64.
unsigned default_precision_bits();

}  // namespace hecke
