#include "hecke/specht.hpp"

namespace hecke {

namespace {

CycloNum square_root_on_circle(const CycloNum& c) {
  const auto root = as_root_of_unity(c);
  if (!root) throw std::logic_error("form ratio is not a root of unity: " + c.to_string());
  const auto [order, j] = *root;
  if (j % 2 == 0) return CycloNum::zeta(order, j / 2);
  if (order % 2 == 1) return CycloNum::zeta(order, (j + order) / 2);
  return CycloNum::zeta(2 * order, j);
}

void hermitianize(HermitianGram& out, const Matrix<CycloNum>& b) {
  const int d = b.rows();
  int pi = -1;
  int pj = -1;
  for (int i = 0; i < d && pi < 0; ++i)
    for (int j = 0; j < d; ++j)
      if (!b(i, j).is_zero()) {
        pi = i;
        pj = j;
        break;
      }
  if (pi < 0) {
    out.h = Matrix<CycloNum>(d, d);
    return;
  }
  out.phase = b(pj, pi).conj() / b(pi, pj);
  if (!(adjoint(b) == b.scaled(out.phase))) throw std::logic_error("sesquilinear form is not a twisted Hermitian form");
  out.alpha = square_root_on_circle(out.phase);
  out.h = b.scaled(out.alpha);
}

}  // namespace

Matrix<LaurentPoly> sesquilinear_form_symbolic(const SpechtData& sd, const Matrix<LaurentPoly>& sigma_sym) {
  return sigma_sym.transpose() * sd.gram;
}

HermitianGram hermitian_from_form(const MultiPartition& shape, const Matrix<LaurentPoly>& form_sym, const RationalC& c) {
  HermitianGram out{shape, c, {}, CycloNum(1), {}, CycloNum(1)};
  hermitianize(out, specialize(form_sym, c));
  return out;
}

HermitianGram hermitian_gram(const SpechtData& sd, const Matrix<LaurentPoly>& sigma_sym, const RationalC& c) {
  HermitianGram out{sd.shape, c, {}, CycloNum(1), specialize(sigma_sym, c), CycloNum(1)};
  hermitianize(out, out.sigma_matrix.transpose() * specialize(sd.gram, c));
  return out;
}

HermitianGram hermitian_gram(const SpechtData& sd, const RationalC& c) { return hermitian_gram(sd, sigma_matrix_symbolic(sd), c); }

}  // namespace hecke
