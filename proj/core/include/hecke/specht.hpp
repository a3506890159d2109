#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/combinat.hpp"
#include "hecke/cyclo.hpp"
#include "hecke/laurent.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

/// Raised when a request exceeds a documented size limit.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest rank accepted by the symbolic Specht construction.
inline constexpr int kMaxSymbolicRank = 8;
/// Largest rank accepted by the full-algebra oracle.
inline constexpr int kMaxOracleRank = 4;

/// A Specht module in its Murphy basis: one basis vector per standard
/// tableau (canonical order), generator matrices acting on columns, and the
/// symmetric Gram matrix of the invariant bilinear form.
template <class R>
struct SpechtModule {
  MultiPartition shape;
  std::vector<Tableau> basis;
  /// action[i] is the matrix of T_i for 0 <= i < n; action[0] is the
  /// identity when r = 1.
  std::vector<Matrix<R>> action;
  Matrix<R> gram;

  int dimension() const { return static_cast<int>(basis.size()); }
  int rank_n() const { return shape.size(); }
  /// Index of a standard tableau in the basis, or -1.
  int index_of(const Tableau& t) const;
};

using SpechtData = SpechtModule<LaurentPoly>;
using SpechtDataC = SpechtModule<CycloNum>;

/// Symbolic Specht module of a partition over Z[q, q^{-1}]. The result is
/// checked against the defining relations before it is returned.
/// Throws SizeGuardError above kMaxSymbolicRank, std::invalid_argument on
/// the empty shape.
SpechtData build_specht(const Partition& shape);

/// Specht module at specialized parameters. Requires parameters at which
/// the algebra is semisimple for this n; throws std::domain_error otherwise.
SpechtDataC build_specht(const MultiPartition& shape, const AlgebraSpec<CycloNum>& spec);

/// Specht module assembled from the full algebra: the ideal spanned by the
/// cellular basis elements of strictly dominant shapes, the quotient, and
/// the defining congruence for the form. Throws SizeGuardError for n > 4.
SpechtData oracle_specht(const Partition& shape);
SpechtDataC oracle_specht(const MultiPartition& shape, const CycloAlgebra& alg);

/// Description of the first violated module invariant, if any: relations,
/// symmetry of the Gram matrix, adjointness of every generator.
template <class R>
std::optional<std::string> check_specht_invariants(const SpechtModule<R>& sd, const AlgebraSpec<R>& spec);

/// Matrix of the module involution sigma over Z[q, q^{-1}]: column t holds
/// the coordinates of sigma(e_t).
Matrix<LaurentPoly> sigma_matrix_symbolic(const SpechtData& sd);
/// The same matrix specialized at q = exp(2 pi i c).
Matrix<CycloNum> sigma_on_module(const SpechtData& sd, const RationalC& c);

/// det of the Gram matrix by fraction-free elimination.
LaurentPoly gram_determinant(const SpechtData& sd);

struct HermitianGram {
  MultiPartition shape;
  RationalC c;
  Matrix<CycloNum> h;
  /// Scalar with h = alpha * B, where B(v, w) = <sigma(v), w>.
  CycloNum alpha;
  Matrix<CycloNum> sigma_matrix;
  /// Ratio c with B^dagger = c B (1 when B = 0).
  CycloNum phase;
};

/// Hermitian form (v, w) = v^dagger H w with H = alpha S^T G. A zero Gram
/// matrix yields H = 0.
HermitianGram hermitian_gram(const SpechtData& sd, const RationalC& c);
/// Same, reusing the symbolic sigma matrix.
HermitianGram hermitian_gram(const SpechtData& sd, const Matrix<LaurentPoly>& sigma_sym, const RationalC& c);

/// S^T G over Z[q, q^{-1}], the matrix of B(v, w) = <sigma(v), w> before
/// specialization.
Matrix<LaurentPoly> sesquilinear_form_symbolic(const SpechtData& sd, const Matrix<LaurentPoly>& sigma_sym);
/// hermitian_gram from a precomputed S^T G; sigma_matrix is left empty.
HermitianGram hermitian_from_form(const MultiPartition& shape, const Matrix<LaurentPoly>& form_sym, const RationalC& c);

struct JantzenReport {
  MultiPartition shape;
  RationalC c;
  /// [dim M_0, dim M_1, ...], ending with the first zero.
  std::vector<int> layer_dims;
};

/// Jantzen layer dimensions from the Phi_e-adic valuations of the elementary
/// divisors of the Gram matrix, e the order of q. A nonsingular point gives
/// [dim, 0].
JantzenReport jantzen_layers(const SpechtData& sd, const RationalC& c);

/// Number of elementary divisors of the Gram matrix with each Phi_e-adic
/// valuation (index = valuation).
std::vector<int> elementary_divisor_valuations(const SpechtData& sd, int e);

}  // namespace hecke
