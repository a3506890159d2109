#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/cyclo.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

/// Rank n, level r and parameters q, q_1..q_r. With r = 1 the generator T_0
/// is the identity and q_1 = 1.
template <class R>
struct AlgebraSpec {
  int n = 1;
  int r = 1;
  R q;
  std::vector<R> params;
};

/// An element in the normal-form basis L_1^{a_1}...L_n^{a_n} T_w with
/// 0 <= a_k < r. Keys combine the exponent vector (base r) and the Lehmer
/// rank of w.
template <class R>
struct HeckeElement {
  int n = 0;
  int r = 0;
  std::map<std::uint64_t, R> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const HeckeElement& o) const { return n == o.n && r == o.r && terms == o.terms; }
};

/// Normal-form arithmetic in H_q(S_n) (r = 1) or the Ariki-Koike algebra.
/// Coefficients are LaurentPoly (symbolic, r = 1) or CycloNum (specialized).
template <class R>
class HeckeAlgebra {
 public:
  using Element = HeckeElement<R>;

  explicit HeckeAlgebra(AlgebraSpec<R> spec);

  const AlgebraSpec<R>& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int r() const { return spec_.r; }
  std::uint64_t dimension() const { return perm_count_ * exp_count_; }

  // basis bookkeeping
  std::uint64_t key(const std::vector<int>& exps, const Permutation& w) const;
  std::vector<int> exponents_of(std::uint64_t key) const;
  Permutation permutation_of(std::uint64_t key) const;
  /// "T[1,2]" or "L[0,1]T[1]"; the identity is "1".
  std::string word_string(std::uint64_t key) const;

  Element zero() const { return Element{spec_.n, spec_.r, {}}; }
  Element one() const { return scalar(R(1)); }
  Element scalar(const R& c) const;
  Element basis(const std::vector<int>& exps, const Permutation& w, const R& c = R(1)) const;
  /// T_w for w given by any (not necessarily reduced) word, multiplied out.
  Element t_word(const std::vector<int>& word) const;

  /// Generator T_i, 0 <= i < n (T_0 = 1 when r = 1).
  Element gen(int i) const;
  Element invert_generator(int i) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const R& c, const Element& a) const;
  Element multiply(const Element& a, const Element& b) const;

  /// T_i * x and T_i^{-1} * x.
  Element lmul_gen(int i, const Element& x) const;
  Element lmul_gen_inverse(int i, const Element& x) const;
  /// x * T_i for i >= 1.
  Element rmul_gen(const Element& x, int i) const;

  Element sigma(const Element& x) const;
  Element star(const Element& x) const;

  Element jucys_murphy(int m) const;
  Element x_lambda(const MultiPartition& shape) const;
  Element m_lambda(const MultiPartition& shape) const;

  /// Coefficient vector in the full basis (index = key).
  std::vector<R> to_vector(const Element& x) const;
  Element from_vector(const std::vector<R>& v) const;

  R q_inverse() const { return q_inv_; }

 private:
  void check(const Element& x) const;
  void add_term(Element& x, std::uint64_t key, const R& c) const;
  void lmul_gen_term(int i, std::uint64_t key, const R& c, Element& out) const;
  void lmul_l1_term(const std::vector<int>& exps, std::uint32_t wrank, const R& c, Element& out) const;
  Element lmul_word(const std::vector<int>& word, const Element& x) const;
  Element lmul_jm(int m, const Element& x) const;
  Element lmul_jm_inverse(int m, const Element& x) const;
  Element lmul_t0_inverse(const Element& x) const;

  AlgebraSpec<R> spec_;
  R q_inv_;
  R q_minus_one_;
  std::uint64_t perm_count_ = 1;
  std::uint64_t exp_count_ = 1;
  std::vector<Permutation> perms_;
  // Per permutation rank and generator i (1-based): rank of s_i w and whether
  // the length goes up; likewise for w s_i.
  std::vector<std::vector<std::uint32_t>> left_next_;
  std::vector<std::vector<bool>> left_up_;
  std::vector<std::vector<std::uint32_t>> right_next_;
  std::vector<std::vector<bool>> right_up_;
  std::vector<std::vector<int>> reduced_words_;
  // prod_k (x - q_k) = x^r + sum_{j<r} cyc_[j] x^j
  std::vector<R> cyc_;
};

using SymbolicAlgebra = HeckeAlgebra<LaurentPoly>;
using CycloAlgebra = HeckeAlgebra<CycloNum>;

/// H_q(S_n) over Z[q, q^{-1}].
SymbolicAlgebra make_symbolic_algebra(int n);
/// Specialized algebra; throws unless all parameters lie on the unit circle.
CycloAlgebra make_cyclo_algebra(int n, const CycloNum& q, const std::vector<CycloNum>& params);

/// The exponent s with sigma(x_lambda) = q^s x_lambda, computed in the
/// algebra. Throws std::logic_error if no such s exists.
int verify_sigma_x(const Partition& shape);

/// -(sum of binomial(lambda_i, 2)): minus the length of the longest element
/// of the Young subgroup.
int sigma_exponent(const Partition& shape);

template <class R>
struct SigmaWitness {
  HeckeElement<R> u;
  HeckeElement<R> u_inverse;
  /// When u = gamma * prod L_k^{b_k}: the exponents b (possibly negative).
  std::optional<std::vector<int>> l_exponents;
  R gamma;
};

/// Solves sigma(m_lambda) = m_lambda u for an invertible u and returns u with
/// an explicit inverse. Throws std::logic_error if no invertible solution is found.
SigmaWitness<CycloNum> verify_lemma31(const CycloAlgebra& alg, const MultiPartition& shape);
/// r = 1 symbolic version; u is q^s times the identity.
SigmaWitness<LaurentPoly> verify_lemma31(const SymbolicAlgebra& alg, const Partition& shape);

extern template class HeckeAlgebra<LaurentPoly>;
extern template class HeckeAlgebra<CycloNum>;

}  // namespace hecke
