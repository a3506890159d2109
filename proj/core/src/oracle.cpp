#include <array>
#include <functional>

#include "hecke/linalg.hpp"
#include "hecke/qpoly.hpp"
#include "hecke/specht.hpp"

namespace hecke {

namespace {

template <class R>
HeckeElement<R> left_word(const HeckeAlgebra<R>& alg, const std::vector<int>& word, HeckeElement<R> x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = alg.lmul_gen(*it, x);
  return x;
}

template <class R>
HeckeElement<R> left_word_reversed(const HeckeAlgebra<R>& alg, const std::vector<int>& word, HeckeElement<R> x) {
  for (int i : word) x = alg.lmul_gen(i, x);
  return x;
}

template <class R>
HeckeElement<R> right_word(const HeckeAlgebra<R>& alg, HeckeElement<R> x, const std::vector<int>& word) {
  for (int i : word) x = alg.rmul_gen(x, i);
  return x;
}

/// Quotient of the cell ideal: basis b_t = T_{d(t)^{-1}} m_lambda modulo the
/// span of m_{uv} over strictly dominant shapes.
template <class R, class F>
SpechtModule<R> oracle_impl(const HeckeAlgebra<R>& alg, const MultiPartition& shape, const std::function<F(const R&)>& up,
                            const std::function<R(const F&)>& down) {
  const int n = alg.n();
  const auto dim = static_cast<int>(alg.dimension());
  auto column_of = [&](const HeckeElement<R>& x) {
    std::vector<F> v(static_cast<std::size_t>(dim));
    for (const auto& [k, c] : x.terms) v[static_cast<std::size_t>(k)] = up(c);
    return v;
  };

  std::vector<std::vector<F>> ideal;
  for (const auto& mu : multipartitions_of(n, alg.r())) {
    if (!strictly_dominates(mu, shape)) continue;
    const auto m_mu = alg.m_lambda(mu);
    const auto std_mu = tableaux(mu, TableauFlavor::Standard);
    for (const auto& s : std_mu) {
      const auto ws = d_of(s).reduced_word();
      const auto left = left_word_reversed(alg, ws, m_mu);
      for (const auto& t : std_mu) ideal.push_back(column_of(right_word(alg, left, d_of(t).reduced_word())));
    }
  }

  const auto basis = tableaux(shape, TableauFlavor::Standard);
  const int d = static_cast<int>(basis.size());
  const auto m_lam = alg.m_lambda(shape);
  std::vector<HeckeElement<R>> b;
  std::vector<std::vector<int>> words;
  for (const auto& t : basis) {
    words.push_back(d_of(t).reduced_word());
    b.push_back(left_word_reversed(alg, words.back(), m_lam));
  }

  auto system = [&](const std::vector<std::vector<F>>& lead) {
    Matrix<F> a(dim, static_cast<int>(lead.size() + ideal.size()));
    int c = 0;
    for (const auto* group : std::array<const std::vector<std::vector<F>>*, 2>{&lead, &ideal})
      for (const auto& v : *group) a.set_column(c++, v);
    return a;
  };
  auto take = [&](const std::optional<std::vector<F>>& x, int count) {
    if (!x) throw std::logic_error("oracle: element outside the cell module");
    std::vector<R> out;
    for (int k = 0; k < count; ++k) out.push_back(down((*x)[static_cast<std::size_t>(k)]));
    return out;
  };

  std::vector<std::vector<F>> bcols;
  for (const auto& x : b) bcols.push_back(column_of(x));
  const auto a = system(bcols);
  SpechtModule<R> sd{shape, basis, {}, Matrix<R>(d, d)};
  for (int i = 0; i < n; ++i) {
    Matrix<F> rhs(dim, d);
    for (int j = 0; j < d; ++j) rhs.set_column(j, column_of(alg.lmul_gen(i, b[static_cast<std::size_t>(j)])));
    const auto sols = solve_many(a, rhs);
    Matrix<R> m(d, d);
    for (int j = 0; j < d; ++j) m.set_column(j, take(sols[static_cast<std::size_t>(j)], d));
    sd.action.push_back(std::move(m));
  }

  const auto g = system({column_of(m_lam)});
  Matrix<F> rhs(dim, d * d);
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t)
      rhs.set_column(s * d + t, column_of(alg.multiply(m_lam, left_word(alg, words[static_cast<std::size_t>(s)], b[static_cast<std::size_t>(t)]))));
  const auto sols = solve_many(g, rhs);
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t) sd.gram(s, t) = take(sols[static_cast<std::size_t>(s * d + t)], 1).front();
  return sd;
}

}  // namespace

SpechtData oracle_specht(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("empty shape");
  if (shape.size() > kMaxOracleRank) throw SizeGuardError("the algebra oracle is limited to n <= " + std::to_string(kMaxOracleRank));
  const auto alg = make_symbolic_algebra(shape.size());
  return oracle_impl<LaurentPoly, RatFunc>(
      alg, MultiPartition(shape), [](const LaurentPoly& p) { return RatFunc(p); },
      [](const RatFunc& f) {
        auto p = f.to_laurent();
        if (!p) throw std::logic_error("oracle: coefficient is not a Laurent polynomial");
        return *p;
      });
}

SpechtDataC oracle_specht(const MultiPartition& shape, const CycloAlgebra& alg) {
  if (shape.size() == 0) throw std::invalid_argument("empty shape");
  if (shape.size() > kMaxOracleRank) throw SizeGuardError("the algebra oracle is limited to n <= " + std::to_string(kMaxOracleRank));
  if (shape.size() != alg.n() || shape.level() != alg.r()) throw std::invalid_argument("shape does not match the algebra");
  return oracle_impl<CycloNum, CycloNum>(
      alg, shape, [](const CycloNum& x) { return x; }, [](const CycloNum& x) { return x; });
}

}  // namespace hecke
