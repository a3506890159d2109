#include "hecke/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "hecke/linalg.hpp"

namespace hecke {

namespace {

LaurentPoly inverse_value(const LaurentPoly& x) {
  if (!x.is_monomial() || (x.coeff(x.low()) != 1 && x.coeff(x.low()) != -1))
    throw std::domain_error("LaurentPoly is not a unit");
  return LaurentPoly::monomial(-x.low(), x.coeff(x.low()));
}

CycloNum inverse_value(const CycloNum& x) { return x.inverse(); }

template <class R>
R power(const R& x, int k) {
  R out(1);
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

}  // namespace

template <class R>
HeckeAlgebra<R>::HeckeAlgebra(AlgebraSpec<R> spec) : spec_(std::move(spec)) {
  if (spec_.n < 1 || spec_.r < 1) throw std::invalid_argument("algebra needs n >= 1 and r >= 1");
  if (spec_.n > 8) throw std::invalid_argument("algebra rank above 8 is not supported");
  if (spec_.r == 1 && spec_.params.empty()) spec_.params = {R(1)};
  if (static_cast<int>(spec_.params.size()) != spec_.r) throw std::invalid_argument("need exactly r parameters");
  q_inv_ = inverse_value(spec_.q);
  q_minus_one_ = spec_.q - R(1);
  for (const auto& p : spec_.params)
    if (is_zero_value(p)) throw std::invalid_argument("parameters must be invertible");

  perm_count_ = factorial(spec_.n);
  for (int k = 0; k < spec_.n; ++k) exp_count_ *= static_cast<std::uint64_t>(spec_.r);

  const int n = spec_.n;
  perms_.reserve(perm_count_);
  for (std::uint64_t k = 0; k < perm_count_; ++k) perms_.push_back(Permutation::unrank(n, static_cast<std::uint32_t>(k)));
  left_next_.assign(perm_count_, std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
  right_next_ = left_next_;
  left_up_.assign(perm_count_, std::vector<bool>(static_cast<std::size_t>(n)));
  right_up_ = left_up_;
  reduced_words_.resize(perm_count_);
  for (std::uint64_t k = 0; k < perm_count_; ++k) {
    const Permutation& w = perms_[k];
    reduced_words_[k] = w.reduced_word();
    for (int i = 1; i < n; ++i) {
      left_next_[k][static_cast<std::size_t>(i)] = w.generator_times(i).rank();
      left_up_[k][static_cast<std::size_t>(i)] = !w.has_left_descent(i);
      right_next_[k][static_cast<std::size_t>(i)] = w.times_generator(i).rank();
      right_up_[k][static_cast<std::size_t>(i)] = !w.has_right_descent(i);
    }
  }
  // prod_k (x - q_k), ascending coefficients; cyc_ drops the leading 1.
  std::vector<R> poly{R(1)};
  for (const auto& qk : spec_.params) {
    std::vector<R> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= qk * poly[j];
    }
    poly = std::move(next);
  }
  cyc_.assign(poly.begin(), poly.end() - 1);
}

template <class R>
void HeckeAlgebra<R>::check(const Element& x) const {
  if (x.n != spec_.n || x.r != spec_.r) throw std::invalid_argument("element belongs to a different algebra");
}

template <class R>
std::uint64_t HeckeAlgebra<R>::key(const std::vector<int>& exps, const Permutation& w) const {
  std::uint64_t e = 0;
  for (std::size_t k = exps.size(); k-- > 0;) {
    if (exps[k] < 0 || exps[k] >= spec_.r) throw std::invalid_argument("L exponent out of range");
    e = e * static_cast<std::uint64_t>(spec_.r) + static_cast<std::uint64_t>(exps[k]);
  }
  return e * perm_count_ + w.rank();
}

template <class R>
std::vector<int> HeckeAlgebra<R>::exponents_of(std::uint64_t key) const {
  std::uint64_t e = key / perm_count_;
  std::vector<int> exps(static_cast<std::size_t>(spec_.n));
  for (auto& a : exps) {
    a = static_cast<int>(e % static_cast<std::uint64_t>(spec_.r));
    e /= static_cast<std::uint64_t>(spec_.r);
  }
  return exps;
}

template <class R>
Permutation HeckeAlgebra<R>::permutation_of(std::uint64_t key) const {
  return perms_[key % perm_count_];
}

template <class R>
std::string HeckeAlgebra<R>::word_string(std::uint64_t key) const {
  std::string out;
  const auto exps = exponents_of(key);
  if (std::any_of(exps.begin(), exps.end(), [](int a) { return a != 0; })) {
    out += "L[";
    for (std::size_t k = 0; k < exps.size(); ++k) out += (k ? "," : "") + std::to_string(exps[k]);
    out += "]";
  }
  const auto& word = reduced_words_[key % perm_count_];
  if (!word.empty()) {
    out += "T[";
    for (std::size_t k = 0; k < word.size(); ++k) out += (k ? "," : "") + std::to_string(word[k]);
    out += "]";
  }
  return out.empty() ? "1" : out;
}

template <class R>
void HeckeAlgebra<R>::add_term(Element& x, std::uint64_t k, const R& c) const {
  if (is_zero_value(c)) return;
  auto it = x.terms.find(k);
  if (it == x.terms.end()) {
    x.terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (is_zero_value(it->second)) x.terms.erase(it);
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::scalar(const R& c) const {
  Element x = zero();
  add_term(x, 0, c);
  return x;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::basis(const std::vector<int>& exps, const Permutation& w, const R& c) const {
  Element x = zero();
  add_term(x, key(exps, w), c);
  return x;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out = a;
  for (const auto& [k, c] : b.terms) add_term(out, k, c);
  return out;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::sub(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out = a;
  for (const auto& [k, c] : b.terms) add_term(out, k, -c);
  return out;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::scale(const R& s, const Element& a) const {
  check(a);
  Element out = zero();
  if (is_zero_value(s)) return out;
  for (const auto& [k, c] : a.terms) add_term(out, k, s * c);
  return out;
}

template <class R>
void HeckeAlgebra<R>::lmul_l1_term(const std::vector<int>& exps, std::uint32_t wrank, const R& c, Element& out) const {
  std::vector<int> a = exps;
  if (a[0] + 1 < spec_.r) {
    ++a[0];
    add_term(out, key(a, perms_[wrank]), c);
    return;
  }
  // L_1^r = -sum_{j<r} cyc_j L_1^j
  for (int j = 0; j < spec_.r; ++j) {
    a[0] = j;
    add_term(out, key(a, perms_[wrank]), -(c * cyc_[static_cast<std::size_t>(j)]));
  }
}

template <class R>
void HeckeAlgebra<R>::lmul_gen_term(int i, std::uint64_t k, const R& c, Element& out) const {
  const auto wrank = static_cast<std::uint32_t>(k % perm_count_);
  if (i == 0) {
    if (spec_.r == 1) {
      add_term(out, k, c * spec_.params[0]);
      return;
    }
    lmul_l1_term(exponents_of(k), wrank, c, out);
    return;
  }
  std::vector<int> a = exponents_of(k);
  const auto ii = static_cast<std::size_t>(i);
  const int alpha = a[ii - 1];
  const int beta = a[ii];
  // T_i f = (s_i f) T_i + (q - 1) L_{i+1} (f - s_i f) / (L_{i+1} - L_i)
  std::vector<int> swapped = a;
  std::swap(swapped[ii - 1], swapped[ii]);
  const std::uint32_t next = left_next_[wrank][ii];
  if (left_up_[wrank][ii]) {
    add_term(out, key(swapped, perms_[next]), c);
  } else {
    add_term(out, key(swapped, perms_[next]), c * spec_.q);
    add_term(out, key(swapped, perms_[wrank]), c * q_minus_one_);
  }
  if (alpha == beta) return;
  const R corr = c * q_minus_one_;
  if (alpha > beta) {
    for (int j = 0; j < alpha - beta; ++j) {
      std::vector<int> b = a;
      b[ii - 1] = beta + j;
      b[ii] = alpha - j;
      add_term(out, key(b, perms_[wrank]), -corr);
    }
  } else {
    for (int j = 0; j < beta - alpha; ++j) {
      std::vector<int> b = a;
      b[ii - 1] = alpha + j;
      b[ii] = beta - j;
      add_term(out, key(b, perms_[wrank]), corr);
    }
  }
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::lmul_gen(int i, const Element& x) const {
  check(x);
  if (i < 0 || i >= spec_.n) throw std::invalid_argument("generator index out of range");
  Element out = zero();
  for (const auto& [k, c] : x.terms) lmul_gen_term(i, k, c, out);
  return out;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::lmul_t0_inverse(const Element& x) const {
  // T_0^{-1} = -cyc_0^{-1} (T_0^{r-1} + sum_{j=1}^{r-1} cyc_j T_0^{j-1})
  const int r = spec_.r;
  std::vector<Element> powers{x};
  for (int j = 1; j < r; ++j) powers.push_back(lmul_gen(0, powers.back()));
  Element acc = powers[static_cast<std::size_t>(r - 1)];
  for (int j = 1; j < r; ++j) acc = add(acc, scale(cyc_[static_cast<std::size_t>(j)], powers[static_cast<std::size_t>(j - 1)]));
  return scale(-inverse_value(cyc_[0]), acc);
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::lmul_gen_inverse(int i, const Element& x) const {
  check(x);
  if (i == 0) {
    if (spec_.r == 1) return scale(inverse_value(spec_.params[0]), x);
    return lmul_t0_inverse(x);
  }
  // T_i^{-1} = q^{-1} T_i + (q^{-1} - 1)
  return add(scale(q_inv_, lmul_gen(i, x)), scale(q_inv_ - R(1), x));
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::rmul_gen(const Element& x, int i) const {
  check(x);
  if (i < 1 || i >= spec_.n) throw std::invalid_argument("right multiplication needs 1 <= i < n");
  Element out = zero();
  const auto ii = static_cast<std::size_t>(i);
  for (const auto& [k, c] : x.terms) {
    const auto wrank = static_cast<std::uint32_t>(k % perm_count_);
    const std::uint64_t base = k - wrank;
    const std::uint32_t next = right_next_[wrank][ii];
    if (right_up_[wrank][ii]) {
      add_term(out, base + next, c);
    } else {
      add_term(out, base + next, c * spec_.q);
      add_term(out, k, c * q_minus_one_);
    }
  }
  return out;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::lmul_word(const std::vector<int>& word, const Element& x) const {
  Element y = x;
  for (std::size_t k = word.size(); k-- > 0;) y = lmul_gen(word[k], y);
  return y;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::lmul_jm(int m, const Element& x) const {
  Element y = x;
  for (int j = m - 1; j >= 1; --j) y = lmul_gen(j, y);
  y = lmul_gen(0, y);
  for (int j = 1; j <= m - 1; ++j) y = lmul_gen(j, y);
  return scale(power(q_inv_, m - 1), y);
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::lmul_jm_inverse(int m, const Element& x) const {
  Element y = x;
  for (int j = m - 1; j >= 1; --j) y = lmul_gen_inverse(j, y);
  y = lmul_gen_inverse(0, y);
  for (int j = 1; j <= m - 1; ++j) y = lmul_gen_inverse(j, y);
  return scale(power(spec_.q, m - 1), y);
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::t_word(const std::vector<int>& word) const {
  return lmul_word(word, one());
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::gen(int i) const {
  return lmul_gen(i, one());
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::invert_generator(int i) const {
  return lmul_gen_inverse(i, one());
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out = zero();
  for (const auto& [k, c] : a.terms) {
    Element y = lmul_word(reduced_words_[k % perm_count_], b);
    const auto exps = exponents_of(k);
    for (int m = 1; m <= spec_.n; ++m)
      for (int t = 0; t < exps[static_cast<std::size_t>(m - 1)]; ++t) y = lmul_jm(m, y);
    for (const auto& [k2, c2] : y.terms) add_term(out, k2, c * c2);
  }
  return out;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::sigma(const Element& x) const {
  check(x);
  Element out = zero();
  for (const auto& [k, c] : x.terms) {
    Element y = one();
    const auto& word = reduced_words_[k % perm_count_];
    for (std::size_t t = word.size(); t-- > 0;) y = lmul_gen_inverse(word[t], y);
    const auto exps = exponents_of(k);
    for (int m = 1; m <= spec_.n; ++m)
      for (int t = 0; t < exps[static_cast<std::size_t>(m - 1)]; ++t) y = lmul_jm_inverse(m, y);
    const R cb = bar_value(c);
    for (const auto& [k2, c2] : y.terms) add_term(out, k2, cb * c2);
  }
  return out;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::star(const Element& x) const {
  check(x);
  Element out = zero();
  for (const auto& [k, c] : x.terms) {
    Element y = basis(exponents_of(k), Permutation(spec_.n), c);
    for (int i : reduced_words_[k % perm_count_]) y = lmul_gen(i, y);
    for (const auto& [k2, c2] : y.terms) add_term(out, k2, c2);
  }
  return out;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::jucys_murphy(int m) const {
  if (m < 1 || m > spec_.n) throw std::invalid_argument("Jucys-Murphy index out of range");
  return lmul_jm(m, one());
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::x_lambda(const MultiPartition& shape) const {
  if (shape.size() != spec_.n) throw std::invalid_argument("shape size differs from the algebra rank");
  const auto gens = young_subgroup_generators(shape);
  std::set<Permutation> seen{Permutation(spec_.n)};
  std::deque<Permutation> todo{Permutation(spec_.n)};
  while (!todo.empty()) {
    Permutation w = todo.front();
    todo.pop_front();
    for (int i : gens) {
      Permutation v = w.times_generator(i);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  Element x = zero();
  const std::vector<int> none(static_cast<std::size_t>(spec_.n), 0);
  for (const auto& w : seen) add_term(x, key(none, w), R(1));
  return x;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::m_lambda(const MultiPartition& shape) const {
  if (shape.level() != spec_.r) throw std::invalid_argument("shape level differs from the algebra level");
  Element p = one();
  for (int k = 1; k < spec_.r; ++k) {
    const R& qk = spec_.params[static_cast<std::size_t>(k)];
    for (int m = 1; m <= shape.offsets()[static_cast<std::size_t>(k)]; ++m) p = sub(lmul_jm(m, p), scale(qk, p));
  }
  return multiply(p, x_lambda(shape));
}

template <class R>
std::vector<R> HeckeAlgebra<R>::to_vector(const Element& x) const {
  check(x);
  std::vector<R> v(dimension());
  for (const auto& [k, c] : x.terms) v[k] = c;
  return v;
}

template <class R>
typename HeckeAlgebra<R>::Element HeckeAlgebra<R>::from_vector(const std::vector<R>& v) const {
  Element x = zero();
  for (std::size_t k = 0; k < v.size(); ++k) add_term(x, k, v[k]);
  return x;
}

template class HeckeAlgebra<LaurentPoly>;
template class HeckeAlgebra<CycloNum>;

SymbolicAlgebra make_symbolic_algebra(int n) {
  return SymbolicAlgebra(AlgebraSpec<LaurentPoly>{n, 1, LaurentPoly::q(), {LaurentPoly(1)}});
}

CycloAlgebra make_cyclo_algebra(int n, const CycloNum& q, const std::vector<CycloNum>& params) {
  auto on_circle = [](const CycloNum& x) { return x * x.conj() == CycloNum(1); };
  if (!on_circle(q)) throw std::invalid_argument("q must lie on the unit circle");
  for (const auto& p : params)
    if (!on_circle(p)) throw std::invalid_argument("parameters must lie on the unit circle");
  return CycloAlgebra(AlgebraSpec<CycloNum>{n, static_cast<int>(params.size()), q, params});
}

int sigma_exponent(const Partition& shape) {
  int s = 0;
  for (int p : shape.parts()) s -= p * (p - 1) / 2;
  return s;
}

int verify_sigma_x(const Partition& shape) {
  const auto alg = make_symbolic_algebra(shape.size());
  const auto x = alg.x_lambda(shape);
  const auto y = alg.sigma(x);
  auto it = y.terms.find(0);
  if (it == y.terms.end() || !it->second.is_monomial() || it->second.coeff(it->second.low()) != 1)
    throw std::logic_error("sigma(x_lambda) is not a power of q times x_lambda");
  const int s = it->second.low();
  if (!(y == alg.scale(LaurentPoly::monomial(s), x)))
    throw std::logic_error("sigma(x_lambda) is not a power of q times x_lambda");
  return s;
}

namespace {

template <class R>
HeckeElement<R> l_monomial(const HeckeAlgebra<R>& alg, const std::vector<int>& b) {
  // prod_k L_k^{b_k}, negative exponents through sigma(L_k) = L_k^{-1}
  auto y = alg.one();
  for (int m = 1; m <= alg.n(); ++m) {
    const int e = b[static_cast<std::size_t>(m - 1)];
    const auto lm = alg.jucys_murphy(m);
    const auto lm_inv = alg.sigma(lm);  // parameters on the unit circle
    for (int t = 0; t < (e < 0 ? -e : e); ++t) y = alg.multiply(e < 0 ? lm_inv : lm, y);
  }
  return y;
}

}  // namespace

SigmaWitness<CycloNum> verify_lemma31(const CycloAlgebra& alg, const MultiPartition& shape) {
  const auto m = alg.m_lambda(shape);
  const auto sm = alg.sigma(m);
  const int n = alg.n();
  const int r = alg.r();
  // Candidate exponent vectors, the one suggested by the L-product first.
  std::vector<int> predicted(static_cast<std::size_t>(n), 0);
  for (int k = 1; k < r; ++k)
    for (int j = 1; j <= shape.offsets()[static_cast<std::size_t>(k)]; ++j) --predicted[static_cast<std::size_t>(j - 1)];
  std::vector<std::vector<int>> candidates{predicted};
  std::vector<int> b(static_cast<std::size_t>(n), -(r - 1));
  while (true) {
    if (b != predicted) candidates.push_back(b);
    std::size_t k = 0;
    while (k < b.size() && b[k] == r - 1) b[k++] = -(r - 1);
    if (k == b.size()) break;
    ++b[k];
  }
  for (const auto& cand : candidates) {
    const auto lb = l_monomial(alg, cand);
    const auto y = alg.multiply(m, lb);
    if (y.is_zero()) continue;
    const auto& [k0, c0] = *y.terms.begin();
    auto it = sm.terms.find(k0);
    if (it == sm.terms.end()) continue;
    const CycloNum gamma = it->second / c0;
    if (!(alg.scale(gamma, y) == sm)) continue;
    std::vector<int> neg(cand.size());
    std::transform(cand.begin(), cand.end(), neg.begin(), [](int e) { return -e; });
    SigmaWitness<CycloNum> w{alg.scale(gamma, lb), alg.scale(gamma.inverse(), l_monomial(alg, neg)), cand, gamma};
    if (!(alg.multiply(w.u, w.u_inverse) == alg.one())) throw std::logic_error("sigma witness inverse check failed");
    return w;
  }
  // General solve: sigma(m) = m u over the full basis.
  const auto dim = static_cast<int>(alg.dimension());
  Matrix<CycloNum> a(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const auto col = alg.to_vector(alg.multiply(m, alg.from_vector([&] {
      std::vector<CycloNum> e(static_cast<std::size_t>(dim));
      e[static_cast<std::size_t>(j)] = CycloNum(1);
      return e;
    }())));
    a.set_column(j, col);
  }
  auto sol = solve(a, alg.to_vector(sm));
  if (!sol) throw std::logic_error("sigma(m_lambda) = m_lambda u has no solution");
  const auto kernel = nullspace(a);
  for (std::size_t attempt = 0; attempt <= kernel.size(); ++attempt) {
    std::vector<CycloNum> uv = *sol;
    for (std::size_t t = 0; t < kernel.size() && attempt > 0; ++t) {
      const CycloNum w(static_cast<long>((t * 7 + attempt * 3) % 5 + 1));
      for (std::size_t i = 0; i < uv.size(); ++i) uv[i] += w * kernel[t][i];
    }
    const auto u = alg.from_vector(uv);
    Matrix<CycloNum> lu(dim, dim);
    for (int j = 0; j < dim; ++j) {
      std::vector<CycloNum> e(static_cast<std::size_t>(dim));
      e[static_cast<std::size_t>(j)] = CycloNum(1);
      lu.set_column(j, alg.to_vector(alg.multiply(u, alg.from_vector(e))));
    }
    auto inv = solve(lu, alg.to_vector(alg.one()));
    if (inv) return SigmaWitness<CycloNum>{u, alg.from_vector(*inv), std::nullopt, CycloNum(1)};
  }
  throw std::logic_error("no invertible u with sigma(m_lambda) = m_lambda u found");
}

SigmaWitness<LaurentPoly> verify_lemma31(const SymbolicAlgebra& alg, const Partition& shape) {
  const int s = verify_sigma_x(shape);
  const auto m = alg.m_lambda(shape);
  const LaurentPoly gamma = LaurentPoly::monomial(s);
  SigmaWitness<LaurentPoly> w{alg.scalar(gamma), alg.scalar(LaurentPoly::monomial(-s)),
                                std::vector<int>(static_cast<std::size_t>(alg.n()), 0), gamma};
  if (!(alg.sigma(m) == alg.multiply(m, w.u))) throw std::logic_error("sigma(m_lambda) != m_lambda q^s");
  return w;
}

}  // namespace hecke
