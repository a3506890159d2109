#include "hecke/specht.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/linalg.hpp"
#include "hecke/qpoly.hpp"
#include "murphy_model.hpp"

namespace hecke {

template <class R>
int SpechtModule<R>::index_of(const Tableau& t) const {
  if (!(t.shape() == shape)) return -1;
  auto it = std::lower_bound(basis.begin(), basis.end(), t);
  if (it == basis.end() || !(*it == t)) return -1;
  return static_cast<int>(it - basis.begin());
}

template struct SpechtModule<LaurentPoly>;
template struct SpechtModule<CycloNum>;

namespace {

LaurentPoly q_inverse_of(const LaurentPoly&) { return LaurentPoly::monomial(-1); }
CycloNum q_inverse_of(const CycloNum& q) { return q.inverse(); }

template <class R>
R q_power(const R& q, int k) {
  const R base = k >= 0 ? q : q_inverse_of(q);
  R out(1);
  for (int j = 0; j < std::abs(k); ++j) out = out * base;
  return out;
}

template <class R>
std::vector<R> unit_vector(int d, int j) {
  std::vector<R> v(static_cast<std::size_t>(d));
  v[static_cast<std::size_t>(j)] = R(1);
  return v;
}

template <class R>
std::vector<R> scaled_vector(const R& s, std::vector<R> v) {
  for (auto& x : v)
    if (!is_zero_value(x)) x = s * x;
  return v;
}

template <class R>
R residue(const AlgebraSpec<R>& spec, const Tableau& t, int k) {
  const Node nd = t.node_of(k);
  const R base = spec.r == 1 ? R(1) : spec.params[static_cast<std::size_t>(nd.comp)];
  return base * q_power(spec.q, nd.col - nd.row);
}

std::string at(const char* what, int i) {
  std::ostringstream os;
  os << what << " (i = " << i << ")";
  return os.str();
}

/// Certifies that the matrices are those of the Murphy basis of the Specht
/// module: relations, the length rule for T_i e_t, the weight of e_{t^lambda}
/// and the normalization of the form.
template <class R>
std::optional<std::string> certify_murphy(const SpechtModule<R>& sd, const AlgebraSpec<R>& spec) {
  if (auto bad = check_specht_invariants(sd, spec)) return bad;
  const int n = sd.rank_n();
  const int d = sd.dimension();
  for (int j = 0; j < d; ++j) {
    const Tableau& t = sd.basis[static_cast<std::size_t>(j)];
    for (int i = 1; i < n; ++i) {
      const Node a = t.node_of(i);
      const Node b = t.node_of(i + 1);
      const auto col = sd.action[static_cast<std::size_t>(i)].column(j);
      if (a.comp == b.comp && a.row == b.row) {
        if (col != scaled_vector(spec.q, unit_vector<R>(d, j))) return at("T_i e_t != q e_t with i, i+1 in one row", i);
        continue;
      }
      const Tableau s = t.swapped(i);
      if (!s.is_standard()) continue;
      const auto& word = t.reading_word();
      const auto pi = std::find(word.begin(), word.end(), i);
      const auto pj = std::find(word.begin(), word.end(), i + 1);
      if (pi < pj && col != unit_vector<R>(d, sd.index_of(s))) return at("T_i e_t != e_{t s_i}", i);
    }
  }
  const Tableau tl = initial_tableau(sd.shape);
  const int jl = sd.index_of(tl);
  const auto e = unit_vector<R>(d, jl);
  for (int i : young_subgroup_generators(sd.shape))
    if (sd.action[static_cast<std::size_t>(i)].apply(e) != scaled_vector(spec.q, e)) return at("e_{t^lambda} is not fixed by the Young subgroup", i);
  for (int m = 1; m <= n; ++m) {
    std::vector<R> v = e;
    for (int k = m - 1; k >= 1; --k) v = sd.action[static_cast<std::size_t>(k)].apply(v);
    v = sd.action[0].apply(v);
    for (int k = 1; k <= m - 1; ++k) v = sd.action[static_cast<std::size_t>(k)].apply(v);
    v = scaled_vector(q_power(spec.q, 1 - m), v);
    if (v != scaled_vector(residue(spec, tl, m), e)) return at("wrong Jucys-Murphy eigenvalue on e_{t^lambda}", m);
  }
  R expected(1);
  for (const auto& comp : sd.shape.components())
    for (int p : comp.parts())
      for (int k = 1; k <= p; ++k) {
        R qk(0);
        for (int j = 0; j < k; ++j) qk = qk + q_power(spec.q, j);
        expected = expected * qk;
      }
  for (int k = 1; k < sd.shape.level(); ++k)
    for (int m = 1; m <= sd.shape.offsets()[static_cast<std::size_t>(k)]; ++m)
      expected = expected * (residue(spec, tl, m) - spec.params[static_cast<std::size_t>(k)]);
  if (!(sd.gram(jl, jl) == expected)) return std::string("Gram matrix has the wrong normalization");
  return std::nullopt;
}

}  // namespace

template <class R>
std::optional<std::string> check_specht_invariants(const SpechtModule<R>& sd, const AlgebraSpec<R>& spec) {
  const int n = sd.rank_n();
  const int d = sd.dimension();
  if (static_cast<int>(sd.action.size()) != n) return std::string("wrong number of generator matrices");
  const auto id = Matrix<R>::identity(d);
  const auto& T = sd.action;
  for (int i = 1; i < n; ++i) {
    const auto& a = T[static_cast<std::size_t>(i)];
    if (!((a - id.scaled(spec.q)) * (a + id)).is_zero()) return at("quadratic relation fails", i);
  }
  if (spec.r == 1) {
    if (!(T[0] == id)) return std::string("T_0 is not the identity at level one");
  } else {
    Matrix<R> p = id;
    for (const auto& qk : spec.params) p = p * (T[0] - id.scaled(qk));
    if (!p.is_zero()) return std::string("T_0 does not satisfy its minimal polynomial");
    if (n >= 2 && !(T[0] * T[1] * T[0] * T[1] == T[1] * T[0] * T[1] * T[0])) return std::string("braid relation fails for T_0, T_1");
  }
  for (int i = 1; i + 1 < n; ++i) {
    const auto& a = T[static_cast<std::size_t>(i)];
    const auto& b = T[static_cast<std::size_t>(i + 1)];
    if (!(a * b * a == b * a * b)) return at("braid relation fails", i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(T[static_cast<std::size_t>(i)] * T[static_cast<std::size_t>(j)] == T[static_cast<std::size_t>(j)] * T[static_cast<std::size_t>(i)]))
        return at("commuting relation fails", i);
  if (!(sd.gram == sd.gram.transpose())) return std::string("Gram matrix is not symmetric");
  for (int i = 0; i < n; ++i) {
    const auto& a = T[static_cast<std::size_t>(i)];
    if (!(a.transpose() * sd.gram == sd.gram * a)) return at("form is not invariant", i);
  }
  return std::nullopt;
}

template std::optional<std::string> check_specht_invariants(const SpechtModule<LaurentPoly>&, const AlgebraSpec<LaurentPoly>&);
template std::optional<std::string> check_specht_invariants(const SpechtModule<CycloNum>&, const AlgebraSpec<CycloNum>&);

SpechtData build_specht(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("empty shape");
  if (shape.size() > kMaxSymbolicRank) throw SizeGuardError("symbolic Specht modules are limited to n <= " + std::to_string(kMaxSymbolicRank));
  const MultiPartition mp(shape);
  const auto basis = tableaux(mp, TableauFlavor::Standard);
  const int n = shape.size();
  const AlgebraSpec<LaurentPoly> spec{n, 1, LaurentPoly::q(), {LaurentPoly(1)}};
  std::string last_error = "decoding failed";
  for (unsigned bits : {64U, 128U, 256U}) {
    mpz_class big = 1;
    mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), bits);
    const auto model = detail::murphy_model<mpq_class>(mp, basis, mpq_class(big), {mpq_class(1)});
    bool ok = true;
    auto decode = [&](const Matrix<mpq_class>& m) {
      Matrix<LaurentPoly> out(m.rows(), m.cols());
      for (int i = 0; ok && i < m.rows(); ++i)
        for (int j = 0; ok && j < m.cols(); ++j) {
          if (sgn(m(i, j)) == 0) continue;
          auto p = decode_at_power_of_two(m(i, j), bits);
          if (!p) ok = false;
          else out(i, j) = std::move(*p);
        }
      return out;
    };
    SpechtData sd{mp, basis, {}, {}};
    for (const auto& a : model.action) sd.action.push_back(decode(a));
    sd.gram = decode(model.gram);
    if (!ok) continue;
    if (auto bad = certify_murphy(sd, spec)) {
      last_error = *bad;
      continue;
    }
    return sd;
  }
  throw std::logic_error("symbolic Specht construction failed for " + shape.to_string() + ": " + last_error);
}

SpechtDataC build_specht(const MultiPartition& shape, const AlgebraSpec<CycloNum>& spec) {
  if (shape.size() == 0) throw std::invalid_argument("empty shape");
  if (shape.size() != spec.n || shape.level() != spec.r) throw std::invalid_argument("shape does not match the algebra");
  if (shape.size() > kMaxSymbolicRank) throw SizeGuardError("Specht modules are limited to n <= " + std::to_string(kMaxSymbolicRank));
  const auto basis = tableaux(shape, TableauFlavor::Standard);
  std::vector<CycloNum> params = spec.r == 1 ? std::vector<CycloNum>{CycloNum(1)} : spec.params;
  const auto model = detail::murphy_model<CycloNum>(shape, basis, spec.q, params);
  SpechtDataC sd{shape, basis, model.action, model.gram};
  if (auto bad = certify_murphy(sd, spec)) throw std::domain_error("Specht construction failed at these parameters: " + *bad);
  return sd;
}

Matrix<LaurentPoly> sigma_matrix_symbolic(const SpechtData& sd) {
  if (sd.shape.level() != 1) throw std::invalid_argument("sigma matrix is defined at level one");
  const int d = sd.dimension();
  const int n = sd.rank_n();
  const LaurentPoly qinv = LaurentPoly::monomial(-1);
  const auto id = Matrix<LaurentPoly>::identity(d);
  std::vector<Matrix<LaurentPoly>> tinv(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) tinv[static_cast<std::size_t>(i)] = sd.action[static_cast<std::size_t>(i)].scaled(qinv) + id.scaled(qinv - LaurentPoly(1));

  Matrix<LaurentPoly> s(d, d);
  std::vector<bool> done(static_cast<std::size_t>(d), false);
  const int jl = sd.index_of(initial_tableau(sd.shape));
  s(jl, jl) = LaurentPoly::monomial(sigma_exponent(sd.shape.component(0)));
  done[static_cast<std::size_t>(jl)] = true;
  std::vector<int> todo{jl};
  for (std::size_t head = 0; head < todo.size(); ++head) {
    const int j = todo[head];
    const Tableau& t = sd.basis[static_cast<std::size_t>(j)];
    const auto& word = t.reading_word();
    for (int i = 1; i < n; ++i) {
      if (std::find(word.begin(), word.end(), i) > std::find(word.begin(), word.end(), i + 1)) continue;
      const Tableau u = t.swapped(i);
      if (!u.is_standard()) continue;
      const int ju = sd.index_of(u);
      if (done[static_cast<std::size_t>(ju)]) continue;
      done[static_cast<std::size_t>(ju)] = true;
      s.set_column(ju, tinv[static_cast<std::size_t>(i)].apply(s.column(j)));
      todo.push_back(ju);
    }
  }
  return s;
}

Matrix<CycloNum> sigma_on_module(const SpechtData& sd, const RationalC& c) { return specialize(sigma_matrix_symbolic(sd), c); }

LaurentPoly gram_determinant(const SpechtData& sd) {
  return bareiss_determinant(sd.gram, [](const LaurentPoly& a, const LaurentPoly& b) {
    auto qt = a.divide_exact(b);
    if (!qt) throw std::logic_error("inexact division in fraction-free elimination");
    return *qt;
  });
}

std::vector<int> elementary_divisor_valuations(const SpechtData& sd, int e) {
  const QPoly phi = QPoly::from_integers(cyclotomic_polynomial(e));
  const int d = sd.dimension();
  std::vector<std::vector<RatFunc>> a(static_cast<std::size_t>(d), std::vector<RatFunc>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!sd.gram(i, j).is_zero()) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = RatFunc(sd.gram(i, j));
  std::vector<int> rows(static_cast<std::size_t>(d));
  std::vector<int> cols(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) rows[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i)] = i;
  std::vector<int> counts;
  while (!rows.empty()) {
    int best = -1;
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t x = 0; x < rows.size(); ++x)
      for (std::size_t y = 0; y < cols.size(); ++y) {
        const auto& v = a[static_cast<std::size_t>(rows[x])][static_cast<std::size_t>(cols[y])];
        if (v.is_zero()) continue;
        const int val = v.valuation(phi);
        if (best < 0 || val < best) {
          best = val;
          bi = x;
          bj = y;
        }
      }
    if (best < 0) throw std::logic_error("Gram matrix is singular over Q(q)");
    if (static_cast<int>(counts.size()) <= best) counts.resize(static_cast<std::size_t>(best + 1), 0);
    ++counts[static_cast<std::size_t>(best)];
    const int pr = rows[bi];
    const int pc = cols[bj];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(bi));
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(bj));
    const RatFunc pivot_inv = RatFunc(1) / a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)];
    for (int r : rows) {
      const RatFunc& arc = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)];
      if (arc.is_zero()) continue;
      const RatFunc f = arc * pivot_inv;
      for (int c : cols) {
        const RatFunc& apc = a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)];
        if (!apc.is_zero()) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * apc;
      }
    }
  }
  return counts;
}

JantzenReport jantzen_layers(const SpechtData& sd, const RationalC& c) {
  JantzenReport rep{sd.shape, c, {}};
  const auto e = smallest_e(c);
  const int d = sd.dimension();
  if (!e || *e < 2) {
    rep.layer_dims = {d, 0};
    return rep;
  }
  const auto counts = elementary_divisor_valuations(sd, *e);
  for (int level = 0;; ++level) {
    int dim = 0;
    for (std::size_t v = static_cast<std::size_t>(level); v < counts.size(); ++v) dim += counts[v];
    rep.layer_dims.push_back(dim);
    if (dim == 0) break;
  }
  return rep;
}

}  // namespace hecke
