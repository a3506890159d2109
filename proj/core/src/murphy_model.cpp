#include "murphy_model.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "hecke/cyclo.hpp"
#include "hecke/linalg.hpp"

namespace hecke::detail {

namespace {

template <class F>
std::vector<F> left_apply(const SparseGen<F>& g, const std::vector<F>& v) {
  std::vector<F> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (is_zero_value(v[j])) continue;
    for (const auto& [row, val] : g.cols[j]) out[static_cast<std::size_t>(row)] += val * v[j];
  }
  return out;
}

template <class F>
std::vector<F> right_apply(const std::vector<F>& psi, const SparseGen<F>& g) {
  std::vector<F> out(psi.size());
  for (std::size_t j = 0; j < psi.size(); ++j)
    for (const auto& [row, val] : g.cols[j]) {
      const F& p = psi[static_cast<std::size_t>(row)];
      if (!is_zero_value(p)) out[j] += p * val;
    }
  return out;
}

template <class F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
  F s(0);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!is_zero_value(a[k]) && !is_zero_value(b[k])) s += a[k] * b[k];
  return s;
}

std::vector<int> positions(const Tableau& t) {
  std::vector<int> pos(static_cast<std::size_t>(t.size() + 1));
  for (std::size_t p = 0; p < t.reading_word().size(); ++p) pos[static_cast<std::size_t>(t.reading_word()[p])] = static_cast<int>(p);
  return pos;
}

}  // namespace

template <class F>
MurphyModel<F> murphy_model(const MultiPartition& shape, const std::vector<Tableau>& basis, const F& q,
                            const std::vector<F>& params) {
  const int n = shape.size();
  const int d = static_cast<int>(basis.size());
  std::map<std::vector<int>, int> index;
  for (int j = 0; j < d; ++j) index[basis[static_cast<std::size_t>(j)].reading_word()] = j;

  const F qinv = F(1) / q;
  std::vector<F> qpow(static_cast<std::size_t>(2 * n + 1));
  qpow[static_cast<std::size_t>(n)] = F(1);
  for (int k = 1; k <= n; ++k) {
    qpow[static_cast<std::size_t>(n + k)] = qpow[static_cast<std::size_t>(n + k - 1)] * q;
    qpow[static_cast<std::size_t>(n - k)] = qpow[static_cast<std::size_t>(n - k + 1)] * qinv;
  }
  auto res = [&](const Tableau& t, int k) -> F {
    const Node nd = t.node_of(k);
    return params[static_cast<std::size_t>(nd.comp)] * qpow[static_cast<std::size_t>(n + nd.col - nd.row)];
  };

  // Seminormal generators: T_0 = L_1 is diagonal; T_i mixes f_t and f_{t s_i}.
  std::vector<SparseGen<F>> gens(static_cast<std::size_t>(n));
  gens[0].cols.resize(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) gens[0].cols[static_cast<std::size_t>(j)] = {{j, res(basis[static_cast<std::size_t>(j)], 1)}};
  for (int i = 1; i < n; ++i) {
    auto& cols = gens[static_cast<std::size_t>(i)].cols;
    cols.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      const Tableau& t = basis[static_cast<std::size_t>(j)];
      const Node a = t.node_of(i);
      const Node b = t.node_of(i + 1);
      auto& col = cols[static_cast<std::size_t>(j)];
      if (a.comp == b.comp && a.row == b.row) {
        col = {{j, q}};
      } else if (a.comp == b.comp && a.col == b.col) {
        col = {{j, F(-1)}};
      } else {
        const Tableau s = t.swapped(i);
        const int js = index.at(s.reading_word());
        const auto pos = positions(t);
        const bool earlier = pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(i + 1)];
        const Tableau& u = earlier ? t : s;
        const F x = res(u, i);
        const F y = res(u, i + 1);
        if (x == y) throw std::domain_error("parameters are not semisimple for this shape");
        const F A = (F(1) - q) * y / (x - y);
        if (earlier) {
          col = {{j, A}, {js, F(1)}};
        } else {
          const F D = -((A - q) * (A + F(1)));
          col = {{j, q - F(1) - A}, {js, D}};
        }
      }
    }
  }

  // m_lambda = (product of (L_m - q_k)) x_lambda has rank one with image
  // spanned by f_{t^lambda}; its t^lambda row is the functional phi.
  const Tableau tl = initial_tableau(shape);
  const int jl = index.at(tl.reading_word());
  std::vector<F> phi(static_cast<std::size_t>(d));
  phi[static_cast<std::size_t>(jl)] = F(1);
  {
    int start = 1;
    for (const auto& comp : shape.components())
      for (int row = 0; row < comp.length(); ++row) {
        const int a = start;
        const int bnd = start + comp.part(row) - 1;
        start = bnd + 1;
        // x_{[a..c+1]} = x_{[a..c]} (1 + T_c + T_c T_{c-1} + ... + T_c...T_a)
        for (int c = a; c < bnd; ++c) {
          std::vector<F> w = phi;
          std::vector<F> acc = phi;
          for (int j = c; j >= a; --j) {
            w = right_apply(w, gens[static_cast<std::size_t>(j)]);
            for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += w[k];
          }
          phi = std::move(acc);
        }
      }
    F lfac(1);
    for (int k = 1; k < shape.level(); ++k)
      for (int m = 1; m <= shape.offsets()[static_cast<std::size_t>(k)]; ++m) lfac = lfac * (res(tl, m) - params[static_cast<std::size_t>(k)]);
    for (auto& x : phi) x = x * lfac;
  }
  if (is_zero_value(phi[static_cast<std::size_t>(jl)])) throw std::domain_error("m_lambda vanishes at these parameters");

  // Murphy vectors v_t = T_{d(t)^{-1}} f_{t^lambda} and covectors
  // psi_s = phi T_{d(s)}, built along length-increasing edges.
  MurphyModel<F> out;
  std::vector<std::vector<F>> v(static_cast<std::size_t>(d));
  std::vector<std::vector<F>> psi(static_cast<std::size_t>(d));
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  v[static_cast<std::size_t>(jl)].assign(static_cast<std::size_t>(d), F(0));
  v[static_cast<std::size_t>(jl)][static_cast<std::size_t>(jl)] = F(1);
  psi[static_cast<std::size_t>(jl)] = phi;
  seen[static_cast<std::size_t>(jl)] = true;
  std::deque<int> todo{jl};
  while (!todo.empty()) {
    const int j = todo.front();
    todo.pop_front();
    const Tableau& t = basis[static_cast<std::size_t>(j)];
    const auto pos = positions(t);
    for (int i = 1; i < n; ++i) {
      if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i + 1)]) continue;
      const Tableau s = t.swapped(i);
      if (!s.is_standard()) continue;
      const int js = index.at(s.reading_word());
      if (seen[static_cast<std::size_t>(js)]) continue;
      seen[static_cast<std::size_t>(js)] = true;
      v[static_cast<std::size_t>(js)] = left_apply(gens[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
      psi[static_cast<std::size_t>(js)] = right_apply(psi[static_cast<std::size_t>(j)], gens[static_cast<std::size_t>(i)]);
      out.edges.emplace_back(js, j, i);
      todo.push_back(js);
    }
  }
  for (bool b : seen)
    if (!b) throw std::logic_error("standard tableaux not connected to the initial tableau");

  Matrix<F> vm(d, d);
  for (int j = 0; j < d; ++j) vm.set_column(j, v[static_cast<std::size_t>(j)]);
  out.gram = Matrix<F>(d, d);
  for (int s = 0; s < d; ++s)
    for (int t = s; t < d; ++t) {
      F g = dot(psi[static_cast<std::size_t>(s)], v[static_cast<std::size_t>(t)]);
      out.gram(t, s) = g;
      out.gram(s, t) = std::move(g);
    }
  auto vinv = inverse(vm);
  if (!vinv) throw std::logic_error("Murphy vectors are linearly dependent");

  // Columns fixed by the length bookkeeping are written directly; the rest
  // (i and i+1 in one column of t) are expanded through V^{-1}.
  out.action.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Matrix<F> m(d, d);
    for (int j = 0; j < d; ++j) {
      const Tableau& t = basis[static_cast<std::size_t>(j)];
      if (i >= 1) {
        const Node a = t.node_of(i);
        const Node b = t.node_of(i + 1);
        if (a.comp == b.comp && a.row == b.row) {
          m(j, j) = q;
          continue;
        }
        const Tableau s = t.swapped(i);
        if (s.is_standard()) {
          const int js = index.at(s.reading_word());
          const auto pos = positions(t);
          if (pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(i + 1)]) {
            m(js, j) = F(1);
          } else {
            m(j, j) = q - F(1);
            m(js, j) = q;
          }
          continue;
        }
      }
      m.set_column(j, vinv->apply(left_apply(gens[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)])));
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

template MurphyModel<mpq_class> murphy_model(const MultiPartition&, const std::vector<Tableau>&, const mpq_class&,
                                             const std::vector<mpq_class>&);
template MurphyModel<CycloNum> murphy_model(const MultiPartition&, const std::vector<Tableau>&, const CycloNum&,
                                            const std::vector<CycloNum>&);

}  // namespace hecke::detail
