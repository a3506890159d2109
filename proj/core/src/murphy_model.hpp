#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/matrix.hpp"

namespace hecke::detail {

/// Generator matrix with at most two nonzero entries per column.
template <class F>
struct SparseGen {
  std::vector<std::vector<std::pair<int, F>>> cols;
};

/// Murphy-basis matrices of T_0..T_{n-1} and the Gram matrix, obtained from
/// the seminormal model at the given (semisimple) parameters.
template <class F>
struct MurphyModel {
  std::vector<Matrix<F>> action;
  Matrix<F> gram;
  /// Breadth-first edges (child, parent, i): e_child = T_i e_parent.
  std::vector<std::tuple<int, int, int>> edges;
};

/// Throws std::domain_error if two residues that must differ coincide.
template <class F>
MurphyModel<F> murphy_model(const MultiPartition& shape, const std::vector<Tableau>& basis, const F& q,
                            const std::vector<F>& params);

}  // namespace hecke::detail
