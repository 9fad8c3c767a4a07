#pragma once

#include <array>

#include "geo/lie_algebra.hpp"

namespace geo {

/// Levi-Civita connection of the left-invariant metric, as the table
/// nabla[i][j] = ∇_{e_i} e_j.  Because all fields involved are
/// left-invariant, the derivative terms of the general Koszul formula
/// vanish and the table is pure structure-constant algebra.  Metric
/// compatibility and torsion-freeness hold for EVERY antisymmetric
/// bracket table, Lie or not.
template <class S>
struct ConnectionTable {
  std::array<std::array<FrameVector<S>, 4>, 4> nabla{};

  const FrameVector<S>& operator()(Axis i, Axis j) const { return nabla[i][j]; }
};

/// Koszul coefficient ⟨∇_{e_i} e_j, e_k⟩ =
///   (⟨[e_k,e_i],e_j⟩ + ⟨[e_k,e_j],e_i⟩ + ⟨e_k,[e_i,e_j]⟩) / 2.
template <class S>
S koszul_coefficient(const LieAlgebra4<S>& A, Axis i, Axis j, Axis k) {
  using Vec = FrameVector<S>;
  const Vec ei = Vec::axis(i), ej = Vec::axis(j), ek = Vec::axis(k);
  const S twice = inner(A.bracket(ek, ei), ej) + inner(A.bracket(ek, ej), ei) +
                  inner(ek, A.bracket(ei, ej));
  return twice / ScalarOps<S>::from_int(2);
}

template <class S>
ConnectionTable<S> connection_table(const LieAlgebra4<S>& A) {
  ConnectionTable<S> t;
  for (Axis i : kAxes)
    for (Axis j : kAxes)
      for (Axis k : kAxes) t.nabla[i][j][k] = koszul_coefficient(A, i, j, k);
  return t;
}

/// Bilinear extension ∇_u v over the table.
template <class S>
FrameVector<S> nabla(const ConnectionTable<S>& t, const FrameVector<S>& u, const FrameVector<S>& v) {
  FrameVector<S> out;
  for (int i = 0; i < 4; ++i) {
    if (geo::is_zero(u.c[i])) continue;
    for (int j = 0; j < 4; ++j) {
      if (geo::is_zero(v.c[j])) continue;
      out += (u.c[i] * v.c[j]) * t.nabla[i][j];
    }
  }
  return out;
}

template <class S>
FrameVector<S> nabla(const LieAlgebra4<S>& A, const FrameVector<S>& u, const FrameVector<S>& v) {
  return nabla(connection_table(A), u, v);
}

}  // namespace geo
