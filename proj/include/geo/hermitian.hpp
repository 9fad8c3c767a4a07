#pragma once

#include <stdexcept>

#include "geo/foliation.hpp"

namespace geo {

/// Raised by produces_harmonic_morphisms when the minimal-and-conformal
/// hypothesis does not hold, so the predicate is not defined.
struct HypothesisViolated : std::domain_error {
  HypothesisViolated()
      : std::domain_error("hypothesis violated: foliation is not minimal and conformal") {}
};

/// The two almost Hermitian structures adapted to the splitting V ⊕ H:
///   J_k X = Y,  J_k Y = −X,  J_1 Z = W, J_1 W = −Z,  J_2 Z = −W, J_2 W = Z.
/// Both square to −id and are isometries of the frame metric.
template <class S>
FrameVector<S> apply_J(int k, const FrameVector<S>& v) {
  if (k != 1 && k != 2) throw std::invalid_argument("apply_J: selector k must be 1 or 2");
  const S s = ScalarOps<S>::from_int(k == 1 ? 1 : -1);
  return {-v.c[1], v.c[0], -(s * v.c[3]), s * v.c[2]};
}

/// Divergence δJ_k = Σ_i (∇_{e_i} J_k)(e_i) = Σ_i [∇_{e_i}(J_k e_i) − J_k ∇_{e_i} e_i],
/// evaluated from the connection table.
template <class S>
FrameVector<S> divergence_J(const LieAlgebra4<S>& A, const ConnectionTable<S>& t, int k) {
  (void)A;
  FrameVector<S> sum;
  for (Axis i : kAxes) {
    const FrameVector<S> Jei = apply_J(k, FrameVector<S>::axis(i));
    sum += nabla(t, FrameVector<S>::axis(i), Jei) - apply_J(k, t(i, i));
  }
  return sum;
}

template <class S>
FrameVector<S> divergence_J(const LieAlgebra4<S>& A, int k) {
  return divergence_J(A, connection_table(A), k);
}

/// Cosymplectic ⟺ the structure is divergence-free.
template <class S>
bool is_cosymplectic(const LieAlgebra4<S>& A, const ConnectionTable<S>& t, int k) {
  return divergence_J(A, t, k).is_zero();
}
template <class S>
bool is_cosymplectic(const LieAlgebra4<S>& A, int k) {
  return is_cosymplectic(A, connection_table(A), k);
}

/// A minimal conformal foliation produces harmonic morphisms exactly when
/// the divergence of the structure is vertical, i.e. H δJ_k = 0.  The
/// hypothesis (minimal and conformal) is a hard precondition.
template <class S>
bool produces_harmonic_morphisms(const LieAlgebra4<S>& A, const ConnectionTable<S>& t, int k) {
  if (!is_minimal(A, t) || !is_conformal(A, t)) throw HypothesisViolated{};
  return project_horizontal(divergence_J(A, t, k)).is_zero();
}
template <class S>
bool produces_harmonic_morphisms(const LieAlgebra4<S>& A, int k) {
  return produces_harmonic_morphisms(A, connection_table(A), k);
}

/// Skew-symmetric Nijenhuis tensor of J_k on frame pairs:
///   N_k(E,F) = [E,F] + J_k[J_kE, F] + J_k[E, J_kF] − [J_kE, J_kF].
/// N_k(X,Y) = N_k(Z,W) = 0 for every antisymmetric table (an identity of
/// the tensor with these J's), so integrability is decided by the four
/// mixed pairs.
template <class S>
struct NijenhuisTable {
  int k{};
  std::array<std::array<FrameVector<S>, 4>, 4> values{};

  const FrameVector<S>& operator()(Axis i, Axis j) const { return values[i][j]; }

  bool all_zero() const {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!values[i][j].is_zero()) return false;
    return true;
  }
};

template <class S>
FrameVector<S> nijenhuis_pair(const LieAlgebra4<S>& A, int k, const FrameVector<S>& E,
                              const FrameVector<S>& F) {
  const FrameVector<S> JE = apply_J(k, E), JF = apply_J(k, F);
  return A.bracket(E, F) + apply_J(k, A.bracket(JE, F)) + apply_J(k, A.bracket(E, JF)) -
         A.bracket(JE, JF);
}

template <class S>
NijenhuisTable<S> nijenhuis(const LieAlgebra4<S>& A, int k) {
  NijenhuisTable<S> N;
  N.k = k;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      N.values[i][j] = nijenhuis_pair(A, k, FrameVector<S>::axis(Axis(i)), FrameVector<S>::axis(Axis(j)));
      N.values[j][i] = -N.values[i][j];
    }
  return N;
}

/// Integrable ⟺ the Nijenhuis tensor vanishes identically (tensoriality
/// makes the frame pairs a complete check).
template <class S>
bool is_integrable(const LieAlgebra4<S>& A, int k) {
  return nijenhuis(A, k).all_zero();
}

/// The two 1-forms on H built from the vertical second fundamental form:
///   alphaForm(E) = 2 ⟨B^V(Z,Z) − B^V(W,W), E⟩,
///   betaForm(E)  = 2 ⟨B^V(Z,W) + B^V(W,Z), E⟩.
/// Given minimality, both vanish identically ⟺ totally geodesic.  (These
/// are distinct from the schema coefficients alpha, beta.)
template <class S>
struct ShapeForms {
  S alpha_on_x{}, alpha_on_y{};
  S beta_on_x{}, beta_on_y{};
};

template <class S>
ShapeForms<S> shape_forms(const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  const auto B = second_fundamental(A, t, FormSide::vertical);
  const S two = ScalarOps<S>::from_int(2);
  const FrameVector<S> d = B.v11 - B.v22;      // B^V(Z,Z) − B^V(W,W)
  const FrameVector<S> s = B.v12 + B.v12;      // B^V(Z,W) + B^V(W,Z), the form being symmetric
  ShapeForms<S> f;
  f.alpha_on_x = two * inner(d, FrameVector<S>::axis(AxisX));
  f.alpha_on_y = two * inner(d, FrameVector<S>::axis(AxisY));
  f.beta_on_x = two * inner(s, FrameVector<S>::axis(AxisX));
  f.beta_on_y = two * inner(s, FrameVector<S>::axis(AxisY));
  return f;
}

template <class S>
ShapeForms<S> shape_forms(const LieAlgebra4<S>& A) {
  return shape_forms(A, connection_table(A));
}

}  // namespace geo
