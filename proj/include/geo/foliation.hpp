#pragma once

#include <stdexcept>

#include "geo/connection.hpp"

namespace geo {

/// Raised by conformal_vector / is_riemannian when the foliation is not
/// conformal (the conformal vector V only exists in that case).
struct NotConformal : std::domain_error {
  NotConformal() : std::domain_error("not conformal: B^H is not of the form g (x) V") {}
};

enum class FormSide { vertical, horizontal };

/// Second fundamental form of one side of the splitting:
///   B^V(U,V) = 1/2 H(∇_U V + ∇_V U) on the vertical pair (Z, W),
///   B^H(X,Y) = 1/2 V(∇_X Y + ∇_Y X) on the horizontal pair (X, Y).
/// Symmetric in its two arguments; values land in the opposite distribution
/// (the projection is built in).
template <class S>
struct SecondFundamentalForm {
  FormSide which{};
  // Values on the generating pair (A1,A1), (A1,A2), (A2,A2) where (A1,A2)
  // is (Z,W) for the vertical form and (X,Y) for the horizontal one.
  FrameVector<S> v11, v12, v22;

  const FrameVector<S>& value(int first, int second) const {
    if (first != second) return v12;
    return first == 0 ? v11 : v22;
  }
};

template <class S>
SecondFundamentalForm<S> second_fundamental(const LieAlgebra4<S>& A, const ConnectionTable<S>& t,
                                            FormSide which) {
  const S half = ScalarOps<S>::from_int(1) / ScalarOps<S>::from_int(2);
  const Axis a1 = which == FormSide::vertical ? AxisZ : AxisX;
  const Axis a2 = which == FormSide::vertical ? AxisW : AxisY;
  const auto project = [&](const FrameVector<S>& v) {
    return which == FormSide::vertical ? project_horizontal(v) : project_vertical(v);
  };
  SecondFundamentalForm<S> B;
  B.which = which;
  B.v11 = project(t(a1, a1));
  B.v12 = project(half * (t(a1, a2) + t(a2, a1)));
  B.v22 = project(t(a2, a2));
  (void)A;
  return B;
}

template <class S>
SecondFundamentalForm<S> second_fundamental(const LieAlgebra4<S>& A, FormSide which) {
  return second_fundamental(A, connection_table(A), which);
}

/// trace B^V = B^V(Z,Z) + B^V(W,W): the (unnormalized) mean curvature of
/// the leaves.
template <class S>
FrameVector<S> mean_curvature(const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  const auto B = second_fundamental(A, t, FormSide::vertical);
  return B.v11 + B.v22;
}

template <class S>
bool is_minimal(const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  return mean_curvature(A, t).is_zero();
}
template <class S>
bool is_minimal(const LieAlgebra4<S>& A) {
  return is_minimal(A, connection_table(A));
}

template <class S>
bool is_totally_geodesic(const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  const auto B = second_fundamental(A, t, FormSide::vertical);
  return B.v11.is_zero() && B.v12.is_zero() && B.v22.is_zero();
}
template <class S>
bool is_totally_geodesic(const LieAlgebra4<S>& A) {
  return is_totally_geodesic(A, connection_table(A));
}

/// Conformal ⟺ B^H = g ⊗ V for a vertical V, which on the frame reduces to
/// B^H(X,X) = B^H(Y,Y) and B^H(X,Y) = 0; then V = B^H(X,X).
template <class S>
bool is_conformal(const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  const auto B = second_fundamental(A, t, FormSide::horizontal);
  return (B.v11 - B.v22).is_zero() && B.v12.is_zero();
}
template <class S>
bool is_conformal(const LieAlgebra4<S>& A) {
  return is_conformal(A, connection_table(A));
}

template <class S>
FrameVector<S> conformal_vector(const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  if (!is_conformal(A, t)) throw NotConformal{};
  return second_fundamental(A, t, FormSide::horizontal).v11;
}
template <class S>
FrameVector<S> conformal_vector(const LieAlgebra4<S>& A) {
  return conformal_vector(A, connection_table(A));
}

/// Riemannian ⟺ conformal with V = 0.  Signals NotConformal when the
/// precondition fails.
template <class S>
bool is_riemannian(const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  return conformal_vector(A, t).is_zero();
}
template <class S>
bool is_riemannian(const LieAlgebra4<S>& A) {
  return is_riemannian(A, connection_table(A));
}

/// The horizontal distribution span{X, Y} is integrable ⟺ V[X,Y] = 0.
template <class S>
bool is_horizontally_integrable(const LieAlgebra4<S>& A) {
  using Vec = FrameVector<S>;
  return project_vertical(A.bracket(Vec::axis(AxisX), Vec::axis(AxisY))).is_zero();
}

/// The vertical distribution span{Z, W} is integrable ⟺ H[Z,W] = 0.
/// On the schema this holds by construction ([W,Z] = λW is vertical);
/// general tables can violate it, and reports record the status.
template <class S>
bool is_vertically_integrable(const LieAlgebra4<S>& A) {
  using Vec = FrameVector<S>;
  return project_horizontal(A.bracket(Vec::axis(AxisZ), Vec::axis(AxisW))).is_zero();
}

}  // namespace geo
