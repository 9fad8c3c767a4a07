#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "geo/scalar.hpp"

namespace geo {

/// The fixed ordered orthonormal frame (X, Y, Z, W) = indices 0..3.
/// The horizontal distribution is span{X, Y}, the vertical span{Z, W}.
enum Axis : int { AxisX = 0, AxisY = 1, AxisZ = 2, AxisW = 3 };

inline constexpr std::array<Axis, 4> kAxes = {AxisX, AxisY, AxisZ, AxisW};
inline constexpr const char* kAxisNames = "XYZW";

/// Vector with 4 scalar coordinates w.r.t. the frame (X, Y, Z, W).
template <class S>
struct FrameVector {
  std::array<S, 4> c{};

  FrameVector() = default;
  FrameVector(S x, S y, S z, S w) : c{std::move(x), std::move(y), std::move(z), std::move(w)} {}

  static FrameVector axis(Axis i) {
    FrameVector v;
    v.c[i] = ScalarOps<S>::from_int(1);
    return v;
  }
  static FrameVector zero() { return FrameVector{}; }

  const S& x() const { return c[0]; }
  const S& y() const { return c[1]; }
  const S& z() const { return c[2]; }
  const S& w() const { return c[3]; }
  const S& operator[](std::size_t i) const { return c[i]; }
  S& operator[](std::size_t i) { return c[i]; }

  bool is_zero() const {
    for (const S& v : c)
      if (!geo::is_zero(v)) return false;
    return true;
  }

  friend FrameVector operator+(const FrameVector& u, const FrameVector& v) {
    return {u.c[0] + v.c[0], u.c[1] + v.c[1], u.c[2] + v.c[2], u.c[3] + v.c[3]};
  }
  friend FrameVector operator-(const FrameVector& u, const FrameVector& v) {
    return {u.c[0] - v.c[0], u.c[1] - v.c[1], u.c[2] - v.c[2], u.c[3] - v.c[3]};
  }
  FrameVector operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  friend FrameVector operator*(const S& s, const FrameVector& v) {
    return {s * v.c[0], s * v.c[1], s * v.c[2], s * v.c[3]};
  }

  FrameVector& operator+=(const FrameVector& v) {
    for (int i = 0; i < 4; ++i) c[i] += v.c[i];
    return *this;
  }
  FrameVector& operator-=(const FrameVector& v) {
    for (int i = 0; i < 4; ++i) c[i] -= v.c[i];
    return *this;
  }

  friend bool operator==(const FrameVector& u, const FrameVector& v) { return (u - v).is_zero(); }
};

/// Metric on the orthonormal frame: the coordinate dot product.
template <class S>
S inner(const FrameVector<S>& u, const FrameVector<S>& v) {
  return u.c[0] * v.c[0] + u.c[1] * v.c[1] + u.c[2] * v.c[2] + u.c[3] * v.c[3];
}

/// Orthogonal projection onto the horizontal distribution span{X, Y}.
template <class S>
FrameVector<S> project_horizontal(const FrameVector<S>& v) {
  return {v.c[0], v.c[1], S{}, S{}};
}

/// Orthogonal projection onto the vertical distribution span{Z, W}.
template <class S>
FrameVector<S> project_vertical(const FrameVector<S>& v) {
  return {S{}, S{}, v.c[2], v.c[3]};
}

/// Human-readable form, e.g. "2 X - 1/3 Z" (zero vector prints "0").
template <class S>
std::string format_vector(const FrameVector<S>& v) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (geo::is_zero(v.c[i])) continue;
    std::string coeff = ScalarOps<S>::str(v.c[i]);
    if (out.empty()) {
      out = coeff;
    } else if (!coeff.empty() && coeff[0] == '-') {
      out += " - " + coeff.substr(1);
    } else {
      out += " + " + coeff;
    }
    out += " ";
    out += kAxisNames[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace geo
