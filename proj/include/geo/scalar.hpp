#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "geo/rational.hpp"

namespace geo {

/// Comparison tolerance for the binary64 scan mode.  Exact mode never
/// consults it.  The CLI overrides the default through GEO_FLOAT_TOL.
inline double& float_tolerance() {
  static double tol = 1e-9;
  return tol;
}

/// Uniform scalar interface for the two arithmetic modes: exact rationals
/// (the source of truth) and binary64 (dense grid scans only).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static Rational from_int(long long n) { return Rational(n); }
  static std::string str(const Rational& v) { return v.str(); }
};

template <>
struct ScalarOps<double> {
  static bool is_zero(double v) { return std::fabs(v) <= float_tolerance(); }
  static double from_int(long long n) { return static_cast<double>(n); }
  static std::string str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
};

template <class S>
bool is_zero(const S& v) {
  return ScalarOps<S>::is_zero(v);
}

}  // namespace geo
