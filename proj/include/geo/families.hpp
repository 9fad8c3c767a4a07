#pragma once

#include <stdexcept>
#include <string>

#include "geo/lie_algebra.hpp"

namespace geo {

/// Raised by the family constructors when an admissibility gate fails.
/// The message names the violated gate; gates run before any division, so
/// division by zero in the coefficient formulas is impossible.
struct InadmissibleParams : std::domain_error {
  explicit InadmissibleParams(const std::string& gate)
      : std::domain_error("inadmissible parameters: " + gate) {}
};

/// g5(alpha, a, beta, b, r) — admissible ⟺ r ≠ 0 and a·beta − alpha·b ≠ 0.
template <class S>
void check_admissible(const G5Params<S>& p) {
  if (geo::is_zero(p.r)) throw InadmissibleParams("g5: r = 0");
  if (geo::is_zero(p.a * p.beta - p.alpha * p.b)) throw InadmissibleParams("g5: a*beta - alpha*b = 0");
}

/// g18(beta, b, z3, z4, theta1, theta2) — admissible ⟺ beta ≠ 0 and b ≠ 0.
template <class S>
void check_admissible(const G18Params<S>& p) {
  if (geo::is_zero(p.beta)) throw InadmissibleParams("g18: beta = 0");
  if (geo::is_zero(p.b)) throw InadmissibleParams("g18: b = 0");
}

/// g20(alpha, a, beta, w1, w2) — admissible ⟺ alpha ≠ 0, a ≠ 0, beta ≠ 0.
/// The coefficient b = beta·a/alpha is derived (and then nonzero
/// automatically).
template <class S>
void check_admissible(const G20Params<S>& p) {
  if (geo::is_zero(p.alpha)) throw InadmissibleParams("g20: alpha = 0");
  if (geo::is_zero(p.a)) throw InadmissibleParams("g20: a = 0");
  if (geo::is_zero(p.beta)) throw InadmissibleParams("g20: beta = 0");
}

template <class S>
void check_admissible(const FamilyParams<S>& p) {
  std::visit([](const auto& q) { check_admissible(q); }, p);
}

/// Schema coefficients realized by each family display (exact divisions,
/// run after the admissibility gate).
template <class S>
SchemaParams<S> induced_schema(const G5Params<S>& p) {
  check_admissible(p);
  const S two = ScalarOps<S>::from_int(2);
  const S D = p.a * p.beta - p.alpha * p.b;
  SchemaParams<S> s;
  s.alpha = p.alpha;
  s.a = p.a;
  s.beta = p.beta;
  s.b = p.b;
  s.r = p.r;
  s.z1 = p.r * (p.beta * p.b - p.alpha * p.a) / (two * D);
  s.z2 = p.r * (p.alpha * p.b + p.beta * p.a) / (two * D);
  s.z3 = p.r * (p.b * p.b - p.a * p.a) / (two * D);
  s.z4 = p.r * p.a * p.b / D;
  s.w1 = p.r * (p.alpha * p.alpha - p.beta * p.beta) / (two * D);
  s.w2 = -(p.r * p.alpha * p.beta) / D;
  s.theta1 = -(p.a * p.r * p.r) / (two * D);
  s.theta2 = p.alpha * p.r * p.r / (two * D);
  return s;
}

template <class S>
SchemaParams<S> induced_schema(const G18Params<S>& p) {
  check_admissible(p);
  SchemaParams<S> s;
  s.beta = p.beta;
  s.b = p.b;
  s.z3 = p.z3;
  s.z4 = p.z4;
  s.theta1 = p.theta1;
  s.theta2 = p.theta2;
  s.z1 = p.beta * p.z3 / p.b;
  s.z2 = p.beta * p.z4 / p.b;
  s.w1 = -(p.beta * p.beta * p.z3) / (p.b * p.b);
  s.w2 = -(p.beta * p.beta * p.z4) / (p.b * p.b);
  return s;
}

template <class S>
SchemaParams<S> induced_schema(const G20Params<S>& p) {
  check_admissible(p);
  SchemaParams<S> s;
  s.alpha = p.alpha;
  s.a = p.a;
  s.beta = p.beta;
  s.w1 = p.w1;
  s.w2 = p.w2;
  s.b = p.beta * p.a / p.alpha;
  s.z1 = -(p.a * p.w1) / p.alpha;
  s.z2 = -(p.a * p.w2) / p.alpha;
  s.z3 = -(p.a * p.a * p.w1) / (p.alpha * p.alpha);
  s.z4 = -(p.a * p.a * p.w2) / (p.alpha * p.alpha);
  return s;
}

template <class S>
SchemaParams<S> induced_schema(const FamilyParams<S>& p) {
  return std::visit([](const auto& q) { return induced_schema(q); }, p);
}

/// Bracket table of a family instance; origin tag family(name, params).
template <class S>
LieAlgebra4<S> build_family(const FamilyParams<S>& p) {
  return LieAlgebra4<S>::from_family(p, induced_schema(p));
}

template <class S>
LieAlgebra4<S> build_family(const G5Params<S>& p) {
  return build_family(FamilyParams<S>(p));
}
template <class S>
LieAlgebra4<S> build_family(const G18Params<S>& p) {
  return build_family(FamilyParams<S>(p));
}
template <class S>
LieAlgebra4<S> build_family(const G20Params<S>& p) {
  return build_family(FamilyParams<S>(p));
}

}  // namespace geo
