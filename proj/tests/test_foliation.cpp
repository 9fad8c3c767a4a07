#include <doctest.h>

#include "geo/foliation.hpp"
#include "geo/rational.hpp"
#include "geo/sampler.hpp"

using geo::Axis;
using geo::AxisW;
using geo::AxisX;
using geo::AxisY;
using geo::AxisZ;
using geo::FormSide;
using geo::LieAlgebra4;
using geo::Rational;
using geo::SchemaParams;
using Vec = geo::FrameVector<Rational>;
using Algebra = LieAlgebra4<Rational>;

TEST_CASE("second fundamental forms on the schema: closed values") {
  geo::RationalSampler sampler(41, 5, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const SchemaParams<Rational> p = sampler.schema();
    const Algebra A = Algebra::from_schema(p);
    const auto BV = second_fundamental(A, FormSide::vertical);
    const auto BH = second_fundamental(A, FormSide::horizontal);
    const Rational half(1, 2);

    CHECK(BV.v11 == Vec{-p.z1, -p.z2, Rational(0), Rational(0)});
    CHECK(BV.v12 == Vec{-half * (p.z3 + p.w1), -half * (p.z4 + p.w2), Rational(0), Rational(0)});
    CHECK(BV.v22 == Vec{p.z1, p.z2, Rational(0), Rational(0)});

    CHECK(BH.v11 == Vec{Rational(0), Rational(0), p.alpha, p.a});
    CHECK(BH.v12.is_zero());
    CHECK(BH.v22 == Vec{Rational(0), Rational(0), p.alpha, p.a});
  }
}

TEST_CASE("second fundamental form is symmetric and lands in the opposite span") {
  geo::RationalSampler sampler(42, 5, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const Algebra A = sampler.antisymmetric_table();
    const auto BV = second_fundamental(A, FormSide::vertical);
    const auto BH = second_fundamental(A, FormSide::horizontal);
    CHECK(BV.value(0, 1) == BV.value(1, 0));
    CHECK(BH.value(0, 1) == BH.value(1, 0));
    for (const Vec* v : {&BV.v11, &BV.v12, &BV.v22}) CHECK(project_vertical(*v).is_zero());
    for (const Vec* v : {&BH.v11, &BH.v12, &BH.v22}) CHECK(project_horizontal(*v).is_zero());
  }
}

TEST_CASE("abelian: every predicate trivially true") {
  const Algebra A = Algebra::from_schema(SchemaParams<Rational>{});
  CHECK(is_minimal(A));
  CHECK(is_totally_geodesic(A));
  CHECK(is_conformal(A));
  CHECK(conformal_vector(A).is_zero());
  CHECK(is_riemannian(A));
  CHECK(is_horizontally_integrable(A));
  CHECK(is_vertically_integrable(A));
  CHECK(mean_curvature(A, connection_table(A)).is_zero());
}

TEST_CASE("every schema instance is minimal and conformal with V = alpha Z + a W") {
  geo::RationalSampler sampler(43, 5, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const SchemaParams<Rational> p = sampler.schema();
    const Algebra A = Algebra::from_schema(p);
    CHECK(is_minimal(A));
    CHECK(is_conformal(A));
    CHECK(conformal_vector(A) == Vec{Rational(0), Rational(0), p.alpha, p.a});
  }
}

TEST_CASE("totally geodesic locus z1 = z2 = z3+w1 = z4+w2 = 0") {
  SchemaParams<Rational> on;
  on.z3 = Rational(1);
  on.w1 = Rational(-1);
  on.z4 = Rational(2);
  on.w2 = Rational(-2);
  on.alpha = Rational(3);  // unrelated coefficients may be anything
  on.theta1 = Rational(1);
  CHECK(is_totally_geodesic(Algebra::from_schema(on)));

  SchemaParams<Rational> off;
  off.z1 = Rational(1);
  CHECK(!is_totally_geodesic(Algebra::from_schema(off)));

  SchemaParams<Rational> off2;
  off2.w1 = Rational(1);  // z3 + w1 = 1
  CHECK(!is_totally_geodesic(Algebra::from_schema(off2)));
}

TEST_CASE("riemannian locus alpha = a = 0") {
  SchemaParams<Rational> on;
  on.beta = Rational(2);
  on.z1 = Rational(1);
  on.theta2 = Rational(-1);
  CHECK(is_riemannian(Algebra::from_schema(on)));

  SchemaParams<Rational> off;
  off.alpha = Rational(1);
  CHECK(!is_riemannian(Algebra::from_schema(off)));
  SchemaParams<Rational> off2;
  off2.a = Rational(-1, 2);
  CHECK(!is_riemannian(Algebra::from_schema(off2)));
}

TEST_CASE("horizontal integrability locus theta1 = theta2 = 0") {
  SchemaParams<Rational> on;
  on.r = Rational(4);  // r only affects the horizontal part of [Y,X]
  on.z1 = Rational(1);
  CHECK(is_horizontally_integrable(Algebra::from_schema(on)));

  SchemaParams<Rational> off;
  off.theta1 = Rational(1);
  CHECK(!is_horizontally_integrable(Algebra::from_schema(off)));
  SchemaParams<Rational> off2;
  off2.theta2 = Rational(-2, 3);
  CHECK(!is_horizontally_integrable(Algebra::from_schema(off2)));
}

TEST_CASE("vertical integrability on the schema holds by construction") {
  geo::RationalSampler sampler(44, 5, 3);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(is_vertically_integrable(Algebra::from_schema(sampler.schema())));
  // A general table can break it: [Z,W] with a horizontal component.
  const Vec zw{Rational(1), Rational(0), Rational(0), Rational(0)};
  CHECK(!is_vertically_integrable(Algebra::from_table({{AxisZ, AxisW, zw}})));
}

TEST_CASE("general table: [Z,X] = Z breaks minimality") {
  const Vec zx{Rational(0), Rational(0), Rational(1), Rational(0)};
  const Algebra A = Algebra::from_table({{AxisZ, AxisX, zx}});
  // <nabla_Z Z, X> = <[X,Z],Z> = -1, so trace B^V = -X.
  CHECK(mean_curvature(A, connection_table(A)) ==
        Vec{Rational(-1), Rational(0), Rational(0), Rational(0)});
  CHECK(!is_minimal(A));
  CHECK(!is_totally_geodesic(A));
}

TEST_CASE("general table: [Z,X] = X breaks conformality") {
  const Vec zx{Rational(1), Rational(0), Rational(0), Rational(0)};
  const Algebra A = Algebra::from_table({{AxisZ, AxisX, zx}});
  CHECK(!is_conformal(A));
  CHECK_THROWS_AS(conformal_vector(A), geo::NotConformal);
  CHECK_THROWS_AS(is_riemannian(A), geo::NotConformal);
  CHECK_THROWS_WITH(conformal_vector(A), "not conformal: B^H is not of the form g (x) V");
}

TEST_CASE("totally geodesic implies minimal") {
  geo::RationalSampler sampler(45, 5, 3);
  int geodesic_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    SchemaParams<Rational> p = sampler.schema();
    if (trial % 2 == 0) {
      // Force the locus so the implication is exercised, not vacuous.
      p.z1 = p.z2 = Rational(0);
      p.w1 = -p.z3;
      p.w2 = -p.z4;
    }
    const Algebra A = Algebra::from_schema(p);
    if (is_totally_geodesic(A)) {
      ++geodesic_seen;
      CHECK(is_minimal(A));
    }
  }
  CHECK(geodesic_seen >= 30);

  for (int trial = 0; trial < 30; ++trial) {
    const Algebra A = sampler.antisymmetric_table();
    if (is_totally_geodesic(A)) CHECK(is_minimal(A));
  }
}

TEST_CASE("form value accessor indexes the generating pair") {
  geo::RationalSampler sampler(46, 5, 3);
  const Algebra A = Algebra::from_schema(sampler.schema());
  const auto BV = second_fundamental(A, FormSide::vertical);
  CHECK(BV.value(0, 0) == BV.v11);
  CHECK(BV.value(0, 1) == BV.v12);
  CHECK(BV.value(1, 1) == BV.v22);
}
