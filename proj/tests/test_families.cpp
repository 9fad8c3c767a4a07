#include <doctest.h>

#include <string>

#include "geo/families.hpp"
#include "geo/foliation.hpp"
#include "geo/hermitian.hpp"
#include "geo/rational.hpp"
#include "geo/sampler.hpp"

using geo::Axis;
using geo::AxisW;
using geo::AxisX;
using geo::AxisY;
using geo::AxisZ;
using geo::G18Params;
using geo::G20Params;
using geo::G5Params;
using geo::InadmissibleParams;
using geo::LieAlgebra4;
using geo::Rational;
using Vec = geo::FrameVector<Rational>;
using Algebra = LieAlgebra4<Rational>;

namespace {

std::string thrown_message(const geo::FamilyParams<Rational>& p) {
  try {
    geo::build_family(p);
  } catch (const InadmissibleParams& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("g5 display: hand-checked instance") {
  // alpha=1, a=0, beta=0, b=1, r=1: a*beta - alpha*b = -1.
  const Algebra A = geo::build_family(
      G5Params<Rational>{Rational(1), Rational(0), Rational(0), Rational(1), Rational(1)});
  // [Y,X] = rX + theta1 Z + theta2 W with theta1 = -a r^2/(2D) = 0,
  // theta2 = alpha r^2/(2D) = -1/2.
  CHECK(A.table(AxisY, AxisX) == Vec{Rational(1), Rational(0), Rational(0), Rational(-1, 2)});
  CHECK(A.is_lie_algebra());
  CHECK(!is_riemannian(A));
  CHECK(!is_horizontally_integrable(A));
}

TEST_CASE("g18 display: hand-checked instance") {
  // beta=1, b=1, z3=2: z1 = beta z3 / b = 2, w1 = -beta^2 z3 / b^2 = -2.
  const Algebra A = geo::build_family(G18Params<Rational>{
      Rational(1), Rational(1), Rational(2), Rational(0), Rational(0), Rational(0)});
  CHECK(A.table(AxisZ, AxisX) == Vec{Rational(0), Rational(1), Rational(2), Rational(-2)});
  CHECK(A.is_lie_algebra());
  CHECK(is_riemannian(A));
}

TEST_CASE("g20 display: hand-checked instance") {
  // alpha=1, a=-2, beta=1, w1=0, w2=1: b = beta a / alpha = -2,
  // z3 = -a^2 w1 / alpha^2 = 0, z1 = -a w1 / alpha = 0.
  const Algebra A = geo::build_family(
      G20Params<Rational>{Rational(1), Rational(-2), Rational(1), Rational(0), Rational(1)});
  CHECK(A.table(AxisW, AxisX) == Vec{Rational(-2), Rational(-2), Rational(0), Rational(0)});
  CHECK(A.is_lie_algebra());
  CHECK(is_horizontally_integrable(A));
  CHECK(!is_riemannian(A));
}

TEST_CASE("admissibility gates throw with the violated gate named") {
  CHECK(thrown_message(G5Params<Rational>{Rational(1), Rational(0), Rational(0), Rational(1),
                                          Rational(0)}) ==
        "inadmissible parameters: g5: r = 0");
  // a*beta - alpha*b = 1*1 - 1*1 = 0.
  CHECK(thrown_message(G5Params<Rational>{Rational(1), Rational(1), Rational(1), Rational(1),
                                          Rational(1)}) ==
        "inadmissible parameters: g5: a*beta - alpha*b = 0");
  CHECK(thrown_message(G18Params<Rational>{Rational(0), Rational(1), Rational(0), Rational(0),
                                           Rational(0), Rational(0)}) ==
        "inadmissible parameters: g18: beta = 0");
  CHECK(thrown_message(G18Params<Rational>{Rational(1), Rational(0), Rational(0), Rational(0),
                                           Rational(0), Rational(0)}) ==
        "inadmissible parameters: g18: b = 0");
  CHECK(thrown_message(G20Params<Rational>{Rational(0), Rational(1), Rational(1), Rational(0),
                                           Rational(0)}) ==
        "inadmissible parameters: g20: alpha = 0");
  CHECK(thrown_message(G20Params<Rational>{Rational(1), Rational(0), Rational(1), Rational(0),
                                           Rational(0)}) ==
        "inadmissible parameters: g20: a = 0");
  CHECK(thrown_message(G20Params<Rational>{Rational(1), Rational(1), Rational(0), Rational(0),
                                           Rational(0)}) ==
        "inadmissible parameters: g20: beta = 0");
}

TEST_CASE("families are schema specializations: identical bracket tables") {
  geo::RationalSampler sampler(61, 4, 3);
  for (int trial = 0; trial < 25; ++trial) {
    geo::FamilyParams<Rational> fp;
    switch (trial % 3) {
      case 0: {
        G5Params<Rational> p{sampler.value(), sampler.value(), sampler.value(), sampler.value(),
                             sampler.nonzero()};
        if ((p.a * p.beta - p.alpha * p.b).is_zero()) continue;
        fp = p;
        break;
      }
      case 1:
        fp = G18Params<Rational>{sampler.nonzero(), sampler.nonzero(), sampler.value(),
                                 sampler.value(),   sampler.value(),   sampler.value()};
        break;
      default:
        fp = G20Params<Rational>{sampler.nonzero(), sampler.nonzero(), sampler.nonzero(),
                                 sampler.value(), sampler.value()};
        break;
    }
    const Algebra A = geo::build_family(fp);
    const auto induced = A.schema_params();
    REQUIRE(induced.has_value());
    const Algebra B = Algebra::from_schema(*induced);
    for (Axis i : geo::kAxes)
      for (Axis j : geo::kAxes) CHECK(A.table(i, j) == B.table(i, j));
    CHECK(A.is_lie_algebra());
  }
}

TEST_CASE("g5 induced coefficients at a reference point") {
  // alpha=1, a=2, beta=3, b=1, r=2: D = a*beta - alpha*b = 5.
  const Algebra A = geo::build_family(
      G5Params<Rational>{Rational(1), Rational(2), Rational(3), Rational(1), Rational(2)});
  const auto p = A.schema_params();
  REQUIRE(p.has_value());
  CHECK(p->lambda == Rational(0));
  CHECK(p->z1 == Rational(2) * (Rational(3) * Rational(1) - Rational(1) * Rational(2)) / Rational(10));  // r(beta b - alpha a)/(2D) = 1/5
  CHECK(p->z1 == Rational(1, 5));
  CHECK(p->z2 == Rational(2) * (Rational(1) * Rational(1) + Rational(3) * Rational(2)) / Rational(10));  // r(alpha b + beta a)/(2D) = 7/5
  CHECK(p->z2 == Rational(7, 5));
  CHECK(p->z3 == Rational(2) * (Rational(1) - Rational(4)) / Rational(10));  // r(b^2 - a^2)/(2D) = -3/5
  CHECK(p->z3 == Rational(-3, 5));
  CHECK(p->z4 == Rational(2) * Rational(2) * Rational(1) / Rational(5));  // r a b / D = 4/5
  CHECK(p->z4 == Rational(4, 5));
  CHECK(p->w1 == Rational(2) * (Rational(1) - Rational(9)) / Rational(10));  // r(alpha^2 - beta^2)/(2D) = -8/5
  CHECK(p->w1 == Rational(-8, 5));
  CHECK(p->w2 == -Rational(2) * Rational(1) * Rational(3) / Rational(5));  // -r alpha beta / D = -6/5
  CHECK(p->w2 == Rational(-6, 5));
  CHECK(p->theta1 == -Rational(2) * Rational(4) / Rational(10));  // -a r^2/(2D) = -4/5
  CHECK(p->theta1 == Rational(-4, 5));
  CHECK(p->theta2 == Rational(4) / Rational(10));  // alpha r^2/(2D) = 2/5
  CHECK(p->theta2 == Rational(2, 5));
}

TEST_CASE("g5: at most one structure cosymplectic; J1 locus r^2 = -4D") {
  // alpha=1, a=0, beta=0, b=1, r=2: D = -1, r^2 = 4 = -4D.
  const Algebra on = geo::build_family(
      G5Params<Rational>{Rational(1), Rational(0), Rational(0), Rational(1), Rational(2)});
  CHECK(is_cosymplectic(on, 1));
  CHECK(!is_cosymplectic(on, 2));

  // Same point with r=1: off both loci.
  const Algebra off = geo::build_family(
      G5Params<Rational>{Rational(1), Rational(0), Rational(0), Rational(1), Rational(1)});
  CHECK(!is_cosymplectic(off, 1));
  CHECK(!is_cosymplectic(off, 2));

  // J2 locus r^2 = 4D: alpha=1, a=0, beta=0, b=-1, r=2 gives D = 1.
  const Algebra on2 = geo::build_family(
      G5Params<Rational>{Rational(1), Rational(0), Rational(0), Rational(-1), Rational(2)});
  CHECK(!is_cosymplectic(on2, 1));
  CHECK(is_cosymplectic(on2, 2));

  geo::RationalSampler sampler(62, 4, 3);
  for (int trial = 0; trial < 40; ++trial) {
    G5Params<Rational> p{sampler.value(), sampler.value(), sampler.value(), sampler.value(),
                         sampler.nonzero()};
    if ((p.a * p.beta - p.alpha * p.b).is_zero()) continue;
    const Algebra A = geo::build_family(p);
    CHECK(!(is_cosymplectic(A, 1) && is_cosymplectic(A, 2)));
    CHECK(!is_riemannian(A));
    CHECK(!is_horizontally_integrable(A));
  }
}

TEST_CASE("g18: always Riemannian; both cosymplectic iff theta1 = theta2 = 0") {
  geo::RationalSampler sampler(63, 4, 3);
  for (int trial = 0; trial < 40; ++trial) {
    G18Params<Rational> p{sampler.nonzero(), sampler.nonzero(), sampler.value(),
                          sampler.value(),   sampler.value(),   sampler.value()};
    if (trial % 2 == 0) p.theta1 = p.theta2 = Rational(0);
    const Algebra A = geo::build_family(p);
    CHECK(is_riemannian(A));
    const bool both = is_cosymplectic(A, 1) && is_cosymplectic(A, 2);
    const bool locus = p.theta1.is_zero() && p.theta2.is_zero();
    CHECK(both == locus);
    CHECK(both == is_horizontally_integrable(A));
  }
}

TEST_CASE("g20: always horizontally integrable, never Riemannian") {
  geo::RationalSampler sampler(64, 4, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const G20Params<Rational> p{sampler.nonzero(), sampler.nonzero(), sampler.nonzero(),
                                sampler.value(), sampler.value()};
    const Algebra A = geo::build_family(p);
    CHECK(is_horizontally_integrable(A));
    CHECK(!is_riemannian(A));
    CHECK(A.is_lie_algebra());
    // The induced bracket leaves [Y,X] = 0, so the divergences reduce to
    // 2aZ - 2(alpha)W and -2aZ + 2(alpha)W; with alpha, a nonzero neither
    // structure is ever divergence-free.
    const auto induced = A.schema_params();
    REQUIRE(induced.has_value());
    CHECK(induced->r == Rational(0));
    CHECK(induced->theta1 == Rational(0));
    CHECK(induced->theta2 == Rational(0));
    const Rational two(2);
    CHECK(divergence_J(A, 1) == Vec{Rational(0), Rational(0), two * p.a, -two * p.alpha});
    CHECK(divergence_J(A, 2) == Vec{Rational(0), Rational(0), -two * p.a, two * p.alpha});
    CHECK(!is_cosymplectic(A, 1));
    CHECK(!is_cosymplectic(A, 2));
  }
}

TEST_CASE("family origin tags carry the inputs") {
  const G20Params<Rational> p{Rational(1), Rational(-2), Rational(1), Rational(0), Rational(1)};
  const Algebra A = geo::build_family(p);
  const auto* fam = std::get_if<geo::FamilyOrigin<Rational>>(&A.origin());
  REQUIRE(fam != nullptr);
  const auto* stored = std::get_if<G20Params<Rational>>(&fam->params);
  REQUIRE(stored != nullptr);
  CHECK(stored->alpha == Rational(1));
  CHECK(stored->a == Rational(-2));
  CHECK(geo::family_of(fam->params) == geo::FamilyName::g20);
}
