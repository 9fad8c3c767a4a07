#include "geo/verify.hpp"

#include <utility>

#include "geo/families.hpp"
#include "geo/hermitian.hpp"

namespace geo {
namespace {

using R = Rational;
using Vec = FrameVector<R>;
using Algebra = LieAlgebra4<R>;

std::string bool_str(bool v) { return v ? "true" : "false"; }

std::string describe(const SchemaParams<R>& p) {
  std::string body;
  for (const auto& [name, member] : schema_fields<R>()) {
    const R& v = p.*member;
    if (v.is_zero()) continue;
    if (!body.empty()) body += ", ";
    body += std::string(name) + "=" + v.str();
  }
  return "schema(" + (body.empty() ? "all zero" : body) + ")";
}

std::string describe(const G5Params<R>& p) {
  return "g5(alpha=" + p.alpha.str() + ", a=" + p.a.str() + ", beta=" + p.beta.str() +
         ", b=" + p.b.str() + ", r=" + p.r.str() + ")";
}
std::string describe(const G18Params<R>& p) {
  return "g18(beta=" + p.beta.str() + ", b=" + p.b.str() + ", z3=" + p.z3.str() +
         ", z4=" + p.z4.str() + ", theta1=" + p.theta1.str() + ", theta2=" + p.theta2.str() + ")";
}
std::string describe(const G20Params<R>& p) {
  return "g20(alpha=" + p.alpha.str() + ", a=" + p.a.str() + ", beta=" + p.beta.str() +
         ", w1=" + p.w1.str() + ", w2=" + p.w2.str() + ")";
}

/// Collects per-sample checks into a VerificationOutcome.
class Recorder {
public:
  Recorder(std::string statement, const SamplerConfig& cfg) {
    out_.statement = std::move(statement);
    out_.requested_samples = cfg.samples;
  }

  void sample(bool on_locus) {
    ++out_.samples;
    if (on_locus) ++out_.on_locus;
  }

  void check(bool ok, const std::string& params, std::string expected, std::string got) {
    if (ok) return;
    ++out_.counterexamples_total;
    if (static_cast<int>(out_.counterexamples.size()) < VerificationOutcome::kMaxRecorded)
      out_.counterexamples.push_back({params, std::move(expected), std::move(got)});
  }

  VerificationOutcome finish() {
    out_.pass = out_.counterexamples_total == 0 && out_.samples >= out_.requested_samples &&
                out_.on_locus >= VerificationOutcome::min_on_locus(out_.requested_samples);
    return std::move(out_);
  }

private:
  VerificationOutcome out_;
};

RationalSampler make_sampler(const SamplerConfig& cfg, std::string_view statement) {
  return RationalSampler(cfg.seed ^ fnv1a(statement), cfg.num_range, cfg.den_range);
}

const R kTwo = R(2);
const R kFour = R(4);

}  // namespace

VerificationOutcome verify_lemma_divergence(const SamplerConfig& cfg) {
  Recorder rec("lemma-divergence", cfg);
  auto s = make_sampler(cfg, "lemma-divergence");
  for (int i = 0; i < cfg.samples; ++i) {
    SchemaParams<R> p = s.schema();
    if (i % 10 == 0) {  // J1 cosymplectic locus
      p.theta1 = kTwo * p.a;
      p.theta2 = -(kTwo * p.alpha);
    } else if (i % 10 == 5) {  // J2 cosymplectic locus
      p.theta1 = -(kTwo * p.a);
      p.theta2 = kTwo * p.alpha;
    }
    const Algebra A = Algebra::from_schema(p);
    const auto t = connection_table(A);
    const Vec dJ1 = divergence_J(A, t, 1);
    const Vec dJ2 = divergence_J(A, t, 2);

    Vec cf1{R(0), R(0), -(p.theta1 - kTwo * p.a), -(p.theta2 + kTwo * p.alpha)};
    if (cfg.mutate_closed_form) cf1.c[2] += R(1);  // fixture: corrupted Z coefficient
    const Vec cf2{R(0), R(0), -(p.theta1 + kTwo * p.a), kTwo * p.alpha - p.theta2};

    const bool on_j1 = (p.theta1 - kTwo * p.a).is_zero() && (p.theta2 + kTwo * p.alpha).is_zero();
    const bool on_j2 = (p.theta1 + kTwo * p.a).is_zero() && (p.theta2 - kTwo * p.alpha).is_zero();
    rec.sample(on_j1 || on_j2);

    const std::string params = describe(p);
    rec.check(dJ1 == cf1, params, "delta J1 = " + format_vector(cf1), "delta J1 = " + format_vector(dJ1));
    rec.check(dJ2 == cf2, params, "delta J2 = " + format_vector(cf2), "delta J2 = " + format_vector(dJ2));
    rec.check(is_cosymplectic(A, t, 1) == on_j1, params,
              "J1 cosymplectic iff theta1 - 2a = 0 and theta2 + 2alpha = 0 (locus " + bool_str(on_j1) + ")",
              "is_cosymplectic(J1) = " + bool_str(is_cosymplectic(A, t, 1)));
    rec.check(is_cosymplectic(A, t, 2) == on_j2, params,
              "J2 cosymplectic iff theta1 + 2a = 0 and theta2 - 2alpha = 0 (locus " + bool_str(on_j2) + ")",
              "is_cosymplectic(J2) = " + bool_str(is_cosymplectic(A, t, 2)));
  }
  return rec.finish();
}

VerificationOutcome verify_theorem_main(const SamplerConfig& cfg) {
  Recorder rec("thm-main", cfg);
  auto s = make_sampler(cfg, "thm-main");
  for (int i = 0; i < cfg.samples; ++i) {
    SchemaParams<R> p = s.schema();
    if (i % 10 == 0) {  // on the Riemannian-and-integrable locus
      p.alpha = p.a = p.theta1 = p.theta2 = R(0);
    } else if (i % 10 == 5) {  // forced off the locus
      p.alpha = s.nonzero();
    }
    const Algebra A = Algebra::from_schema(p);
    const auto t = connection_table(A);
    const bool both_cosymplectic = is_cosymplectic(A, t, 1) && is_cosymplectic(A, t, 2);
    const bool riem_and_integrable = is_riemannian(A, t) && is_horizontally_integrable(A);
    rec.sample(riem_and_integrable);
    rec.check(both_cosymplectic == riem_and_integrable, describe(p),
              "both cosymplectic iff (Riemannian and horizontally integrable)",
              "both_cosymplectic = " + bool_str(both_cosymplectic) +
                  ", Riemannian_and_integrable = " + bool_str(riem_and_integrable));
  }
  return rec.finish();
}

VerificationOutcome verify_theorem_integrable(const SamplerConfig& cfg) {
  Recorder rec("thm-integrable", cfg);
  auto s = make_sampler(cfg, "thm-integrable");
  for (int i = 0; i < cfg.samples; ++i) {
    SchemaParams<R> p = s.schema();
    if (i % 10 == 0) {  // totally geodesic locus
      p.z1 = p.z2 = R(0);
      p.w1 = -p.z3;
      p.w2 = -p.z4;
    } else if (i % 10 == 5) {
      p.z1 = s.nonzero();
    }
    const Algebra A = Algebra::from_schema(p);
    const auto t = connection_table(A);
    const bool both_integrable = is_integrable(A, 1) && is_integrable(A, 2);
    const bool tg = is_totally_geodesic(A, t);
    rec.sample(tg);
    rec.check(both_integrable == tg, describe(p),
              "both integrable iff totally geodesic",
              "both_integrable = " + bool_str(both_integrable) + ", totally_geodesic = " + bool_str(tg));
  }
  return rec.finish();
}

VerificationOutcome verify_prop_geometry(const SamplerConfig& cfg) {
  Recorder rec("prop-geometry", cfg);
  auto s = make_sampler(cfg, "prop-geometry");
  for (int i = 0; i < cfg.samples; ++i) {
    SchemaParams<R> p = s.schema();
    switch (i % 10) {
      case 0:  // totally geodesic locus
        p.z1 = p.z2 = R(0);
        p.w1 = -p.z3;
        p.w2 = -p.z4;
        break;
      case 3:  // Riemannian locus
        p.alpha = p.a = R(0);
        break;
      case 6:  // horizontally integrable locus
        p.theta1 = p.theta2 = R(0);
        break;
      case 8:  // forced off all three loci
        p.z1 = s.nonzero();
        p.alpha = s.nonzero();
        p.theta1 = s.nonzero();
        break;
      default: break;
    }
    const Algebra A = Algebra::from_schema(p);
    const auto t = connection_table(A);

    const bool tg_cf = p.z1.is_zero() && p.z2.is_zero() && (p.z3 + p.w1).is_zero() && (p.z4 + p.w2).is_zero();
    const bool riem_cf = p.alpha.is_zero() && p.a.is_zero();
    const bool hint_cf = p.theta1.is_zero() && p.theta2.is_zero();
    rec.sample(tg_cf || riem_cf || hint_cf);

    const std::string params = describe(p);
    rec.check(is_totally_geodesic(A, t) == tg_cf, params,
              "totally geodesic iff z1 = z2 = z3 + w1 = z4 + w2 = 0 (locus " + bool_str(tg_cf) + ")",
              "is_totally_geodesic = " + bool_str(is_totally_geodesic(A, t)));
    rec.check(is_riemannian(A, t) == riem_cf, params,
              "Riemannian iff alpha = a = 0 (locus " + bool_str(riem_cf) + ")",
              "is_riemannian = " + bool_str(is_riemannian(A, t)));
    rec.check(is_horizontally_integrable(A) == hint_cf, params,
              "horizontally integrable iff theta1 = theta2 = 0 (locus " + bool_str(hint_cf) + ")",
              "is_horizontally_integrable = " + bool_str(is_horizontally_integrable(A)));
  }
  return rec.finish();
}

VerificationOutcome verify_proof_steps(const SamplerConfig& cfg) {
  Recorder rec("proof-step-identities", cfg);
  auto s = make_sampler(cfg, "proof-step-identities");
  const Vec X = Vec::axis(AxisX), Y = Vec::axis(AxisY), Z = Vec::axis(AxisZ), W = Vec::axis(AxisW);
  for (int i = 0; i < cfg.samples; ++i) {
    SchemaParams<R> p = s.schema();
    if (i % 10 == 0) {  // totally geodesic locus: both 1-forms vanish
      p.z1 = p.z2 = R(0);
      p.w1 = -p.z3;
      p.w2 = -p.z4;
    }
    const Algebra A = Algebra::from_schema(p);
    const auto t = connection_table(A);
    const std::string params = describe(p);

    // Hypothesis side of the harmonic-morphism criterion: the schema is
    // always minimal and conformal with conformal vector alpha Z + a W.
    rec.check(is_minimal(A, t), params, "minimal (trace B^V = 0)", "trace B^V = " + format_vector(mean_curvature(A, t)));
    rec.check(is_conformal(A, t), params, "conformal (B^H = g (x) V)", "B^H not of that form");
    if (is_conformal(A, t)) {
      const Vec v_expect{R(0), R(0), p.alpha, p.a};
      const Vec v_got = conformal_vector(A, t);
      rec.check(v_got == v_expect, params, "conformal vector = " + format_vector(v_expect),
                "conformal vector = " + format_vector(v_got));
    }

    const Vec dJ1 = divergence_J(A, t, 1);
    const Vec dJ2 = divergence_J(A, t, 2);
    rec.check(project_horizontal(dJ1).is_zero(), params, "H delta J1 = 0",
              "H delta J1 = " + format_vector(project_horizontal(dJ1)));
    rec.check(project_horizontal(dJ2).is_zero(), params, "H delta J2 = 0",
              "H delta J2 = " + format_vector(project_horizontal(dJ2)));
    const Vec vsum = project_vertical(dJ1 + dJ2);
    const Vec vxy = kTwo * project_vertical(A.bracket(X, Y));
    rec.check(vsum == vxy, params, "V(delta J1 + delta J2) = 2 V[X,Y] = " + format_vector(vxy),
              "V(delta J1 + delta J2) = " + format_vector(vsum));

    const auto N1 = nijenhuis(A, 1);
    const auto N2 = nijenhuis(A, 2);
    for (int k = 1; k <= 2; ++k) {
      const auto& N = k == 1 ? N1 : N2;
      const std::string nk = "N" + std::to_string(k);
      rec.check(N(AxisX, AxisY).is_zero(), params, nk + "(X,Y) = 0", format_vector(N(AxisX, AxisY)));
      rec.check(N(AxisZ, AxisW).is_zero(), params, nk + "(Z,W) = 0", format_vector(N(AxisZ, AxisW)));
      for (Axis h : {AxisX, AxisY})
        for (Axis v : {AxisZ, AxisW}) {
          const Vec hn = project_horizontal(N(h, v));
          rec.check(hn.is_zero(), params,
                    std::string("H ") + nk + "(" + kAxisNames[h] + "," + kAxisNames[v] + ") = 0",
                    format_vector(hn));
        }
    }

    // The eight (N1 +- N2) identity lines, two scalar equalities each.
    const auto sf = shape_forms(A, t);
    const auto P = [&](Axis e, Axis f) { return N1(e, f) + N2(e, f); };
    const auto M = [&](Axis e, Axis f) { return N1(e, f) - N2(e, f); };
    struct Identity {
      const char* label;
      R lhs, rhs;
    };
    const Identity ids[] = {
        {"<(N1+N2)(X,Z),Z> = alphaForm(X)", inner(P(AxisX, AxisZ), Z), sf.alpha_on_x},
        {"<(N1+N2)(X,W),W> = -alphaForm(X)", inner(P(AxisX, AxisW), W), -sf.alpha_on_x},
        {"<(N1-N2)(X,Z),Z> = -betaForm(Y)", inner(M(AxisX, AxisZ), Z), -sf.beta_on_y},
        {"<(N1-N2)(X,W),W> = betaForm(Y)", inner(M(AxisX, AxisW), W), sf.beta_on_y},
        {"<(N1+N2)(X,Z),W> = betaForm(X)", inner(P(AxisX, AxisZ), W), sf.beta_on_x},
        {"<(N1+N2)(X,W),Z> = betaForm(X)", inner(P(AxisX, AxisW), Z), sf.beta_on_x},
        {"<(N1-N2)(X,Z),W> = alphaForm(Y)", inner(M(AxisX, AxisZ), W), sf.alpha_on_y},
        {"<(N1-N2)(X,W),Z> = alphaForm(Y)", inner(M(AxisX, AxisW), Z), sf.alpha_on_y},
        {"<(N1+N2)(Y,Z),Z> = alphaForm(Y)", inner(P(AxisY, AxisZ), Z), sf.alpha_on_y},
        {"<(N1+N2)(Y,W),W> = -alphaForm(Y)", inner(P(AxisY, AxisW), W), -sf.alpha_on_y},
        {"<(N1-N2)(Y,Z),Z> = betaForm(X)", inner(M(AxisY, AxisZ), Z), sf.beta_on_x},
        {"<(N1-N2)(Y,W),W> = -betaForm(X)", inner(M(AxisY, AxisW), W), -sf.beta_on_x},
        {"<(N1+N2)(Y,Z),W> = betaForm(Y)", inner(P(AxisY, AxisZ), W), sf.beta_on_y},
        {"<(N1+N2)(Y,W),Z> = betaForm(Y)", inner(P(AxisY, AxisW), Z), sf.beta_on_y},
        {"<(N1-N2)(Y,Z),W> = -alphaForm(X)", inner(M(AxisY, AxisZ), W), -sf.alpha_on_x},
        {"<(N1-N2)(Y,W),Z> = -alphaForm(X)", inner(M(AxisY, AxisW), Z), -sf.alpha_on_x},
    };
    for (const auto& id : ids)
      rec.check(id.lhs == id.rhs, params, std::string(id.label) + " = " + id.rhs.str(), id.lhs.str());

    const bool tg_locus = sf.alpha_on_x.is_zero() && sf.alpha_on_y.is_zero() &&
                          sf.beta_on_x.is_zero() && sf.beta_on_y.is_zero();
    rec.sample(tg_locus);
  }
  return rec.finish();
}

VerificationOutcome verify_family_g5(const SamplerConfig& cfg) {
  Recorder rec("family-g5", cfg);
  auto s = make_sampler(cfg, "family-g5");
  for (int i = 0; i < cfg.samples; ++i) {
    G5Params<R> p;
    p.r = s.nonzero();
    if (i % 10 == 0 || i % 10 == 5) {
      // Solve for b so that a*beta - alpha*b = -+ r^2/4: the loci where one
      // structure is cosymplectic (J1 for "-", J2 for "+").
      p.alpha = s.nonzero();
      p.a = s.value();
      p.beta = s.value();
      const R quarter = p.r * p.r / kFour;
      const R target_d = i % 10 == 0 ? -quarter : quarter;
      p.b = (p.a * p.beta - target_d) / p.alpha;
    } else {
      do {
        p.alpha = s.value();
        p.a = s.value();
        p.beta = s.value();
        p.b = s.value();
      } while ((p.a * p.beta - p.alpha * p.b).is_zero());
    }
    const Algebra A = build_family(p);
    const auto t = connection_table(A);
    const std::string params = describe(p);

    const bool c1 = is_cosymplectic(A, t, 1);
    const bool c2 = is_cosymplectic(A, t, 2);
    rec.sample(c1 || c2);
    rec.check(A.is_lie_algebra(), params, "Jacobi identity holds", "nonzero Jacobi defect");
    rec.check(!(c1 && c2), params, "at most one structure cosymplectic",
              "J1 and J2 both cosymplectic");
    rec.check(!is_riemannian(A, t), params, "never Riemannian", "is_riemannian = true");
    rec.check(!is_horizontally_integrable(A), params, "never horizontally integrable",
              "is_horizontally_integrable = true");
    if (i % 10 == 0)
      rec.check(c1, params, "J1 cosymplectic on the locus a*beta - alpha*b = -r^2/4",
                "is_cosymplectic(J1) = false");
    if (i % 10 == 5)
      rec.check(c2, params, "J2 cosymplectic on the locus a*beta - alpha*b = r^2/4",
                "is_cosymplectic(J2) = false");
  }
  return rec.finish();
}

VerificationOutcome verify_family_g18(const SamplerConfig& cfg) {
  Recorder rec("family-g18", cfg);
  auto s = make_sampler(cfg, "family-g18");
  for (int i = 0; i < cfg.samples; ++i) {
    G18Params<R> p;
    p.beta = s.nonzero();
    p.b = s.nonzero();
    p.z3 = s.value();
    p.z4 = s.value();
    p.theta1 = s.value();
    p.theta2 = s.value();
    if (i % 10 == 0) {
      p.theta1 = p.theta2 = R(0);  // both-cosymplectic locus
    } else if (i % 10 == 5) {
      p.theta1 = s.nonzero();
    }
    const Algebra A = build_family(p);
    const auto t = connection_table(A);
    const std::string params = describe(p);

    const bool locus = p.theta1.is_zero() && p.theta2.is_zero();
    rec.sample(locus);
    rec.check(A.is_lie_algebra(), params, "Jacobi identity holds", "nonzero Jacobi defect");
    rec.check(is_riemannian(A, t), params, "always Riemannian", "is_riemannian = false");
    const bool both = is_cosymplectic(A, t, 1) && is_cosymplectic(A, t, 2);
    rec.check(both == locus, params,
              "both cosymplectic iff theta1 = theta2 = 0 (locus " + bool_str(locus) + ")",
              "both_cosymplectic = " + bool_str(both));
  }
  return rec.finish();
}

VerificationOutcome verify_family_g20(const SamplerConfig& cfg) {
  Recorder rec("family-g20", cfg);
  auto s = make_sampler(cfg, "family-g20");
  for (int i = 0; i < cfg.samples; ++i) {
    G20Params<R> p;
    p.alpha = s.nonzero();
    p.a = s.nonzero();
    p.beta = s.nonzero();
    p.w1 = s.value();
    p.w2 = s.value();
    if (i % 10 == 0) {
      p.w2 = -(kTwo * p.alpha * p.alpha) / p.a;  // claimed J1 locus: 2 alpha^2 + a w2 = 0
    } else if (i % 10 == 5) {
      p.w2 = kTwo * p.alpha * p.alpha / p.a;  // claimed J2 locus: 2 alpha^2 - a w2 = 0
    }
    const Algebra A = build_family(p);
    const auto t = connection_table(A);
    const std::string params = describe(p);

    const bool locus1 = (kTwo * p.alpha * p.alpha + p.a * p.w2).is_zero();
    const bool locus2 = (kTwo * p.alpha * p.alpha - p.a * p.w2).is_zero();
    rec.sample(locus1 || locus2);
    rec.check(A.is_lie_algebra(), params, "Jacobi identity holds", "nonzero Jacobi defect");
    rec.check(is_horizontally_integrable(A), params, "always horizontally integrable",
              "is_horizontally_integrable = false");
    rec.check(!is_riemannian(A, t), params, "never Riemannian", "is_riemannian = true");
    const bool c1 = is_cosymplectic(A, t, 1);
    const bool c2 = is_cosymplectic(A, t, 2);
    rec.check(c1 == locus1, params,
              "J1 cosymplectic iff 2 alpha^2 + a w2 = 0 (locus " + bool_str(locus1) + ")",
              "is_cosymplectic(J1) = " + bool_str(c1) + " with delta J1 = " +
                  format_vector(divergence_J(A, t, 1)));
    rec.check(c2 == locus2, params,
              "J2 cosymplectic iff 2 alpha^2 - a w2 = 0 (locus " + bool_str(locus2) + ")",
              "is_cosymplectic(J2) = " + bool_str(c2) + " with delta J2 = " +
                  format_vector(divergence_J(A, t, 2)));
  }
  return rec.finish();
}

std::vector<VerificationOutcome> verify_families(const SamplerConfig& cfg) {
  return {verify_family_g5(cfg), verify_family_g18(cfg), verify_family_g20(cfg)};
}

std::vector<VerificationOutcome> verify_all(const SamplerConfig& cfg) {
  std::vector<VerificationOutcome> out;
  out.push_back(verify_theorem_main(cfg));
  out.push_back(verify_theorem_integrable(cfg));
  out.push_back(verify_lemma_divergence(cfg));
  out.push_back(verify_prop_geometry(cfg));
  for (auto& o : verify_families(cfg)) out.push_back(std::move(o));
  out.push_back(verify_proof_steps(cfg));
  return out;
}

}  // namespace geo
