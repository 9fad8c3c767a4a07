#include "geo/report.hpp"

#include <sstream>

namespace geo {
namespace {

using R = Rational;
using Vec = FrameVector<R>;
using nlohmann::json;

json bool_or_null(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

/// Closed forms implied by the schema coefficients: the geometry loci, the
/// divergence formulas and the cosymplecticity loci, plus the
/// schema-universal facts (minimal, conformal with vector alpha Z + a W).
/// Computed next to the tensor pipeline so every report proves them against
/// each other; a mismatch is fatal by contract.
void build_crosscheck(GeometryReport& rep, const SchemaParams<R>& p, bool inject_defect) {
  const R two(2);
  const bool tg_cf = p.z1.is_zero() && p.z2.is_zero() && (p.z3 + p.w1).is_zero() && (p.z4 + p.w2).is_zero();
  const bool riem_cf = p.alpha.is_zero() && p.a.is_zero();
  bool hint_cf = p.theta1.is_zero() && p.theta2.is_zero();
  if (inject_defect) hint_cf = !hint_cf;  // fixture: provoke the exit-3 path
  const bool cosym1_cf = (p.theta1 - two * p.a).is_zero() && (p.theta2 + two * p.alpha).is_zero();
  const bool cosym2_cf = (p.theta1 + two * p.a).is_zero() && (p.theta2 - two * p.alpha).is_zero();
  const Vec dj1_cf{R(0), R(0), -(p.theta1 - two * p.a), -(p.theta2 + two * p.alpha)};
  const Vec dj2_cf{R(0), R(0), -(p.theta1 + two * p.a), two * p.alpha - p.theta2};
  const Vec conf_cf{R(0), R(0), p.alpha, p.a};

  std::vector<std::string> mismatches;
  const auto compare = [&](const char* name, bool closed, bool tensor) {
    if (closed != tensor) mismatches.push_back(name);
  };
  compare("minimal", true, rep.minimal);
  compare("conformal", true, rep.conformal);
  compare("totally_geodesic", tg_cf, rep.totally_geodesic);
  compare("riemannian", riem_cf, rep.riemannian);
  compare("horizontally_integrable", hint_cf, rep.horizontally_integrable);
  compare("cosymplectic_J1", cosym1_cf, rep.cosymplectic[0]);
  compare("cosymplectic_J2", cosym2_cf, rep.cosymplectic[1]);
  if (!(rep.dJ1 == dj1_cf)) mismatches.push_back("dJ1");
  if (!(rep.dJ2 == dj2_cf)) mismatches.push_back("dJ2");
  if (!rep.conformal_vec || !(*rep.conformal_vec == conf_cf)) mismatches.push_back("conformal_vector");

  json closed_forms{{"minimal", true},
                    {"conformal", true},
                    {"conformal_vector", vector_to_json(conf_cf)},
                    {"totally_geodesic", tg_cf},
                    {"riemannian", riem_cf},
                    {"horizontally_integrable", hint_cf},
                    {"cosymplectic", json::array({cosym1_cf, cosym2_cf})},
                    {"dJ1", vector_to_json(dj1_cf)},
                    {"dJ2", vector_to_json(dj2_cf)}};
  rep.has_crosscheck = true;
  rep.crosscheck_agrees = mismatches.empty();
  rep.crosscheck = json{{"agrees", rep.crosscheck_agrees}, {"closed_forms", closed_forms},
                        {"mismatches", mismatches}};
}

}  // namespace

GeometryReport analyze(const LieAlgebra4<R>& A, const json& input_echo, bool inject_crosscheck_defect) {
  GeometryReport rep;
  rep.input_echo = input_echo;
  rep.origin = std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SchemaOrigin<R>>) {
          return "schema";
        } else if constexpr (std::is_same_v<T, FamilyOrigin<R>>) {
          return std::string("family:") + family_name_str(family_of(o.params));
        } else {
          return "general";
        }
      },
      A.origin());

  rep.jacobi_defects = A.jacobi_defect();
  rep.jacobi = true;
  for (const auto& [name, defect] : rep.jacobi_defects)
    if (!defect.is_zero()) rep.jacobi = false;

  const auto t = connection_table(A);
  rep.connection = t;

  rep.minimal = is_minimal(A, t);
  rep.conformal = is_conformal(A, t);
  if (rep.conformal) {
    rep.conformal_vec = conformal_vector(A, t);
    rep.riemannian = rep.conformal_vec->is_zero();
  } else {
    rep.riemannian = false;  // V undefined; a non-conformal foliation is not Riemannian
  }
  rep.totally_geodesic = is_totally_geodesic(A, t);
  rep.horizontally_integrable = is_horizontally_integrable(A);
  rep.vertically_integrable = is_vertically_integrable(A);
  rep.second_fundamental_vertical = second_fundamental(A, t, FormSide::vertical);
  rep.second_fundamental_horizontal = second_fundamental(A, t, FormSide::horizontal);
  rep.mean_curvature_vec = mean_curvature(A, t);

  rep.dJ1 = divergence_J(A, t, 1);
  rep.dJ2 = divergence_J(A, t, 2);
  rep.cosymplectic[0] = rep.dJ1.is_zero();
  rep.cosymplectic[1] = rep.dJ2.is_zero();
  for (int k = 1; k <= 2; ++k) {
    try {
      rep.harmonic_morphism_producing[k - 1] = produces_harmonic_morphisms(A, t, k);
    } catch (const HypothesisViolated&) {
      rep.harmonic_morphism_producing[k - 1] = std::nullopt;
    }
    const auto N = nijenhuis(A, k);
    rep.integrable[k - 1] = N.all_zero();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!N.values[i][j].is_zero()) {
          const std::string pair{kAxisNames[i], kAxisNames[j]};
          rep.nijenhuis_nonzero.emplace_back(k, pair, N.values[i][j]);
        }
  }
  rep.shapes = shape_forms(A, t);

  if (const auto p = A.schema_params()) build_crosscheck(rep, *p, inject_crosscheck_defect);
  return rep;
}

json report_to_json(const GeometryReport& r) {
  json defects = json::object();
  for (const auto& [name, vec] : r.jacobi_defects) defects[name] = vector_to_json(vec);

  json conn = json::object();
  for (Axis i : kAxes)
    for (Axis j : kAxes) {
      const std::string key{kAxisNames[i], kAxisNames[j]};
      conn[key] = vector_to_json(r.connection(i, j));
    }

  json foliation{{"minimal", r.minimal},
                 {"conformal", r.conformal},
                 {"riemannian", r.riemannian},
                 {"totally_geodesic", r.totally_geodesic},
                 {"horizontally_integrable", r.horizontally_integrable},
                 {"vertically_integrable", r.vertically_integrable},
                 {"conformal_vector", r.conformal_vec ? vector_to_json(*r.conformal_vec) : json(nullptr)},
                 {"second_fundamental_vertical",
                  json{{"ZZ", vector_to_json(r.second_fundamental_vertical.v11)},
                       {"ZW", vector_to_json(r.second_fundamental_vertical.v12)},
                       {"WW", vector_to_json(r.second_fundamental_vertical.v22)}}},
                 {"second_fundamental_horizontal",
                  json{{"XX", vector_to_json(r.second_fundamental_horizontal.v11)},
                       {"XY", vector_to_json(r.second_fundamental_horizontal.v12)},
                       {"YY", vector_to_json(r.second_fundamental_horizontal.v22)}}},
                 {"mean_curvature", vector_to_json(r.mean_curvature_vec)}};

  json nz = json::array();
  for (const auto& [k, pair, value] : r.nijenhuis_nonzero)
    nz.push_back(json{{"k", k}, {"pair", pair}, {"value", vector_to_json(value)}});

  json hermitian{{"dJ1", vector_to_json(r.dJ1)},
                 {"dJ2", vector_to_json(r.dJ2)},
                 {"cosymplectic", json::array({r.cosymplectic[0], r.cosymplectic[1]})},
                 {"integrable", json::array({r.integrable[0], r.integrable[1]})},
                 {"harmonic_morphism_producing",
                  json::array({bool_or_null(r.harmonic_morphism_producing[0]),
                               bool_or_null(r.harmonic_morphism_producing[1])})},
                 {"alphaForm", json{{"X", r.shapes.alpha_on_x.str()}, {"Y", r.shapes.alpha_on_y.str()}}},
                 {"betaForm", json{{"X", r.shapes.beta_on_x.str()}, {"Y", r.shapes.beta_on_y.str()}}},
                 {"nijenhuis_nonzero_entries", nz}};

  json out{{"input", r.input_echo},
           {"origin", r.origin},
           {"jacobi", json{{"is_lie_algebra", r.jacobi}, {"defects", defects}}},
           {"connection", conn},
           {"foliation", foliation},
           {"hermitian", hermitian}};
  if (r.has_crosscheck) out["crosscheck"] = r.crosscheck;
  return out;
}

std::string report_to_text(const GeometryReport& r) {
  std::ostringstream os;
  const auto vec = [](const Vec& v) { return format_vector(v); };
  const auto yn = [](bool b) { return b ? "true" : "false"; };

  os << "geometry report\n";
  os << "  origin: " << r.origin << "\n";
  os << "  input: " << r.input_echo.dump() << "\n";
  os << "\njacobi\n";
  os << "  is_lie_algebra: " << yn(r.jacobi) << "\n";
  for (const auto& [name, defect] : r.jacobi_defects)
    os << "  J(" << name[0] << "," << name[1] << "," << name[2] << ") = " << vec(defect) << "\n";

  // Diagonal entries first, matching the usual hand-computed display.
  os << "\nconnection\n";
  for (Axis i : kAxes) os << "  nabla_" << kAxisNames[i] << " " << kAxisNames[i] << " = " << vec(r.connection(i, i)) << "\n";
  for (Axis i : kAxes)
    for (Axis j : kAxes) {
      if (i == j) continue;
      os << "  nabla_" << kAxisNames[i] << " " << kAxisNames[j] << " = " << vec(r.connection(i, j)) << "\n";
    }

  os << "\nfoliation\n";
  os << "  minimal: " << yn(r.minimal) << "\n";
  os << "  conformal: " << yn(r.conformal) << "\n";
  os << "  conformal_vector: " << (r.conformal_vec ? vec(*r.conformal_vec) : std::string("undefined (not conformal)")) << "\n";
  os << "  riemannian: " << yn(r.riemannian) << "\n";
  os << "  totally_geodesic: " << yn(r.totally_geodesic) << "\n";
  os << "  horizontally_integrable: " << yn(r.horizontally_integrable) << "\n";
  os << "  vertically_integrable: " << yn(r.vertically_integrable) << "\n";
  os << "  B^V(Z,Z) = " << vec(r.second_fundamental_vertical.v11) << "\n";
  os << "  B^V(Z,W) = " << vec(r.second_fundamental_vertical.v12) << "\n";
  os << "  B^V(W,W) = " << vec(r.second_fundamental_vertical.v22) << "\n";
  os << "  B^H(X,X) = " << vec(r.second_fundamental_horizontal.v11) << "\n";
  os << "  B^H(X,Y) = " << vec(r.second_fundamental_horizontal.v12) << "\n";
  os << "  B^H(Y,Y) = " << vec(r.second_fundamental_horizontal.v22) << "\n";
  os << "  trace B^V = " << vec(r.mean_curvature_vec) << "\n";

  os << "\nalmost Hermitian structures\n";
  os << "  delta J1 = " << vec(r.dJ1) << "\n";
  os << "  delta J2 = " << vec(r.dJ2) << "\n";
  os << "  cosymplectic: [" << yn(r.cosymplectic[0]) << ", " << yn(r.cosymplectic[1]) << "]\n";
  os << "  integrable: [" << yn(r.integrable[0]) << ", " << yn(r.integrable[1]) << "]\n";
  const auto hm = [&](int idx) {
    return r.harmonic_morphism_producing[idx] ? yn(*r.harmonic_morphism_producing[idx])
                                              : "undefined (hypothesis violated)";
  };
  os << "  harmonic_morphism_producing: [" << hm(0) << ", " << hm(1) << "]\n";
  os << "  alphaForm: X -> " << r.shapes.alpha_on_x.str() << ", Y -> " << r.shapes.alpha_on_y.str() << "\n";
  os << "  betaForm: X -> " << r.shapes.beta_on_x.str() << ", Y -> " << r.shapes.beta_on_y.str() << "\n";
  if (r.nijenhuis_nonzero.empty()) {
    os << "  nijenhuis: all entries zero for J1 and J2\n";
  } else {
    for (const auto& [k, pair, value] : r.nijenhuis_nonzero)
      os << "  N" << k << "(" << pair[0] << "," << pair[1] << ") = " << vec(value) << "\n";
  }

  if (r.has_crosscheck) {
    os << "\nclosed-form cross-check\n";
    os << "  agrees: " << yn(r.crosscheck_agrees) << "\n";
    if (!r.crosscheck_agrees)
      for (const auto& m : r.crosscheck.at("mismatches")) os << "  mismatch: " << m.get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace geo
