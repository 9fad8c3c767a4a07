#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geo/connection.hpp"
#include "geo/foliation.hpp"
#include "geo/hermitian.hpp"
#include "geo/io.hpp"

namespace geo {

/// Raised when the closed-form cross-check block disagrees with the tensor
/// predicates — an internal inconsistency (CLI exit code 3), never a user
/// error.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

/// Everything the engine computes for one algebra instance.
struct GeometryReport {
  using R = Rational;
  using Vec = FrameVector<R>;

  nlohmann::json input_echo;  // normalized input document (round-trips)
  std::string origin;         // "schema" | "family:g5" | "family:g18" | "family:g20" | "general"

  bool jacobi = false;
  std::vector<std::pair<std::string, Vec>> jacobi_defects;

  ConnectionTable<R> connection;

  bool minimal = false;
  bool conformal = false;
  bool riemannian = false;  // false whenever not conformal (V undefined)
  bool totally_geodesic = false;
  bool horizontally_integrable = false;
  bool vertically_integrable = false;
  std::optional<Vec> conformal_vec;  // present iff conformal
  SecondFundamentalForm<R> second_fundamental_vertical;
  SecondFundamentalForm<R> second_fundamental_horizontal;
  Vec mean_curvature_vec;

  Vec dJ1, dJ2;
  bool cosymplectic[2] = {false, false};
  bool integrable[2] = {false, false};
  std::optional<bool> harmonic_morphism_producing[2];  // nullopt when hypothesis violated
  ShapeForms<R> shapes;
  std::vector<std::tuple<int, std::string, Vec>> nijenhuis_nonzero;  // (k, pair, value)

  // Closed-form cross-check, present for schema/family origins only.
  bool has_crosscheck = false;
  bool crosscheck_agrees = true;
  nlohmann::json crosscheck;
};

/// Computes the full report.  `inject_crosscheck_defect` is a test fixture
/// that corrupts one closed form so the mismatch path (exit 3) is provable.
GeometryReport analyze(const LieAlgebra4<Rational>& A, const nlohmann::json& input_echo,
                       bool inject_crosscheck_defect = false);

nlohmann::json report_to_json(const GeometryReport& r);
std::string report_to_text(const GeometryReport& r);

}  // namespace geo
