#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "geo/frame.hpp"

namespace geo {

/// The 14 coefficients of the bracket schema:
///   [W,Z] = λW
///   [Z,X] = αX + βY + z1 Z + w1 W
///   [Z,Y] = −βX + αY + z2 Z + w2 W
///   [W,X] = aX + bY + z3 Z − z1 W
///   [W,Y] = −bX + aY + z4 Z − z2 W
///   [Y,X] = rX + θ1 Z + θ2 W
/// No constraint is imposed here; the Jacobi identity is checked separately.
template <class S>
struct SchemaParams {
  S lambda{}, alpha{}, beta{}, a{}, b{}, r{};
  S z1{}, z2{}, z3{}, z4{}, w1{}, w2{};
  S theta1{}, theta2{};

  friend bool operator==(const SchemaParams&, const SchemaParams&) = default;
};

/// Ordered (name, accessor) view of SchemaParams — shared by IO, sampling,
/// and the scan grid so the parameter list exists in exactly one place.
template <class S>
std::array<std::pair<const char*, S SchemaParams<S>::*>, 14> schema_fields() {
  using P = SchemaParams<S>;
  return {{{"lambda", &P::lambda},
           {"alpha", &P::alpha},
           {"beta", &P::beta},
           {"a", &P::a},
           {"b", &P::b},
           {"r", &P::r},
           {"z1", &P::z1},
           {"z2", &P::z2},
           {"z3", &P::z3},
           {"z4", &P::z4},
           {"w1", &P::w1},
           {"w2", &P::w2},
           {"theta1", &P::theta1},
           {"theta2", &P::theta2}}};
}

enum class FamilyName { g5, g18, g20 };

inline const char* family_name_str(FamilyName f) {
  switch (f) {
    case FamilyName::g5: return "g5";
    case FamilyName::g18: return "g18";
    default: return "g20";
  }
}

/// Named parameters of the three example families.
template <class S>
struct G5Params {
  S alpha{}, a{}, beta{}, b{}, r{};
};
template <class S>
struct G18Params {
  S beta{}, b{}, z3{}, z4{}, theta1{}, theta2{};
};
template <class S>
struct G20Params {
  S alpha{}, a{}, beta{}, w1{}, w2{};
};

template <class S>
using FamilyParams = std::variant<G5Params<S>, G18Params<S>, G20Params<S>>;

template <class S>
FamilyName family_of(const FamilyParams<S>& p) {
  if (std::holds_alternative<G5Params<S>>(p)) return FamilyName::g5;
  if (std::holds_alternative<G18Params<S>>(p)) return FamilyName::g18;
  return FamilyName::g20;
}

/// Provenance of a bracket table.  Schema and family origins carry the
/// coefficients that closed-form cross-checks are evaluated against;
/// general tables get tensor-level predicates only.
template <class S>
struct SchemaOrigin {
  SchemaParams<S> params;
};
template <class S>
struct FamilyOrigin {
  FamilyParams<S> params;
  SchemaParams<S> induced;  // the schema coefficients realized by the family display
};
struct GeneralOrigin {};

template <class S>
using Origin = std::variant<SchemaOrigin<S>, FamilyOrigin<S>, GeneralOrigin>;

/// 4-dimensional algebra given by an antisymmetric structure-constant table
/// c[i][j] = [e_i, e_j].  Antisymmetry (and zero diagonal) is enforced at
/// construction; the Jacobi identity is a separate, reported check so that
/// non-Lie tables can still be charted.
template <class S>
class LieAlgebra4 {
public:
  using Vec = FrameVector<S>;

  static LieAlgebra4 from_schema(const SchemaParams<S>& p) {
    LieAlgebra4 A;
    A.origin_ = SchemaOrigin<S>{p};
    A.fill_from_schema(p);
    return A;
  }

  /// General table from explicitly given entries [e_i, e_j] = v, i != j.
  /// The mirror entry is filled by antisymmetry; entries given for both
  /// orders must agree up to sign.
  static LieAlgebra4 from_table(const std::vector<std::tuple<Axis, Axis, Vec>>& entries) {
    LieAlgebra4 A;
    A.origin_ = GeneralOrigin{};
    std::array<std::array<bool, 4>, 4> set{};
    for (const auto& [i, j, v] : entries) {
      if (i == j) throw std::invalid_argument("bracket table: diagonal entries must be absent (they are zero)");
      if (set[i][j]) throw std::invalid_argument(std::string("bracket table: duplicate entry for [") +
                                                 kAxisNames[i] + "," + kAxisNames[j] + "]");
      if (set[j][i] && !(A.c_[j][i] == -v))
        throw std::invalid_argument(std::string("bracket table: entries for [") + kAxisNames[i] + "," +
                                    kAxisNames[j] + "] and its mirror violate antisymmetry");
      A.c_[i][j] = v;
      set[i][j] = true;
      if (!set[j][i]) A.c_[j][i] = -v;
    }
    return A;
  }

  /// Family constructors live in geo/families.hpp; they use this hook.
  static LieAlgebra4 from_family(const FamilyParams<S>& fp, const SchemaParams<S>& induced) {
    LieAlgebra4 A;
    A.origin_ = FamilyOrigin<S>{fp, induced};
    A.fill_from_schema(induced);
    return A;
  }

  const Vec& table(Axis i, Axis j) const { return c_[i][j]; }
  const Origin<S>& origin() const { return origin_; }

  /// Schema coefficients underlying this table, when the origin provides them.
  std::optional<SchemaParams<S>> schema_params() const {
    if (const auto* s = std::get_if<SchemaOrigin<S>>(&origin_)) return s->params;
    if (const auto* f = std::get_if<FamilyOrigin<S>>(&origin_)) return f->induced;
    return std::nullopt;
  }

  /// Bilinear antisymmetric extension of the table.
  Vec bracket(const Vec& u, const Vec& v) const {
    Vec out;
    for (int i = 0; i < 4; ++i) {
      if (geo::is_zero(u.c[i])) continue;
      for (int j = 0; j < 4; ++j) {
        if (i == j || geo::is_zero(v.c[j])) continue;
        out += (u.c[i] * v.c[j]) * c_[i][j];
      }
    }
    return out;
  }

  /// Jacobi defects J(e_i,e_j,e_k) = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] +
  /// [[e_k,e_i],e_j] for the four basis triples i < j < k.  Trilinearity
  /// makes the basis triples sufficient.
  std::vector<std::pair<std::string, Vec>> jacobi_defect() const {
    std::vector<std::pair<std::string, Vec>> out;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) {
          const Vec ei = Vec::axis(Axis(i)), ej = Vec::axis(Axis(j)), ek = Vec::axis(Axis(k));
          Vec defect = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                       bracket(bracket(ek, ei), ej);
          std::string name{kAxisNames[i], kAxisNames[j], kAxisNames[k]};
          out.emplace_back(std::move(name), std::move(defect));
        }
    return out;
  }

  bool is_lie_algebra() const {
    for (const auto& [name, defect] : jacobi_defect())
      if (!defect.is_zero()) return false;
    return true;
  }

private:
  LieAlgebra4() = default;

  void set_pair(Axis i, Axis j, Vec v) {
    c_[j][i] = -v;
    c_[i][j] = std::move(v);
  }

  void fill_from_schema(const SchemaParams<S>& p) {
    const S zero{};
    set_pair(AxisW, AxisZ, {zero, zero, zero, p.lambda});
    set_pair(AxisZ, AxisX, {p.alpha, p.beta, p.z1, p.w1});
    set_pair(AxisZ, AxisY, {-p.beta, p.alpha, p.z2, p.w2});
    set_pair(AxisW, AxisX, {p.a, p.b, p.z3, -p.z1});
    set_pair(AxisW, AxisY, {-p.b, p.a, p.z4, -p.z2});
    set_pair(AxisY, AxisX, {p.r, zero, p.theta1, p.theta2});
  }

  std::array<std::array<Vec, 4>, 4> c_{};
  Origin<S> origin_ = GeneralOrigin{};
};

}  // namespace geo
