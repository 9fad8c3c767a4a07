#include "geo/scan.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <thread>

#include "geo/families.hpp"
#include "geo/hermitian.hpp"

namespace geo {
namespace {

using R = Rational;

std::vector<std::string> param_names(const std::optional<FamilyName>& family) {
  if (!family) {
    std::vector<std::string> names;
    for (const auto& [name, member] : schema_fields<R>()) names.emplace_back(name);
    return names;
  }
  switch (*family) {
    case FamilyName::g5: return {"alpha", "a", "beta", "b", "r"};
    case FamilyName::g18: return {"beta", "b", "z3", "z4", "theta1", "theta2"};
    default: return {"alpha", "a", "beta", "w1", "w2"};
  }
}

/// Admissibility gates, with the parameters each one reads, so a gate that
/// no grid axis can influence is rejected up front ("inadmissible fixed
/// values") instead of producing an all-blank CSV.
struct Gate {
  std::string description;
  std::vector<std::string> involves;
  std::function<bool(const std::map<std::string, R>&)> holds;
};

std::vector<Gate> gates_for(FamilyName family) {
  const auto nz = [](const char* p) {
    return [p](const std::map<std::string, R>& v) { return !v.at(p).is_zero(); };
  };
  switch (family) {
    case FamilyName::g5:
      return {{"g5: r = 0", {"r"}, nz("r")},
              {"g5: a*beta - alpha*b = 0",
               {"alpha", "a", "beta", "b"},
               [](const std::map<std::string, R>& v) {
                 return !(v.at("a") * v.at("beta") - v.at("alpha") * v.at("b")).is_zero();
               }}};
    case FamilyName::g18:
      return {{"g18: beta = 0", {"beta"}, nz("beta")}, {"g18: b = 0", {"b"}, nz("b")}};
    default:
      return {{"g20: alpha = 0", {"alpha"}, nz("alpha")},
              {"g20: a = 0", {"a"}, nz("a")},
              {"g20: beta = 0", {"beta"}, nz("beta")}};
  }
}

template <class S>
S convert(const R& v);
template <>
R convert<R>(const R& v) {
  return v;
}
template <>
double convert<double>(const R& v) {
  return v.to_double();
}

template <class S>
LieAlgebra4<S> build_instance(const std::optional<FamilyName>& family,
                              const std::map<std::string, R>& values) {
  const auto at = [&](const char* name) { return convert<S>(values.at(name)); };
  if (!family) {
    SchemaParams<S> p;
    for (const auto& [name, member] : schema_fields<S>()) p.*member = convert<S>(values.at(name));
    return LieAlgebra4<S>::from_schema(p);
  }
  switch (*family) {
    case FamilyName::g5:
      return build_family(G5Params<S>{at("alpha"), at("a"), at("beta"), at("b"), at("r")});
    case FamilyName::g18:
      return build_family(
          G18Params<S>{at("beta"), at("b"), at("z3"), at("z4"), at("theta1"), at("theta2")});
    default:
      return build_family(G20Params<S>{at("alpha"), at("a"), at("beta"), at("w1"), at("w2")});
  }
}

template <class S>
bool eval_predicate(const std::string& name, const LieAlgebra4<S>& A, const ConnectionTable<S>& t) {
  if (name == "minimal") return is_minimal(A, t);
  if (name == "conformal") return is_conformal(A, t);
  if (name == "riemannian") {
    try {
      return is_riemannian(A, t);
    } catch (const NotConformal&) {
      return false;
    }
  }
  if (name == "totally-geodesic") return is_totally_geodesic(A, t);
  if (name == "horizontally-integrable") return is_horizontally_integrable(A);
  if (name == "vertically-integrable") return is_vertically_integrable(A);
  if (name == "cosymplectic-J1") return is_cosymplectic(A, t, 1);
  if (name == "cosymplectic-J2") return is_cosymplectic(A, t, 2);
  if (name == "both-cosymplectic") return is_cosymplectic(A, t, 1) && is_cosymplectic(A, t, 2);
  if (name == "integrable-J1") return is_integrable(A, 1);
  if (name == "integrable-J2") return is_integrable(A, 2);
  if (name == "both-integrable") return is_integrable(A, 1) && is_integrable(A, 2);
  if (name == "harmonic-J1" || name == "harmonic-J2") {
    try {
      return produces_harmonic_morphisms(A, t, name == "harmonic-J1" ? 1 : 2);
    } catch (const HypothesisViolated&) {
      return false;
    }
  }
  throw ScanError("unknown predicate \"" + name + "\"");
}

std::string decimal_str(const R& v, bool float_mode) {
  char buf[64];
  std::snprintf(buf, sizeof buf, float_mode ? "%.17g" : "%g", v.to_double());
  return buf;
}

}  // namespace

GridAxis parse_grid_spec(const std::string& spec) {
  const auto bad = [&] { return ScanError("invalid grid spec \"" + spec + "\" (expected param=lo..hi/steps)"); };
  const auto eq = spec.find('=');
  const auto dots = spec.find("..", eq == std::string::npos ? 0 : eq);
  const auto slash = spec.rfind('/');
  if (eq == std::string::npos || dots == std::string::npos || slash == std::string::npos ||
      !(eq < dots && dots + 1 < slash))
    throw bad();
  GridAxis axis;
  axis.param = spec.substr(0, eq);
  try {
    axis.lo = R::parse(spec.substr(eq + 1, dots - eq - 1));
    axis.hi = R::parse(spec.substr(dots + 2, slash - dots - 2));
    axis.steps = std::stol(spec.substr(slash + 1));
  } catch (const std::exception&) {
    throw bad();
  }
  if (axis.steps < 1) throw ScanError("grid spec \"" + spec + "\": steps must be >= 1");
  if (axis.hi < axis.lo) throw ScanError("grid spec \"" + spec + "\": hi must be >= lo");
  return axis;
}

std::pair<std::string, Rational> parse_fix_spec(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ScanError("invalid fix spec \"" + spec + "\" (expected param=value)");
  try {
    return {spec.substr(0, eq), R::parse(spec.substr(eq + 1))};
  } catch (const std::exception& e) {
    throw ScanError("invalid fix spec \"" + spec + "\": " + e.what());
  }
}

const std::vector<std::string>& scan_predicates() {
  static const std::vector<std::string> names = {
      "minimal",         "conformal",       "riemannian",        "totally-geodesic",
      "horizontally-integrable",            "vertically-integrable",
      "cosymplectic-J1", "cosymplectic-J2", "both-cosymplectic",
      "integrable-J1",   "integrable-J2",   "both-integrable",
      "harmonic-J1",     "harmonic-J2"};
  return names;
}

void run_scan(const ScanRequest& req, std::ostream& out) {
  const auto names = param_names(req.family);
  const auto known = [&](const std::string& p) {
    return std::find(names.begin(), names.end(), p) != names.end();
  };
  for (const auto& [param, value] : req.fixed)
    if (!known(param)) throw ScanError("unknown parameter \"" + param + "\" in --fix");
  if (req.grids.empty()) throw ScanError("empty grid: at least one --grid axis is required");
  for (const auto& axis : req.grids) {
    if (!known(axis.param)) throw ScanError("unknown parameter \"" + axis.param + "\" in --grid");
    if (req.fixed.count(axis.param))
      throw ScanError("parameter \"" + axis.param + "\" is both fixed and gridded");
  }
  const auto& preds = scan_predicates();
  if (std::find(preds.begin(), preds.end(), req.predicate) == preds.end())
    throw ScanError("unknown predicate \"" + req.predicate + "\"");

  // Base values: defaults (0) overridden by --fix.
  std::map<std::string, R> base;
  for (const auto& name : names) base[name] = R(0);
  for (const auto& [param, value] : req.fixed) base[param] = value;

  // Gates that no grid axis can satisfy must hold on the fixed values.
  if (req.family) {
    for (const auto& gate : gates_for(*req.family)) {
      const bool gridded = std::any_of(gate.involves.begin(), gate.involves.end(), [&](const std::string& p) {
        return std::any_of(req.grids.begin(), req.grids.end(),
                           [&](const GridAxis& g) { return g.param == p; });
      });
      if (!gridded && !gate.holds(base))
        throw ScanError("inadmissible fixed values: " + gate.description);
    }
  }

  // Exact grid points: lo + k * (hi - lo) / steps.
  std::vector<std::vector<R>> axis_points;
  std::size_t total = 1;
  for (const auto& axis : req.grids) {
    std::vector<R> points;
    const R step = (axis.hi - axis.lo) / R(axis.steps);
    for (long k = 0; k <= axis.steps; ++k) points.push_back(axis.lo + R(k) * step);
    total *= points.size();
    axis_points.push_back(std::move(points));
  }

  // Header.
  out << "# geo scan\n";
  out << "# origin: " << (req.family ? std::string("family ") + family_name_str(*req.family) : "schema") << "\n";
  if (req.float_mode) {
    char tol[32];
    std::snprintf(tol, sizeof tol, "%g", float_tolerance());
    out << "# mode: float tol=" << tol << "\n";
  } else {
    out << "# mode: exact\n";
  }
  out << "# predicate: " << req.predicate << "\n";
  if (!req.fixed.empty()) {
    out << "# fix:";
    for (const auto& [param, value] : req.fixed) out << " " << param << "=" << value.str();
    out << "\n";
  }
  out << "# grid:";
  for (const auto& axis : req.grids)
    out << " " << axis.param << "=" << axis.lo.str() << ".." << axis.hi.str() << "/" << axis.steps;
  out << "\n";
  for (const auto& axis : req.grids) {
    out << axis.param << ",";
    if (!req.float_mode) out << axis.param << "_exact,";
  }
  out << "admissible,jacobi," << req.predicate << "\n";

  // Evaluate grid points in parallel; emit rows in grid order (last axis
  // fastest).  Everything evaluated is a pure function of the point.
  std::vector<std::string> rows(total);
  std::vector<std::exception_ptr> errors(total);
  const auto eval_row = [&](std::size_t index) {
    std::map<std::string, R> values = base;
    std::size_t rest = index;
    std::vector<R> coords(req.grids.size());
    for (std::size_t g = req.grids.size(); g-- > 0;) {
      const auto& points = axis_points[g];
      coords[g] = points[rest % points.size()];
      rest /= points.size();
    }
    for (std::size_t g = 0; g < req.grids.size(); ++g) values[req.grids[g].param] = coords[g];

    std::string row;
    for (std::size_t g = 0; g < req.grids.size(); ++g) {
      row += decimal_str(coords[g], req.float_mode) + ",";
      if (!req.float_mode) row += coords[g].str() + ",";
    }
    try {
      std::string jacobi, predicate;
      if (req.float_mode) {
        const auto A = build_instance<double>(req.family, values);
        jacobi = A.is_lie_algebra() ? "true" : "false";
        predicate = eval_predicate(req.predicate, A, connection_table(A)) ? "true" : "false";
      } else {
        const auto A = build_instance<R>(req.family, values);
        jacobi = A.is_lie_algebra() ? "true" : "false";
        predicate = eval_predicate(req.predicate, A, connection_table(A)) ? "true" : "false";
      }
      row += "true," + jacobi + "," + predicate;
    } catch (const InadmissibleParams&) {
      row += "false,,";
    }
    rows[index] = std::move(row);
  };

  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), total);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t index = w; index < total; index += workers) {
        try {
          eval_row(index);
        } catch (...) {
          errors[index] = std::current_exception();
        }
      }
    });
  }
  for (auto& thread : pool) thread.join();
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);

  for (const auto& row : rows) out << row << "\n";
}

}  // namespace geo
