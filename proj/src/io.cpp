#include "geo/io.hpp"

#include <fstream>
#include <map>

#include "geo/families.hpp"

namespace geo {
namespace {

using R = Rational;
using Vec = FrameVector<R>;
using nlohmann::json;

R parse_rational_value(const json& v, const std::string& where) {
  if (v.is_number())
    throw ParseError(where + ": exact values must be rational strings like \"3\" or \"-1/2\", not JSON numbers");
  if (!v.is_string()) throw ParseError(where + ": expected a rational string");
  try {
    return R::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

/// Reads an object whose values are rational strings; `allowed` lists the
/// legal keys, missing keys default to 0.
std::map<std::string, R> read_param_object(const json& obj, const std::vector<std::string>& allowed,
                                           const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object of rational strings");
  std::map<std::string, R> out;
  for (const auto& key : allowed) out[key] = R(0);
  for (const auto& [key, value] : obj.items()) {
    if (!out.count(key)) throw ParseError(where + ": unknown parameter \"" + key + "\"");
    out[key] = parse_rational_value(value, where + "." + key);
  }
  return out;
}

ParsedInput parse_schema_document(const json& obj) {
  std::vector<std::string> names;
  for (const auto& [name, member] : schema_fields<R>()) names.emplace_back(name);
  const auto values = read_param_object(obj, names, "schema");
  SchemaParams<R> p;
  for (const auto& [name, member] : schema_fields<R>()) p.*member = values.at(name);

  json echo_params = json::object();
  for (const auto& [name, value] : values) echo_params[name] = value.str();
  return {LieAlgebra4<R>::from_schema(p), json{{"schema", echo_params}}};
}

ParsedInput parse_family_document(const json& doc) {
  const auto& fam = doc.at("family");
  if (!fam.is_string()) throw ParseError("family: expected \"g5\", \"g18\" or \"g20\"");
  const std::string name = fam.get<std::string>();
  const json params = doc.contains("params") ? doc.at("params") : json::object();

  FamilyParams<R> fp;
  std::map<std::string, R> values;
  if (name == "g5") {
    values = read_param_object(params, {"alpha", "a", "beta", "b", "r"}, "g5 params");
    fp = G5Params<R>{values.at("alpha"), values.at("a"), values.at("beta"), values.at("b"), values.at("r")};
  } else if (name == "g18") {
    values = read_param_object(params, {"beta", "b", "z3", "z4", "theta1", "theta2"}, "g18 params");
    fp = G18Params<R>{values.at("beta"), values.at("b"),      values.at("z3"),
                      values.at("z4"),   values.at("theta1"), values.at("theta2")};
  } else if (name == "g20") {
    values = read_param_object(params, {"alpha", "a", "beta", "w1", "w2"}, "g20 params");
    fp = G20Params<R>{values.at("alpha"), values.at("a"), values.at("beta"), values.at("w1"), values.at("w2")};
  } else {
    throw ParseError("family: unknown family \"" + name + "\" (expected g5, g18 or g20)");
  }

  json echo_params = json::object();
  for (const auto& [key, value] : values) echo_params[key] = value.str();
  return {build_family(fp), json{{"family", name}, {"params", echo_params}}};
}

ParsedInput parse_table_document(const json& obj) {
  if (!obj.is_object()) throw ParseError("table: expected an object of bracket entries");
  const auto axis_of = [](char c) -> int {
    switch (c) {
      case 'X': return 0;
      case 'Y': return 1;
      case 'Z': return 2;
      case 'W': return 3;
      default: return -1;
    }
  };
  std::vector<std::tuple<Axis, Axis, Vec>> entries;
  for (const auto& [key, value] : obj.items()) {
    if (key.size() != 2 || axis_of(key[0]) < 0 || axis_of(key[1]) < 0)
      throw ParseError("table: key \"" + key + "\" is not a frame pair like \"ZX\"");
    const Axis i = Axis(axis_of(key[0])), j = Axis(axis_of(key[1]));
    if (i == j) throw ParseError("table: diagonal entry \"" + key + "\" is not allowed (brackets [v,v] vanish)");
    if (!value.is_array() || value.size() != 4)
      throw ParseError("table." + key + ": expected an array of 4 rational strings");
    Vec v;
    for (int c = 0; c < 4; ++c) v.c[c] = parse_rational_value(value.at(c), "table." + key + "[" + std::to_string(c) + "]");
    entries.emplace_back(i, j, v);
  }
  LieAlgebra4<R> A = [&] {
    try {
      return LieAlgebra4<R>::from_table(entries);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("table: ") + e.what());
    }
  }();

  // Canonical echo: the six independent pairs in schema display order.
  static constexpr std::pair<Axis, Axis> kPairs[] = {{AxisW, AxisZ}, {AxisZ, AxisX}, {AxisZ, AxisY},
                                                     {AxisW, AxisX}, {AxisW, AxisY}, {AxisY, AxisX}};
  json echo_table = json::object();
  for (const auto& [i, j] : kPairs) {
    const std::string key{kAxisNames[i], kAxisNames[j]};
    echo_table[key] = vector_to_json(A.table(i, j));
  }
  return {std::move(A), json{{"table", echo_table}}};
}

}  // namespace

nlohmann::json vector_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < 4; ++i) out.push_back(v.c[i].str());
  return out;
}

ParsedInput parse_input_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("input document: expected a JSON object");
  const int forms = int(doc.contains("schema")) + int(doc.contains("family")) + int(doc.contains("table"));
  if (forms != 1)
    throw ParseError("input document: exactly one of \"schema\", \"family\" or \"table\" is required");
  if (doc.contains("schema")) return parse_schema_document(doc.at("schema"));
  if (doc.contains("family")) return parse_family_document(doc);
  return parse_table_document(doc.at("table"));
}

ParsedInput load_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_input_document(doc);
}

nlohmann::json outcome_to_json(const VerificationOutcome& o, const SamplerConfig& cfg) {
  json ces = json::array();
  for (const auto& ce : o.counterexamples)
    ces.push_back(json{{"params", ce.params}, {"expected", ce.expected}, {"got", ce.got}});
  return json{{"statement", o.statement},
              {"samples", o.samples},
              {"on_locus", o.on_locus},
              {"pass", o.pass},
              {"counterexamples", ces},
              {"counterexamples_total", o.counterexamples_total},
              {"generator", kGeneratorName},
              {"seed", cfg.seed}};
}

}  // namespace geo
