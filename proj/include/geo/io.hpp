#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "geo/lie_algebra.hpp"
#include "geo/rational.hpp"
#include "geo/verify.hpp"

namespace geo {

/// Raised on malformed input documents (user error, CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parsed input document: the algebra plus its normalized echo, which is
/// itself a valid input document (all keys explicit, canonical rational
/// strings).  Reports embed the echo so they round-trip byte-identically.
struct ParsedInput {
  LieAlgebra4<Rational> algebra;
  nlohmann::json echo;
};

/// Accepts the three document forms:
///   {"schema": {"alpha": "1/2", ...}}           (omitted keys default "0")
///   {"family": "g20", "params": {...}}          (all family params may be omitted, default "0")
///   {"table": {"ZX": ["1","0","0","0"], ...}}   (entries [e_i,e_j]; mirrors by antisymmetry)
/// Rational values must be strings ("p" or "p/q", q > 0) — never JSON numbers.
ParsedInput parse_input_document(const nlohmann::json& doc);

/// Reads and parses a file; ParseError on IO or syntax problems.
ParsedInput load_input_file(const std::string& path);

/// Rational scalars serialize as canonical strings, vectors as arrays of 4.
nlohmann::json vector_to_json(const FrameVector<Rational>& v);

/// Outcome document: {"statement", "samples", "on_locus", "pass",
/// "counterexamples", ...} plus the generator name and seed for
/// reproducibility.
nlohmann::json outcome_to_json(const VerificationOutcome& o, const SamplerConfig& cfg);

}  // namespace geo
