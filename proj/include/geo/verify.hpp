#pragma once

#include <string>
#include <vector>

#include "geo/sampler.hpp"

namespace geo {

/// Configuration of one verification suite run.  A given config produces a
/// bit-identical outcome (samples, counters, counterexample list) on every
/// platform.
struct SamplerConfig {
  std::uint64_t seed = 42;
  int samples = 1000;
  long long num_range = 5;  // numerators drawn from -N..N
  long long den_range = 3;  // denominators drawn from 1..M

  /// Test fixture: deliberately corrupt the closed form under test so the
  /// harness provably reports counterexamples (exit-code self-test).
  bool mutate_closed_form = false;
};

struct Counterexample {
  std::string params;
  std::string expected;
  std::string got;
};

/// Result of one statement's verification run.  `pass` holds exactly when
/// the counterexample list is empty and both counters reached the requested
/// minimum (all requested samples ran; at least 10% landed on the
/// statement's locus, forced by construction).
struct VerificationOutcome {
  std::string statement;
  int samples = 0;
  int on_locus = 0;
  int requested_samples = 0;
  bool pass = false;
  std::vector<Counterexample> counterexamples;  // capped at kMaxRecorded
  int counterexamples_total = 0;

  static constexpr int kMaxRecorded = 25;
  static int min_on_locus(int requested) { return (requested + 9) / 10; }
};

VerificationOutcome verify_theorem_main(const SamplerConfig& cfg);
VerificationOutcome verify_theorem_integrable(const SamplerConfig& cfg);
VerificationOutcome verify_lemma_divergence(const SamplerConfig& cfg);
VerificationOutcome verify_prop_geometry(const SamplerConfig& cfg);
VerificationOutcome verify_proof_steps(const SamplerConfig& cfg);
VerificationOutcome verify_family_g5(const SamplerConfig& cfg);
VerificationOutcome verify_family_g18(const SamplerConfig& cfg);
VerificationOutcome verify_family_g20(const SamplerConfig& cfg);

/// The three family suites in order (g5, g18, g20).
std::vector<VerificationOutcome> verify_families(const SamplerConfig& cfg);

/// All eight statements in canonical order.
std::vector<VerificationOutcome> verify_all(const SamplerConfig& cfg);

}  // namespace geo
