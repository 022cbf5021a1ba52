#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinor10/cycles.hpp"
#include "spinor10/liftconfig.hpp"

namespace spinor10 {

// Batch verification commands. Every command returns a ReportEnvelope whose
// JSON serialization is deterministic for a fixed command, parameter set and
// seed: key order is fixed, all randomness flows from the seed, and no
// wall-clock data enters the payload.

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool pass = false;
  Json detail;
};

struct ReportEnvelope {
  std::string command;
  Json params = Json::object();
  std::uint64_t seed = 0;
  Json findings = Json::object();
  std::vector<CheckResult> checks;
  std::string rendered;  // human-readable block; never serialized to JSON

  bool pass() const;
  Json to_json() const;
  std::string text() const;
};

struct TableOptions {
  GammaConvention convention = GammaConvention::prefix;
  // Test hook: diff against this table instead of the embedded reference.
  const IntMatrix* reference_override = nullptr;
};

// Computes the 10x10 pairing table for the fixed word and diffs it against
// the embedded reference copy. Nonzero mismatch count fails the check.
ReportEnvelope cmd_table(const TableOptions& opts = {});

// Per degree in [degree_min, degree_max]: class count, argmax class, maximal
// dimension, uniqueness and the gap to 8d. Requires
// 3 <= degree_min <= degree_max <= 14.
ReportEnvelope cmd_classes(Int degree_min, Int degree_max);

// prime in {2,3}: exhaustive point census. Otherwise prime must be an odd
// prime <= 2^16: seeded sampling suite (isotropic sampling, completions,
// subspace identities, lift round-trips, adapted-flag scenarios).
ReportEnvelope cmd_geom(Int prime, int trials, std::uint64_t seed);

struct VerifyAllConfig {
  const IntMatrix* reference_override = nullptr;  // test hook (fault injection)
  int lift_trials = 1000;
  int lemma_scenarios = 100;
};

// Runs every acceptance check; the envelope passes iff all do.
ReportEnvelope cmd_verify_all(std::uint64_t seed, const VerifyAllConfig& cfg = {});

Json subspace_json(const Subspace& s);
Json membership_json(const MembershipVector& m);
// Fixed field order V1, V2, V2', V3, V3', V3'', V4, V4', V5, V5'.
Json configuration_json(const Configuration& c);

// Shared suite internals, also exercised directly by the test binaries.
struct LiftTrialStats {
  int trials = 0;
  int generic_failures = 0;
  int successes = 0;
  int invalid_configurations = 0;
  int roundtrip_failures = 0;
  int implication_failures = 0;
  int lifts_on_some_section = 0;  // informational; generic lifts avoid all sections
};

LiftTrialStats run_lift_trials(const QuadraticSpace& qs, int trials, Rng& rng);

struct LemmaScenarioStats {
  int scenarios = 0;
  int points_checked = 0;
  int correct_patterns = 0;
  std::vector<std::string> mismatches;
};

LemmaScenarioStats run_lemma_scenarios(const QuadraticSpace& qs, int scenarios, Rng& rng);

}  // namespace spinor10
