#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weylbool/root_system.hpp"

namespace weylbool {

struct VerificationReport {
  std::string claim_id;
  std::string system;  // empty when the claim is not tied to one root system
  std::uint64_t total_cases = 0;
  std::vector<std::string> failures;  // first kMaxListedFailures counterexamples
  std::uint64_t failure_count = 0;
  std::map<std::string, std::uint64_t> tallies;
  nlohmann::json details;  // claim-specific data, deterministic
  bool gated = true;       // false for informational checks
  double elapsed_seconds = 0;

  static constexpr std::size_t kMaxListedFailures = 20;

  bool passed() const { return failure_count == 0; }
  void fail(std::string description);

  nlohmann::json to_json(bool with_elapsed = true) const;
  std::string to_text() const;
};

// True when every gated report passed.
bool all_gated_passed(const std::vector<VerificationReport>& reports);

inline constexpr std::uint64_t kEquivalenceGroupBound = 1152;
// Largest group the boolean equivalence claim enumerates (E7 fits, E8 does not).
inline constexpr std::uint64_t kMaxEnumeratedGroup = 3'000'000;

struct VerifyOptions {
  int threads = 1;
  bool include_e7e8 = false;
  int interval_bound = 12;
  // Systems of larger rank are dropped from the universes.
  int max_rank = kMaxRank;
};

// For irreducible rs: every (alpha, beta) with s_alpha beta positive and
// supported on alpha decomposes in one of three ways. Tallies the first case found.
VerificationReport verify_root_decomposition(const RootSystemPtr& rs);

// Word, interval, BP and linear verdicts agree on every element of W(rs).
// Groups above kMaxEnumeratedGroup yield an ungated report that records the skip.
VerificationReport verify_boolean_equivalence(const RootSystemPtr& rs, const VerifyOptions& opt = {});

// The three pattern sets recomputed from scratch plus the per-element claims
// about small rank-2 groups.
VerificationReport verify_pattern_sets();

// Inversion sets of the five patterns of interest.
VerificationReport verify_pattern_inversions();

// Permutation claims: 2-boolean patterns, series, refined identities,
// non-pattern-closure of 3-boolean, and the 1-boolean characterizations.
std::vector<VerificationReport> verify_permutation_claims(int n_patterns = 7, int n_count = 10,
                                                          int n_refined = 8, int threads = 1);

// Informational: linear containment versus BP containment in types A and D.
VerificationReport verify_linear_vs_bp_AD(const RootSystemPtr& rs);

// Round trips, biconvexity, inversion update law, reflection involution and
// the letter-support law, exhaustively on W(rs).
VerificationReport verify_properties(const RootSystemPtr& rs);

// Default universes.
std::vector<CartanType> equivalence_universe(bool include_e7e8);
std::vector<CartanType> decomposition_universe();
std::vector<CartanType> property_universe();
std::vector<CartanType> linear_vs_bp_universe();

// Claim ids accepted by run_claim, in run order for "all". "table2" is an
// alias of "pattern-inversions".
const std::vector<std::string>& claim_ids();
// Throws std::invalid_argument for an unknown id.
std::vector<VerificationReport> run_claim(const std::string& id, const VerifyOptions& opt = {});

}  // namespace weylbool
