#pragma once

#include <string>
#include <vector>

#include "cayley/grouppoints.hpp"
#include "cayley/report.hpp"

namespace cayley {

// Options for cmd_verify.  In automatic mode each claim scans exhaustively
// whenever the ring is finite and the work fits the budget, and falls back to
// `samples` deterministic pseudo-random checks otherwise.
struct VerifyOptions {
  enum class Mode { automatic, exhaustive, sampled };
  Mode mode = Mode::automatic;
  uint64_t samples = 1000;
  uint64_t budget = kDefaultBudget;
  bool strict = false;
};

// The frozen claim ids, in registry order.
const std::vector<std::string>& claim_ids();

// Runs one claim against one algebra.  Unknown ids and inapplicable algebras
// yield skipped reports (UnknownClaim / InvalidAlgebra in the reason), never
// exceptions; so do budget and ring limitations.
Report run_claim(const std::string& id, const AlgebraRef& alg, const VerifyOptions& opt);

// `claim` is an id or "all" (registry order).
std::vector<Report> cmd_verify(const std::string& claim, const AlgebraRef& alg,
                               const VerifyOptions& opt);

// Theorem suite: over a finite ring with 2 a unit, partitions the quaternion
// algebras (a, b) by isomorphism and by norm isometry and compares the two
// partitions.  Over Q runs the witness pair (Hamilton vs M2).  Over Z and
// over rings where 2 is not a unit the report is skipped.
Report cmd_norm_theorem(const RingSpec& ring, uint64_t budget = kDefaultBudget);

// `which` is one of O, SO, SL1, MU2, AUT; the report carries the order and,
// for sets of at most 512 elements, the element list.
Report cmd_group(const std::string& which, const AlgebraRef& alg,
                 uint64_t budget = kDefaultBudget);

// True iff the witness actually violates the identity named by the claim,
// recomputed from scratch through the public algebra operations.  Claims
// whose failures are set-level (no single violating element) return true.
bool revalidate_witness(const std::string& claim, const AlgebraRef& alg, const Json& witness);

}  // namespace cayley
