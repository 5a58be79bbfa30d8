#pragma once

#include <optional>

#include "checker.hpp"

namespace ringlab::testsupport {

struct BruteOutcome {
  Verdict verdict;
  std::optional<SearchWitness> witness;
};

// Independent classification oracle: double enumeration over every nonzero
// coefficient tuple for f and g, multiplying the polynomials directly.
// No backtracking, no fibers, and the target set is resolved through the
// definitional routes (per-element power scans; maximal-left-ideal radical).
BruteOutcome brute_classify(const FiniteRing& ring, TargetKind target, int deg_f,
                            int deg_g);

}  // namespace ringlab::testsupport
