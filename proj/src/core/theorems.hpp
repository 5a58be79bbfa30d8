#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "checker.hpp"

namespace ringlab {

// Closure statements checked as exact bounded analogues: every proof behind
// them preserves polynomial degrees, so validity at bounds (deg_f, deg_g)
// is decidable by running the classifier on both sides.
enum class TheoremId { vquot, vlocal, vprod, vtri, vtn, vtriv, vcorner };

std::string to_string(TheoremId id);

struct TheoremVerdict {
  TheoremId id;
  std::string instance;
  int deg_f = 0, deg_g = 0;
  bool holds = true;
  bool vacuous = false;  // hypothesis empty (e.g. ring not local)
  bool skipped = false;  // classification over budget; not a failure
  std::string note;
  std::vector<ClassificationReport> details;
};

struct CheckOptions {
  uint64_t budget = 10000000;
  int workers = 1;
  uint32_t cap = kDefaultTableCap;
};

// R/I verified at bounds implies R verified, provided I is inside J(R).
TheoremVerdict validate_quot(const FiniteRing& ring,
                             const std::vector<uint16_t>& ideal_gens, int deg_f,
                             int deg_g, const CheckOptions& opt = {});
// Local rings classify as verified at every bound.
TheoremVerdict validate_local(const FiniteRing& ring, int deg_f, int deg_g,
                              const CheckOptions& opt = {});
// R x S verified iff both factors verified.
TheoremVerdict validate_prod(const FiniteRing& a, const FiniteRing& b, int deg_f,
                             int deg_g, const CheckOptions& opt = {});
// Formal triangular ring (module = ring) verified iff the ring is.
TheoremVerdict validate_tri(const FiniteRing& ring, int deg_f, int deg_g,
                            const CheckOptions& opt = {});
// T_n(R) verified iff R verified.
TheoremVerdict validate_tn(const FiniteRing& ring, int n, int deg_f, int deg_g,
                           const CheckOptions& opt = {});
// Trivial extension verified iff the base ring is.
TheoremVerdict validate_triv(const FiniteRing& ring, int deg_f, int deg_g,
                             const CheckOptions& opt = {});
// Corner rings of a verified ring are verified; the converse is checked only
// for abelian rings.
TheoremVerdict validate_corner(const FiniteRing& ring, uint16_t idem_index,
                               int deg_f, int deg_g, const CheckOptions& opt = {});

struct TheoremRun {
  int deg_f = 0, deg_g = 0;
  std::vector<TheoremVerdict> rows;
  bool all_hold = true;  // over rows that actually ran
  int checked = 0;
  int skipped = 0;
};

// Runs every validator over a corpus of table-backed rings. Instances whose
// classification would blow the budget are reported as skipped rows.
// V-PROD runs on all unordered pairs, V-TN on n = 2, 3, V-CORNER on every
// idempotent of each ring.
TheoremRun check_theorems(const std::vector<FiniteRing>& corpus, int deg_f,
                          int deg_g, const CheckOptions& opt = {});

// ---------------------------------------------------------------------------
// Bundled worked-example suite (cases E2, E5, E7, E9).

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExampleCaseReport {
  std::string id;
  bool passed = true;
  std::vector<CheckItem> checks;
};

struct ExampleSuiteReport {
  int truncation = 0;
  std::vector<ExampleCaseReport> cases;
  bool all_passed = true;
};

// which: "e2", "e5", "e7", "e9" or "all". Truncation must be >= 3 so
// the degree-2 witness products survive.
ExampleSuiteReport run_example_suite(const std::string& which, int truncation,
                                     const CheckOptions& opt = {});

}  // namespace ringlab
