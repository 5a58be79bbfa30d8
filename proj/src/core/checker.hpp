#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "structure.hpp"

namespace ringlab {

// Membership target for coefficient products of annihilating polynomial
// pairs: {0}, the nilpotent set, or the Jacobson radical.
enum class TargetKind { zero, nil, jac };

enum class SearchMode { exhaustive, sampled };

enum class Verdict { verified, counterexample, unknown };

std::string to_string(TargetKind k);
std::string to_string(SearchMode m);
std::string to_string(Verdict v);
std::optional<TargetKind> target_from_string(const std::string& s);

struct ClassifyOptions {
  TargetKind target = TargetKind::jac;
  int deg_f = 1;
  int deg_g = 1;
  SearchMode mode = SearchMode::exhaustive;
  uint64_t trials = 100000;   // sampled mode
  uint64_t budget = 10000000; // exhaustive permitted while size^(deg_f+1) fits
  int workers = 1;
};

struct SearchWitness {
  std::vector<uint16_t> f, g;           // normalized coefficient index tuples
  int i = 0, j = 0;                     // offending product position
  uint16_t product = 0;                 // index of a_i * b_j
  std::vector<uint16_t> nil_power_trace;  // distinct powers of the product,
                                          // recorded for nil targets
};

struct ClassificationReport {
  std::string ring_expr;
  uint32_t ring_size = 0;
  TargetKind target = TargetKind::jac;
  int deg_f = 0, deg_g = 0;
  SearchMode mode = SearchMode::exhaustive;
  uint64_t trials = 0;  // sampled mode only
  Verdict verdict = Verdict::verified;
  std::optional<SearchWitness> witness;
  uint32_t target_size = 0;
  // Zero-product pairs whose coefficient products were inspected, counted in
  // canonical search order up to the reported witness. Independent of the
  // worker count.
  uint64_t pairs_examined = 0;
  double elapsed_sec = 0.0;  // wall time; never serialized
};

ElementSet resolve_target(const FiniteRing& ring, TargetKind kind);

// Solution set of a*b = c, ascending. The annihilator of a is fiber(a, 0).
std::vector<uint16_t> annihilator_fiber(const FiniteRing& ring, uint16_t a,
                                        uint16_t c);

// Bounded classification. Exhaustive mode walks every nonzero f with
// deg f <= deg_f in (degree, coefficient tuple) order and backtracks over g
// coefficients through precomputed fibers of left multiplication by a_0;
// convolution constraints past deg_g are checked at the leaves. Verdicts:
// verified (exhaustive, no witness), counterexample (first witness in
// canonical order), unknown (sampled, no witness).
ClassificationReport classify(const FiniteRing& ring, const ClassifyOptions& opt);

// Replays a witness by direct arithmetic, independent of the search:
// f, g nonzero, f*g = 0, and the (i,j) product matches and lies outside the
// freshly recomputed target. Returns false on a tampered-but-well-formed
// report; throws malformed_witness when the report cannot be interpreted.
bool verify_certificate(const FiniteRing& ring, const ClassificationReport& report);

}  // namespace ringlab
