#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ring.hpp"

namespace ringlab {

enum class SetKind { nilpotents, units, idempotents, center, radical, ideal };

// An index set inside a table-backed ring, kept in element order.
struct ElementSet {
  FiniteRing ring;
  SetKind kind;
  std::vector<uint16_t> members;
  std::vector<bool> mask;

  bool contains(uint16_t i) const { return mask[i]; }
  size_t count() const { return members.size(); }
};

struct NilpotencyResult {
  bool nilpotent;
  int index;                // least m with x^m = 0 when nilpotent
  int powers_checked;       // powers computed before the scan stopped
};

// Power scan with a memo set: reaches zero or repeats within size+1 steps.
// Works on any ring, table-backed or computed.
NilpotencyResult is_nilpotent(const FiniteRing& ring, const Elem& x);

ElementSet nilpotents(const FiniteRing& ring);
ElementSet units(const FiniteRing& ring);
ElementSet idempotents(const FiniteRing& ring);
ElementSet center(const FiniteRing& ring);

// Radical by quasi-regularity: { x : 1 - r*x is a unit for every r }.
ElementSet jacobson_radical(const FiniteRing& ring);

constexpr uint32_t kRadicalOracleCap = 64;

// Radical by the definition: enumerate all left ideals as joins of principal
// left ideals, keep the maximal proper ones, intersect.
ElementSet jacobson_radical_oracle(const FiniteRing& ring,
                                   uint32_t cap = kRadicalOracleCap);

struct LocalResult {
  bool local;
  // An element that is neither a unit nor in the radical, when not local.
  std::optional<uint16_t> witness;
};
LocalResult is_local(const FiniteRing& ring);

struct AbelianResult {
  bool abelian;
  // First (idempotent, element) pair that fails to commute, in element order.
  std::optional<uint16_t> idem;
  std::optional<uint16_t> other;
};
AbelianResult is_abelian(const FiniteRing& ring);

// Certificate that an element of a truncated-series ring (or a matrix ring
// over one) is non-nilpotent in the untruncated ring: its lowest-degree
// coefficient is non-nilpotent in the coefficient ring, so the lowest-order
// term of every power survives.
struct NonNilpotencyCertificate {
  std::string element_label;
  int lowest_degree;
  FiniteRing coeff_ring;
  Elem leading_coeff;
  std::string leading_coeff_label;
  int witness_exponent_checked;
};

// nullopt = inconclusive (leading coefficient nilpotent; the criterion is
// one-sided). Throws precondition on x = 0 and bad_argument when the ring is
// not series-structured.
std::optional<NonNilpotencyCertificate> series_nonnilpotency_certificate(
    const FiniteRing& ring, const Elem& x);

// Re-runs the certificate's power scan; true when the leading coefficient
// is still non-nilpotent.
bool revalidate_certificate(const NonNilpotencyCertificate& cert);

}  // namespace ringlab
