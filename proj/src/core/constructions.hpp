#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ring.hpp"

namespace ringlab {

// Base rings (table-backed on construction).
FiniteRing zmod(int64_t n, uint32_t cap = kDefaultTableCap);
FiniteRing gf(int64_t p, int64_t k = 1, uint32_t cap = kDefaultTableCap);

// Composite rings (computed backends; materialize to get tables).
FiniteRing matrix_ring(int n, const FiniteRing& ring);
FiniteRing upper_triangular(int n, const FiniteRing& ring);
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b);
FiniteRing trivial_extension(const FiniteRing& ring);
// Formal 2x2 triangular ring with module = ring on both sides:
// (r,m;0,s)(r',m';0,s') = (rr', rm'+ms'; 0, ss').
FiniteRing triangular(const FiniteRing& ring);
FiniteRing truncated_series(const FiniteRing& ring, int k);

// Closure constructions (table-backed results).
FiniteRing corner(const FiniteRing& ring, const Elem& idem,
                  uint32_t cap = kDefaultTableCap, std::string desc = "");
FiniteRing quotient(const FiniteRing& ring, const std::vector<uint16_t>& ideal_gens,
                    std::string desc = "");
FiniteRing subring_generated(const FiniteRing& ambient, const std::vector<Elem>& gens,
                             uint32_t cap = kDefaultTableCap, std::string desc = "");

// Two-sided ideal generated by the given elements of a table ring,
// as a sorted index set.
std::vector<uint16_t> ideal_closure(const FiniteRing& ring,
                                    const std::vector<uint16_t>& gens);

// Bundled example rings. E2: the subring of M3(F2[t]/(t^k)) generated by the
// identity and the t^d * e_ij units in the upper-left 2x2 block. E5: the
// subring of M2(F2)[t]/(t^k) whose constant coefficient is scalar.
// Both need k >= 3 so degree-2 products survive truncation.
enum class ExampleRingId { E2, E5 };
FiniteRing example_ring(ExampleRingId id, int k, uint32_t cap = kDefaultTableCap);

// Ambient helpers for the example rings.
Elem series_unit(const FiniteRing& series_ring, int degree);
Elem matrix_unit(const FiniteRing& mat_ring, int n, int row, int col,
                 const Elem& entry);

}  // namespace ringlab
