#include "structure.hpp"

#include <cassert>
#include <unordered_set>

#include "constructions.hpp"

namespace ringlab {

namespace {

ElementSet from_mask(const FiniteRing& ring, SetKind kind, std::vector<bool> mask) {
  ElementSet out;
  out.ring = ring;
  out.kind = kind;
  out.mask = std::move(mask);
  for (uint32_t i = 0; i < out.mask.size(); ++i)
    if (out.mask[i]) out.members.push_back(uint16_t(i));
  return out;
}

std::vector<bool> unit_mask(const TableRing& t) {
  const uint32_t n = t.count();
  const uint16_t one = t.one_index();
  std::vector<bool> unit(n, false);
  for (uint32_t x = 0; x < n; ++x) {
    for (uint32_t y = 0; y < n; ++y)
      if (t.muli(uint16_t(x), uint16_t(y)) == one) {
        // Finite rings have no one-sided inverses.
        assert(t.muli(uint16_t(y), uint16_t(x)) == one);
        unit[x] = true;
        break;
      }
  }
  return unit;
}

}  // namespace

NilpotencyResult is_nilpotent(const FiniteRing& ring, const Elem& x) {
  if (!ring.contains(x))
    fail(Errc::element_not_in_ring, "is_nilpotent: element not in ring");
  const RingBackend& b = ring.backend();
  const Elem zero = b.zero();
  std::unordered_set<Elem, ElemHash> seen;
  Elem y = x;
  int m = 1;
  while (true) {
    if (y == zero) return {true, m, m};
    if (!seen.insert(y).second) return {false, 0, m};
    y = b.mul(y, x);
    ++m;
  }
}

ElementSet nilpotents(const FiniteRing& ring) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  std::vector<bool> mask(n, false);
  for (uint32_t x = 0; x < n; ++x) {
    // Index-level power scan.
    std::vector<bool> seen(n, false);
    uint16_t y = uint16_t(x);
    while (true) {
      if (y == 0) {
        mask[x] = true;
        break;
      }
      if (seen[y]) break;
      seen[y] = true;
      y = t.muli(y, uint16_t(x));
    }
  }
  return from_mask(ring, SetKind::nilpotents, std::move(mask));
}

ElementSet units(const FiniteRing& ring) {
  return from_mask(ring, SetKind::units, unit_mask(ring.table()));
}

ElementSet idempotents(const FiniteRing& ring) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  std::vector<bool> mask(n, false);
  for (uint32_t x = 0; x < n; ++x)
    if (t.muli(uint16_t(x), uint16_t(x)) == x) mask[x] = true;
  return from_mask(ring, SetKind::idempotents, std::move(mask));
}

ElementSet center(const FiniteRing& ring) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  std::vector<bool> mask(n, true);
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y)
      if (t.muli(uint16_t(x), uint16_t(y)) != t.muli(uint16_t(y), uint16_t(x))) {
        mask[x] = false;
        break;
      }
  return from_mask(ring, SetKind::center, std::move(mask));
}

ElementSet jacobson_radical(const FiniteRing& ring) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  const uint16_t one = t.one_index();
  std::vector<bool> unit = unit_mask(t);
  std::vector<bool> mask(n, false);
  for (uint32_t x = 0; x < n; ++x) {
    bool in = true;
    for (uint32_t r = 0; r < n; ++r) {
      uint16_t u = t.subi(one, t.muli(uint16_t(r), uint16_t(x)));
      if (!unit[u]) {
        in = false;
        break;
      }
    }
    mask[x] = in;
  }
  return from_mask(ring, SetKind::radical, std::move(mask));
}

ElementSet jacobson_radical_oracle(const FiniteRing& ring, uint32_t cap) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  if (n > cap || cap > 64)
    fail(Errc::cap_exceeded, "radical oracle supports rings of size <= " +
                                 std::to_string(cap > 64 ? 64 : cap) + ", got " +
                                 std::to_string(n));
  const uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;

  // Principal left ideals: Rx = { r*x } is already additively closed.
  std::vector<uint64_t> family;
  auto add_ideal = [&](uint64_t m) {
    for (uint64_t f : family)
      if (f == m) return;
    family.push_back(m);
  };
  for (uint32_t x = 0; x < n; ++x) {
    uint64_t m = 0;
    for (uint32_t r = 0; r < n; ++r) m |= 1ull << t.muli(uint16_t(r), uint16_t(x));
    add_ideal(m);
  }

  // Close the family under joins: I + J = all pairwise sums.
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      uint64_t a = family[i], b = family[j];
      if ((a | b) == a || (a | b) == b) continue;
      uint64_t join = 0;
      for (uint32_t x = 0; x < n; ++x) {
        if (!(a >> x & 1)) continue;
        for (uint32_t y = 0; y < n; ++y)
          if (b >> y & 1) join |= 1ull << t.addi(uint16_t(x), uint16_t(y));
      }
      add_ideal(join);
    }

  // Maximal proper left ideals, intersected.
  uint64_t inter = full;
  for (uint64_t m : family) {
    if (m == full) continue;
    bool maximal = true;
    for (uint64_t other : family)
      if (other != full && other != m && (other & m) == m) {
        maximal = false;
        break;
      }
    if (maximal) inter &= m;
  }

  std::vector<bool> mask(n, false);
  for (uint32_t x = 0; x < n; ++x) mask[x] = (inter >> x) & 1;
  return from_mask(ring, SetKind::radical, std::move(mask));
}

LocalResult is_local(const FiniteRing& ring) {
  const TableRing& t = ring.table();
  std::vector<bool> unit = unit_mask(t);
  ElementSet rad = jacobson_radical(ring);
  for (uint32_t x = 0; x < t.count(); ++x)
    if (!unit[x] && !rad.mask[x]) return {false, uint16_t(x)};
  return {true, std::nullopt};
}

AbelianResult is_abelian(const FiniteRing& ring) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  for (uint32_t e = 0; e < n; ++e) {
    if (t.muli(uint16_t(e), uint16_t(e)) != e) continue;
    for (uint32_t x = 0; x < n; ++x)
      if (t.muli(uint16_t(e), uint16_t(x)) != t.muli(uint16_t(x), uint16_t(e)))
        return {false, uint16_t(e), uint16_t(x)};
  }
  return {true, std::nullopt, std::nullopt};
}

namespace {

// Decomposes x as sum of t^d * A_d; returns (coefficient ring, coefficients).
// Handles series rings and (upper-)matrix rings over series rings.
std::pair<FiniteRing, std::vector<Elem>> series_coefficients(const FiniteRing& ring,
                                                             const Elem& x) {
  const RingBackend& b = ring.backend();
  if (auto ss = b.series_shape()) {
    return {ss->coeff_ring, x.as_vec()};
  }
  if (auto ms = b.matrix_shape()) {
    auto es = ms->entry_ring.backend().series_shape();
    if (!es)
      fail(Errc::bad_argument,
           "non-nilpotency certificate needs series-structured elements, got " +
               ring.describe());
    const int k = es->truncation;
    FiniteRing coeff_ring = ms->upper_only
                                ? upper_triangular(ms->n, es->coeff_ring)
                                : matrix_ring(ms->n, es->coeff_ring);
    const auto& entries = x.as_vec();
    std::vector<Elem> coeffs;
    coeffs.reserve(size_t(k));
    for (int d = 0; d < k; ++d) {
      std::vector<Elem> parts(entries.size());
      for (size_t i = 0; i < entries.size(); ++i)
        parts[i] = entries[i].as_vec()[size_t(d)];
      coeffs.push_back(Elem::of_vec(std::move(parts)));
    }
    return {coeff_ring, std::move(coeffs)};
  }
  fail(Errc::bad_argument,
       "non-nilpotency certificate needs series-structured elements, got " +
           ring.describe());
}

}  // namespace

std::optional<NonNilpotencyCertificate> series_nonnilpotency_certificate(
    const FiniteRing& ring, const Elem& x) {
  if (!ring.contains(x))
    fail(Errc::element_not_in_ring, "certificate: element not in ring");

  // Table rings delegate to the ambient structure they were built from.
  if (const TableRing* t = ring.table_if()) {
    if (!t->has_source())
      fail(Errc::bad_argument,
           "certificate: table ring has no ambient series structure");
    return series_nonnilpotency_certificate(t->source_ring(),
                                            t->source_elem(uint16_t(x.as_int())));
  }

  auto [coeff_ring, coeffs] = series_coefficients(ring, x);
  const Elem czero = coeff_ring.zero();
  int lowest = -1;
  for (size_t d = 0; d < coeffs.size(); ++d)
    if (coeffs[d] != czero) {
      lowest = int(d);
      break;
    }
  if (lowest < 0)
    fail(Errc::precondition, "certificate: element is zero");

  NilpotencyResult scan = is_nilpotent(coeff_ring, coeffs[size_t(lowest)]);
  if (scan.nilpotent) return std::nullopt;
  NonNilpotencyCertificate cert;
  cert.element_label = ring.label(x);
  cert.lowest_degree = lowest;
  cert.coeff_ring = coeff_ring;
  cert.leading_coeff = coeffs[size_t(lowest)];
  cert.leading_coeff_label = coeff_ring.label(cert.leading_coeff);
  cert.witness_exponent_checked = scan.powers_checked;
  return cert;
}

bool revalidate_certificate(const NonNilpotencyCertificate& cert) {
  return !is_nilpotent(cert.coeff_ring, cert.leading_coeff).nilpotent;
}

}  // namespace ringlab
