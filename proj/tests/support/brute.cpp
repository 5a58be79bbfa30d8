#include "brute.hpp"

#include "ncpoly.hpp"

namespace ringlab::testsupport {

namespace {

std::vector<bool> brute_target_mask(const FiniteRing& ring, TargetKind target) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  std::vector<bool> mask(n, false);
  switch (target) {
    case TargetKind::zero:
      mask[0] = true;
      break;
    case TargetKind::nil:
      for (uint32_t x = 0; x < n; ++x)
        mask[x] = is_nilpotent(ring, Elem::of_int(x)).nilpotent;
      break;
    case TargetKind::jac: {
      ElementSet rad = jacobson_radical_oracle(ring);
      mask = rad.mask;
      break;
    }
  }
  return mask;
}

// Advances a base-n odometer, most significant digit first. False on wrap.
bool next_tuple(std::vector<uint16_t>& tup, uint32_t n) {
  for (size_t i = tup.size(); i-- > 0;) {
    if (++tup[i] < n) return true;
    tup[i] = 0;
  }
  return false;
}

}  // namespace

BruteOutcome brute_classify(const FiniteRing& ring, TargetKind target, int deg_f,
                            int deg_g) {
  const uint32_t n = ring.table().count();
  std::vector<bool> mask = brute_target_mask(ring, target);

  auto poly_of = [&](const std::vector<uint16_t>& tup) {
    std::vector<Elem> coeffs;
    for (uint16_t c : tup) coeffs.push_back(Elem::of_int(c));
    return NCPolynomial(ring, std::move(coeffs));
  };

  for (int df = 0; df <= deg_f; ++df) {
    std::vector<uint16_t> a(size_t(df) + 1, 0);
    do {
      if (a[size_t(df)] == 0) continue;  // enumerate exact degree df
      NCPolynomial f = poly_of(a);
      std::vector<uint16_t> b(size_t(deg_g) + 1, 0);
      do {
        NCPolynomial g = poly_of(b);
        if (g.is_zero()) continue;
        if (!poly_mul(f, g).is_zero()) continue;
        for (const CoefficientProduct& p : coefficient_products(f, g)) {
          if (mask[uint16_t(p.value.as_int())]) continue;
          SearchWitness w;
          w.f = a;
          w.g.assign(b.begin(), b.begin() + g.degree() + 1);
          w.i = p.i;
          w.j = p.j;
          w.product = uint16_t(p.value.as_int());
          return {Verdict::counterexample, std::move(w)};
        }
      } while (next_tuple(b, n));
    } while (next_tuple(a, n));
  }
  return {Verdict::verified, std::nullopt};
}

}  // namespace ringlab::testsupport
