#pragma once

#include <string>
#include <vector>

#include "ring.hpp"

namespace ringlab {

// Polynomial in one central variable with coefficients in a (possibly
// noncommutative) finite ring, lowest degree first. The zero polynomial is
// the empty coefficient list; otherwise the last coefficient is nonzero.
class NCPolynomial {
 public:
  NCPolynomial() = default;
  // Normalizes by stripping trailing zeros.
  NCPolynomial(FiniteRing ring, std::vector<Elem> coeffs);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero
  const Elem& coeff(size_t i) const { return coeffs_[i]; }

  bool operator==(const NCPolynomial& o) const;

  std::string to_string() const;

 private:
  FiniteRing ring_;
  std::vector<Elem> coeffs_;
};

NCPolynomial poly_add(const NCPolynomial& f, const NCPolynomial& g);

// Convolution product; the left factor of every coefficient product comes
// from f. Order matters over noncommutative rings.
NCPolynomial poly_mul(const NCPolynomial& f, const NCPolynomial& g);

struct CoefficientProduct {
  int i, j;
  Elem value;  // a_i * b_j
};

// All (deg f + 1) * (deg g + 1) ordered products a_i * b_j, i-major.
// Empty when either polynomial is zero.
std::vector<CoefficientProduct> coefficient_products(const NCPolynomial& f,
                                                     const NCPolynomial& g);

}  // namespace ringlab
