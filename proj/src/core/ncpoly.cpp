#include "ncpoly.hpp"

#include <algorithm>

namespace ringlab {

namespace {

void require_same_ring(const NCPolynomial& f, const NCPolynomial& g) {
  if (!f.ring().valid() || !g.ring().valid() || !f.ring().same_ring(g.ring()))
    fail(Errc::bad_argument, "polynomial operands live in different rings");
}

bool needs_parens(const std::string& label) {
  return label.find('+') != std::string::npos ||
         label.find(',') != std::string::npos;
}

}  // namespace

NCPolynomial::NCPolynomial(FiniteRing ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (const Elem& c : coeffs_)
    if (!ring_.contains(c))
      fail(Errc::element_not_in_ring, "polynomial coefficient not in ring");
  while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

bool NCPolynomial::operator==(const NCPolynomial& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

std::string NCPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring_.is_zero(coeffs_[i])) continue;
    std::string lbl = ring_.label(coeffs_[i]);
    if (needs_parens(lbl)) lbl = "(" + lbl + ")";
    if (!out.empty()) out += " + ";
    out += lbl;
    if (i == 1)
      out += "*x";
    else if (i > 1)
      out += "*x^" + std::to_string(i);
  }
  return out;
}

NCPolynomial poly_add(const NCPolynomial& f, const NCPolynomial& g) {
  require_same_ring(f, g);
  const FiniteRing& r = f.ring();
  std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), r.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeff(i);
  for (size_t i = 0; i < g.coeffs().size(); ++i)
    out[i] = r.backend().add(out[i], g.coeff(i));
  return NCPolynomial(r, std::move(out));
}

NCPolynomial poly_mul(const NCPolynomial& f, const NCPolynomial& g) {
  require_same_ring(f, g);
  const FiniteRing& r = f.ring();
  if (f.is_zero() || g.is_zero()) return NCPolynomial(r, {});
  const RingBackend& b = r.backend();
  std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1, r.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i)
    for (size_t j = 0; j < g.coeffs().size(); ++j)
      out[i + j] = b.add(out[i + j], b.mul(f.coeff(i), g.coeff(j)));
  return NCPolynomial(r, std::move(out));
}

std::vector<CoefficientProduct> coefficient_products(const NCPolynomial& f,
                                                     const NCPolynomial& g) {
  require_same_ring(f, g);
  std::vector<CoefficientProduct> out;
  if (f.is_zero() || g.is_zero()) return out;
  const RingBackend& b = f.ring().backend();
  out.reserve(f.coeffs().size() * g.coeffs().size());
  for (size_t i = 0; i < f.coeffs().size(); ++i)
    for (size_t j = 0; j < g.coeffs().size(); ++j)
      out.push_back({int(i), int(j), b.mul(f.coeff(i), g.coeff(j))});
  return out;
}

}  // namespace ringlab
