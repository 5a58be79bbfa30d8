#include "ring.hpp"

#include <random>

namespace ringlab {

Elem RingBackend::element_at(uint64_t) const {
  fail(Errc::enumeration_unavailable,
       "ring " + describe() + " does not support element enumeration");
}

uint64_t RingBackend::ordinal_of(const Elem&) const {
  fail(Errc::enumeration_unavailable,
       "ring " + describe() + " does not support element enumeration");
}

std::optional<SeriesShape> RingBackend::series_shape() const { return std::nullopt; }

std::optional<MatrixShape> RingBackend::matrix_shape() const { return std::nullopt; }

Elem FiniteRing::add(const Elem& x, const Elem& y) const {
  if (!contains(x) || !contains(y))
    fail(Errc::element_not_in_ring, "add: operand not in " + describe());
  return backend_->add(x, y);
}

Elem FiniteRing::neg(const Elem& x) const {
  if (!contains(x))
    fail(Errc::element_not_in_ring, "neg: operand not in " + describe());
  return backend_->neg(x);
}

Elem FiniteRing::sub(const Elem& x, const Elem& y) const {
  if (!contains(x) || !contains(y))
    fail(Errc::element_not_in_ring, "sub: operand not in " + describe());
  return backend_->add(x, backend_->neg(y));
}

Elem FiniteRing::mul(const Elem& x, const Elem& y) const {
  if (!contains(x) || !contains(y))
    fail(Errc::element_not_in_ring, "mul: operand not in " + describe());
  return backend_->mul(x, y);
}

std::vector<Elem> FiniteRing::elements() const {
  if (!enumerable())
    fail(Errc::enumeration_unavailable,
         "ring " + describe() + " is too large to enumerate; materialize a "
         "generated subring instead");
  uint64_t n = size();
  std::vector<Elem> out;
  out.reserve(size_t(n));
  for (uint64_t i = 0; i < n; ++i) out.push_back(backend_->element_at(i));
  return out;
}

bool FiniteRing::is_table() const {
  return dynamic_cast<const TableRing*>(backend_.get()) != nullptr;
}

const TableRing* FiniteRing::table_if() const {
  return dynamic_cast<const TableRing*>(backend_.get());
}

const TableRing& FiniteRing::table() const {
  const TableRing* t = table_if();
  if (!t)
    fail(Errc::precondition,
         "operation requires a table-backed ring; materialize " + describe() +
             " first");
  return *t;
}

TableRing::TableRing(uint32_t n, std::vector<uint16_t> add_table,
                     std::vector<uint16_t> mul_table, uint16_t one_index,
                     std::vector<std::string> labels, std::string description,
                     FiniteRing source, std::vector<Elem> source_elems)
    : n_(n),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      one_(one_index),
      labels_(std::move(labels)),
      description_(std::move(description)),
      source_(std::move(source)),
      source_elems_(std::move(source_elems)) {
  if (n_ == 0 || add_.size() != size_t(n_) * n_ || mul_.size() != size_t(n_) * n_ ||
      labels_.size() != n_ || one_ >= n_)
    fail(Errc::internal, "malformed table ring");
  neg_.assign(n_, 0);
  for (uint32_t i = 0; i < n_; ++i) {
    bool found = false;
    for (uint32_t j = 0; j < n_; ++j)
      if (addi(uint16_t(i), uint16_t(j)) == 0) {
        neg_[i] = uint16_t(j);
        found = true;
        break;
      }
    if (!found) fail(Errc::internal, "element without additive inverse");
  }
  label_index_.reserve(n_);
  for (uint32_t i = 0; i < n_; ++i) label_index_.emplace(labels_[i], uint16_t(i));
  // Certificates resolve elements by label, so labels must be injective.
  if (label_index_.size() != n_) fail(Errc::internal, "duplicate element labels");
}

Elem TableRing::element_at(uint64_t ordinal) const {
  if (ordinal >= n_) fail(Errc::bad_argument, "element ordinal out of range");
  return Elem::of_int(int64_t(ordinal));
}

uint64_t TableRing::ordinal_of(const Elem& x) const {
  if (!contains(x)) fail(Errc::element_not_in_ring, "ordinal_of: not in ring");
  return uint64_t(x.as_int());
}

std::optional<uint16_t> TableRing::index_of_label(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

FiniteRing materialize(const FiniteRing& ring, uint32_t cap) {
  if (ring.is_table()) return ring;
  if (cap > kMaxTableCap) cap = kMaxTableCap;
  if (!ring.size_exact() || ring.size() > cap) {
    std::string shown = ring.size_exact() ? std::to_string(ring.size())
                                          : ">= 2^64";
    fail(Errc::cap_exceeded, "ring " + ring.describe() + " has " + shown +
                                 " elements, above the table cap " +
                                 std::to_string(cap));
  }
  return table_from_elements(ring, ring.elements(), ring.describe());
}

FiniteRing table_from_elements(const FiniteRing& ambient,
                               const std::vector<Elem>& elems,
                               const std::string& description) {
  const uint32_t n = uint32_t(elems.size());
  if (n == 0 || !ambient.is_zero(elems[0]))
    fail(Errc::internal, "element list must start with zero");
  std::unordered_map<Elem, uint16_t, ElemHash> index;
  index.reserve(n);
  for (uint32_t i = 0; i < n; ++i) index.emplace(elems[i], uint16_t(i));
  if (index.size() != n) fail(Errc::internal, "duplicate elements in list");

  const RingBackend& b = ambient.backend();
  auto lookup = [&](const Elem& e) -> uint16_t {
    auto it = index.find(e);
    if (it == index.end())
      fail(Errc::internal, "element list not closed under arithmetic");
    return it->second;
  };

  std::vector<uint16_t> add(size_t(n) * n), mul(size_t(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      add[size_t(i) * n + j] = lookup(b.add(elems[i], elems[j]));
      mul[size_t(i) * n + j] = lookup(b.mul(elems[i], elems[j]));
    }

  auto it_one = index.find(ambient.one());
  uint16_t one_index;
  if (it_one != index.end()) {
    one_index = it_one->second;
  } else {
    // Corner rings have their own identity, distinct from the ambient one.
    one_index = 0;
    bool found = false;
    for (uint32_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (uint32_t x = 0; x < n; ++x)
        if (mul[size_t(e) * n + x] != x || mul[size_t(x) * n + e] != x) {
          ok = false;
          break;
        }
      if (ok) {
        one_index = uint16_t(e);
        found = true;
      }
    }
    if (!found) fail(Errc::internal, "element list has no identity");
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (uint32_t i = 0; i < n; ++i) labels.push_back(ambient.label(elems[i]));

  return FiniteRing(std::make_shared<TableRing>(
      n, std::move(add), std::move(mul), one_index, std::move(labels),
      description, ambient, elems));
}

AxiomCheckResult check_ring_axioms(const FiniteRing& ring,
                                   uint32_t exhaustive_limit,
                                   uint64_t samples) {
  const RingBackend& b = ring.backend();
  const Elem zero = b.zero();
  const Elem one = b.one();
  AxiomCheckResult res;

  auto violation = [&](const std::string& law, const Elem& x, const Elem& y,
                       const Elem& z) {
    res.ok = false;
    res.detail = law + " violated at (" + b.label(x) + ", " + b.label(y) +
                 ", " + b.label(z) + ")";
  };

  auto check_triple = [&](const Elem& x, const Elem& y, const Elem& z) -> bool {
    if (b.add(b.add(x, y), z) != b.add(x, b.add(y, z))) {
      violation("additive associativity", x, y, z);
      return false;
    }
    if (b.mul(b.mul(x, y), z) != b.mul(x, b.mul(y, z))) {
      violation("multiplicative associativity", x, y, z);
      return false;
    }
    if (b.mul(x, b.add(y, z)) != b.add(b.mul(x, y), b.mul(x, z))) {
      violation("left distributivity", x, y, z);
      return false;
    }
    if (b.mul(b.add(x, y), z) != b.add(b.mul(x, z), b.mul(y, z))) {
      violation("right distributivity", x, y, z);
      return false;
    }
    return true;
  };

  auto check_pair = [&](const Elem& x, const Elem& y) -> bool {
    if (b.add(x, y) != b.add(y, x)) {
      violation("additive commutativity", x, y, zero);
      return false;
    }
    return true;
  };

  auto check_single = [&](const Elem& x) -> bool {
    if (b.add(x, zero) != x || b.add(x, b.neg(x)) != zero ||
        b.mul(one, x) != x || b.mul(x, one) != x) {
      violation("identity/inverse laws", x, zero, one);
      return false;
    }
    return true;
  };

  if (ring.enumerable() && ring.size() <= exhaustive_limit) {
    std::vector<Elem> all = ring.elements();
    for (const Elem& x : all)
      if (!check_single(x)) return res;
    for (const Elem& x : all)
      for (const Elem& y : all)
        if (!check_pair(x, y)) return res;
    for (const Elem& x : all)
      for (const Elem& y : all)
        for (const Elem& z : all)
          if (!check_triple(x, y, z)) return res;
    return res;
  }

  if (!ring.enumerable())
    fail(Errc::enumeration_unavailable,
         "axiom check needs an enumerable ring");

  // Deterministic sampling for big rings.
  std::mt19937_64 rng(0x2b5ed5a11ull);
  uint64_t n = ring.size();
  auto pick = [&]() { return ring.element_at(rng() % n); };
  for (uint64_t s = 0; s < samples; ++s) {
    Elem x = pick(), y = pick(), z = pick();
    if (!check_single(x) || !check_pair(x, y) || !check_triple(x, y, z))
      return res;
  }
  return res;
}

}  // namespace ringlab
