#include "constructions.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ringlab {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficients ascending by degree.
using FpPoly = std::vector<int>;

FpPoly fp_trim(FpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = int((out[i + j] + int64_t(a[i]) * b[j]) % p);
  return fp_trim(std::move(out));
}

// Remainder of a modulo monic m.
FpPoly fp_mod(FpPoly a, const FpPoly& m, int p) {
  a = fp_trim(std::move(a));
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    int lead = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i < m.size(); ++i) {
      int64_t v = a[shift + i] - int64_t(lead) * m[i];
      a[shift + i] = int(((v % p) + p) % p);
    }
    a = fp_trim(std::move(a));
  }
  return a;
}

bool fp_divides(const FpPoly& d, const FpPoly& a, int p) {
  return fp_mod(a, d, p).empty();
}

// Monic polynomial of degree deg whose non-leading coefficients are the
// base-p digits of v (constant coefficient least significant).
FpPoly monic_from_packed(int64_t v, int deg, int p) {
  FpPoly out(size_t(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    out[size_t(i)] = int(v % p);
    v /= p;
  }
  out[size_t(deg)] = 1;
  return out;
}

bool fp_irreducible(const FpPoly& f, int p) {
  const int deg = int(f.size()) - 1;
  if (deg <= 0) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t v = 0; v < count; ++v)
      if (fp_divides(monic_from_packed(v, d, p), f, p)) return false;
  }
  return true;
}

int64_t ipow_capped(int64_t base, int exp, int64_t limit) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

FiniteRing residue_table_ring(int64_t n, const std::string& desc) {
  const uint32_t un = uint32_t(n);
  std::vector<uint16_t> add(size_t(un) * un), mul(size_t(un) * un);
  std::vector<std::string> labels(un);
  for (uint32_t i = 0; i < un; ++i) {
    labels[i] = std::to_string(i);
    for (uint32_t j = 0; j < un; ++j) {
      add[size_t(i) * un + j] = uint16_t((i + j) % un);
      mul[size_t(i) * un + j] = uint16_t((uint64_t(i) * j) % un);
    }
  }
  return FiniteRing(std::make_shared<TableRing>(un, std::move(add), std::move(mul),
                                                uint16_t(1 % un), std::move(labels),
                                                desc));
}

// Shared machinery for rings whose elements are fixed-arity tuples over
// component rings: slotwise addition, lexicographic element order (slot 0
// most significant), product size.
class TupleBackend : public RingBackend {
 public:
  TupleBackend(std::vector<FiniteRing> slots) : slots_(std::move(slots)) {
    size_ = 1;
    exact_ = true;
    for (const FiniteRing& s : slots_) {
      if (!s.size_exact()) exact_ = false;
      size_ = sat_mul(size_, s.size());
    }
    if (size_ == UINT64_MAX) exact_ = false;
  }

  uint64_t size() const override { return size_; }
  bool size_exact() const override { return exact_; }

  Elem zero() const override {
    std::vector<Elem> parts;
    parts.reserve(slots_.size());
    for (const FiniteRing& s : slots_) parts.push_back(s.zero());
    return Elem::of_vec(std::move(parts));
  }

  Elem add(const Elem& x, const Elem& y) const override {
    const auto& a = x.as_vec();
    const auto& b = y.as_vec();
    std::vector<Elem> parts;
    parts.reserve(slots_.size());
    for (size_t i = 0; i < slots_.size(); ++i)
      parts.push_back(slots_[i].backend().add(a[i], b[i]));
    return Elem::of_vec(std::move(parts));
  }

  Elem neg(const Elem& x) const override {
    const auto& a = x.as_vec();
    std::vector<Elem> parts;
    parts.reserve(slots_.size());
    for (size_t i = 0; i < slots_.size(); ++i)
      parts.push_back(slots_[i].backend().neg(a[i]));
    return Elem::of_vec(std::move(parts));
  }

  bool contains(const Elem& x) const override {
    if (x.is_int()) return false;
    const auto& a = x.as_vec();
    if (a.size() != slots_.size()) return false;
    for (size_t i = 0; i < slots_.size(); ++i)
      if (!slots_[i].contains(a[i])) return false;
    return true;
  }

  bool enumerable() const override {
    if (!exact_ || size_ > kEnumLimit) return false;
    for (const FiniteRing& s : slots_)
      if (!s.enumerable()) return false;
    return true;
  }

  Elem element_at(uint64_t ordinal) const override {
    if (!enumerable())
      fail(Errc::enumeration_unavailable,
           "ring " + describe() + " is too large to enumerate");
    if (ordinal >= size_) fail(Errc::bad_argument, "element ordinal out of range");
    std::vector<Elem> parts(slots_.size());
    for (size_t i = slots_.size(); i-- > 0;) {
      uint64_t s = slots_[i].size();
      parts[i] = slots_[i].element_at(ordinal % s);
      ordinal /= s;
    }
    return Elem::of_vec(std::move(parts));
  }

  uint64_t ordinal_of(const Elem& x) const override {
    if (!enumerable())
      fail(Errc::enumeration_unavailable,
           "ring " + describe() + " is too large to enumerate");
    const auto& a = x.as_vec();
    uint64_t ord = 0;
    for (size_t i = 0; i < slots_.size(); ++i)
      ord = ord * slots_[i].size() + slots_[i].backend().ordinal_of(a[i]);
    return ord;
  }

 protected:
  std::vector<FiniteRing> slots_;
  uint64_t size_;
  bool exact_;
};

std::string bracket_row(const std::vector<std::string>& cells) {
  std::string out = "[";
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    out += cells[i];
  }
  out += "]";
  return out;
}

std::string matrix_label(int n, const std::vector<std::string>& entries) {
  std::string out = "[";
  for (int r = 0; r < n; ++r) {
    if (r) out += ",";
    std::vector<std::string> row(entries.begin() + size_t(r) * n,
                                 entries.begin() + size_t(r + 1) * n);
    out += bracket_row(row);
  }
  out += "]";
  return out;
}

class MatrixBackend final : public TupleBackend {
 public:
  MatrixBackend(const FiniteRing& ring, int n)
      : TupleBackend(std::vector<FiniteRing>(size_t(n) * n, ring)),
        inner_(ring),
        n_(n) {}

  Elem one() const override {
    std::vector<Elem> parts(size_t(n_) * n_, inner_.zero());
    for (int i = 0; i < n_; ++i) parts[size_t(i) * n_ + i] = inner_.one();
    return Elem::of_vec(std::move(parts));
  }

  Elem mul(const Elem& x, const Elem& y) const override {
    const auto& a = x.as_vec();
    const auto& b = y.as_vec();
    const RingBackend& r = inner_.backend();
    std::vector<Elem> parts(size_t(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Elem acc = r.mul(a[size_t(i) * n_], b[size_t(j)]);
        for (int k = 1; k < n_; ++k)
          acc = r.add(acc, r.mul(a[size_t(i) * n_ + k], b[size_t(k) * n_ + j]));
        parts[size_t(i) * n_ + j] = std::move(acc);
      }
    return Elem::of_vec(std::move(parts));
  }

  std::string label(const Elem& x) const override {
    const auto& a = x.as_vec();
    std::vector<std::string> cells(a.size());
    for (size_t i = 0; i < a.size(); ++i) cells[i] = inner_.label(a[i]);
    return matrix_label(n_, cells);
  }

  std::string describe() const override {
    return "m(" + std::to_string(n_) + "," + inner_.describe() + ")";
  }

  std::optional<MatrixShape> matrix_shape() const override {
    return MatrixShape{inner_, n_, false};
  }

 private:
  FiniteRing inner_;
  int n_;
};

// Upper-triangular matrices stored compactly: row-major upper entries only.
class UpperTriBackend final : public TupleBackend {
 public:
  UpperTriBackend(const FiniteRing& ring, int n)
      : TupleBackend(std::vector<FiniteRing>(size_t(n) * (n + 1) / 2, ring)),
        inner_(ring),
        n_(n) {
    slot_.assign(size_t(n) * n, -1);
    int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) slot_[size_t(i) * n + j] = s++;
  }

  Elem one() const override {
    std::vector<Elem> parts(slots_.size(), inner_.zero());
    for (int i = 0; i < n_; ++i) parts[size_t(at(i, i))] = inner_.one();
    return Elem::of_vec(std::move(parts));
  }

  Elem mul(const Elem& x, const Elem& y) const override {
    const auto& a = x.as_vec();
    const auto& b = y.as_vec();
    const RingBackend& r = inner_.backend();
    std::vector<Elem> parts(slots_.size());
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        Elem acc = r.mul(a[size_t(at(i, i))], b[size_t(at(i, j))]);
        for (int k = i + 1; k <= j; ++k)
          acc = r.add(acc, r.mul(a[size_t(at(i, k))], b[size_t(at(k, j))]));
        parts[size_t(at(i, j))] = std::move(acc);
      }
    return Elem::of_vec(std::move(parts));
  }

  std::string label(const Elem& x) const override {
    const auto& a = x.as_vec();
    std::string zero_label = inner_.label(inner_.zero());
    std::vector<std::string> cells(size_t(n_) * n_, zero_label);
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j)
        cells[size_t(i) * n_ + j] = inner_.label(a[size_t(at(i, j))]);
    return matrix_label(n_, cells);
  }

  std::string describe() const override {
    return "t(" + std::to_string(n_) + "," + inner_.describe() + ")";
  }

  std::optional<MatrixShape> matrix_shape() const override {
    return MatrixShape{inner_, n_, true};
  }

 private:
  int at(int i, int j) const { return slot_[size_t(i) * n_ + j]; }

  FiniteRing inner_;
  int n_;
  std::vector<int> slot_;
};

class ProductBackend final : public TupleBackend {
 public:
  ProductBackend(const FiniteRing& a, const FiniteRing& b)
      : TupleBackend({a, b}) {}

  Elem one() const override {
    return Elem::of_vec({slots_[0].one(), slots_[1].one()});
  }

  Elem mul(const Elem& x, const Elem& y) const override {
    const auto& a = x.as_vec();
    const auto& b = y.as_vec();
    return Elem::of_vec({slots_[0].backend().mul(a[0], b[0]),
                         slots_[1].backend().mul(a[1], b[1])});
  }

  std::string label(const Elem& x) const override {
    const auto& a = x.as_vec();
    return "(" + slots_[0].label(a[0]) + "," + slots_[1].label(a[1]) + ")";
  }

  std::string describe() const override {
    return "prod(" + slots_[0].describe() + "," + slots_[1].describe() + ")";
  }
};

// Pairs (r,m) with (r1,m1)(r2,m2) = (r1*r2, r1*m2 + m1*r2).
class TrivExtBackend final : public TupleBackend {
 public:
  explicit TrivExtBackend(const FiniteRing& ring)
      : TupleBackend({ring, ring}), inner_(ring) {}

  Elem one() const override {
    return Elem::of_vec({inner_.one(), inner_.zero()});
  }

  Elem mul(const Elem& x, const Elem& y) const override {
    const auto& a = x.as_vec();
    const auto& b = y.as_vec();
    const RingBackend& r = inner_.backend();
    return Elem::of_vec({r.mul(a[0], b[0]),
                         r.add(r.mul(a[0], b[1]), r.mul(a[1], b[0]))});
  }

  std::string label(const Elem& x) const override {
    const auto& a = x.as_vec();
    return "(" + inner_.label(a[0]) + "," + inner_.label(a[1]) + ")";
  }

  std::string describe() const override {
    return "trivext(" + inner_.describe() + ")";
  }

 private:
  FiniteRing inner_;
};

// Formal (r,m;0,s) triangular ring with module = ring.
class TriangularBackend final : public TupleBackend {
 public:
  explicit TriangularBackend(const FiniteRing& ring)
      : TupleBackend({ring, ring, ring}), inner_(ring) {}

  Elem one() const override {
    return Elem::of_vec({inner_.one(), inner_.zero(), inner_.one()});
  }

  Elem mul(const Elem& x, const Elem& y) const override {
    const auto& a = x.as_vec();
    const auto& b = y.as_vec();
    const RingBackend& r = inner_.backend();
    return Elem::of_vec({r.mul(a[0], b[0]),
                         r.add(r.mul(a[0], b[1]), r.mul(a[1], b[2])),
                         r.mul(a[2], b[2])});
  }

  std::string label(const Elem& x) const override {
    const auto& a = x.as_vec();
    std::string z = inner_.label(inner_.zero());
    return matrix_label(2, {inner_.label(a[0]), inner_.label(a[1]), z,
                            inner_.label(a[2])});
  }

  std::string describe() const override {
    return "triangular(" + inner_.describe() + ")";
  }

 private:
  FiniteRing inner_;
};

// Coefficient vectors (c0..c_{k-1}) with convolution truncated at degree k.
class SeriesBackend final : public TupleBackend {
 public:
  SeriesBackend(const FiniteRing& ring, int k)
      : TupleBackend(std::vector<FiniteRing>(size_t(k), ring)),
        inner_(ring),
        k_(k) {}

  Elem one() const override {
    std::vector<Elem> parts(size_t(k_), inner_.zero());
    parts[0] = inner_.one();
    return Elem::of_vec(std::move(parts));
  }

  Elem mul(const Elem& x, const Elem& y) const override {
    const auto& a = x.as_vec();
    const auto& b = y.as_vec();
    const RingBackend& r = inner_.backend();
    std::vector<Elem> parts(size_t(k_), inner_.zero());
    for (int i = 0; i < k_; ++i)
      for (int j = 0; i + j < k_; ++j)
        parts[size_t(i + j)] = r.add(parts[size_t(i + j)], r.mul(a[size_t(i)], b[size_t(j)]));
    return Elem::of_vec(std::move(parts));
  }

  std::string label(const Elem& x) const override {
    const auto& a = x.as_vec();
    const Elem inner_zero = inner_.zero();
    const Elem inner_one = inner_.one();
    std::string out;
    for (int d = 0; d < k_; ++d) {
      if (a[size_t(d)] == inner_zero) continue;
      std::string term;
      std::string tpow = d == 1 ? "t" : "t^" + std::to_string(d);
      if (d == 0)
        term = inner_.label(a[0]);
      else if (a[size_t(d)] == inner_one)
        term = tpow;
      else
        term = "(" + inner_.label(a[size_t(d)]) + ")*" + tpow;
      if (!out.empty()) out += "+";
      out += term;
    }
    return out.empty() ? inner_.label(inner_zero) : out;
  }

  std::string describe() const override {
    return "series(" + inner_.describe() + "," + std::to_string(k_) + ")";
  }

  std::optional<SeriesShape> series_shape() const override {
    return SeriesShape{inner_, k_};
  }

 private:
  FiniteRing inner_;
  int k_;
};

}  // namespace

FiniteRing zmod(int64_t n, uint32_t cap) {
  if (n < 2) fail(Errc::precondition, "zmod requires n >= 2");
  if (cap > kMaxTableCap) cap = kMaxTableCap;
  if (n > int64_t(cap))
    fail(Errc::cap_exceeded, "zmod(" + std::to_string(n) +
                                 ") exceeds the table cap " + std::to_string(cap));
  return residue_table_ring(n, "zmod(" + std::to_string(n) + ")");
}

FiniteRing gf(int64_t p, int64_t k, uint32_t cap) {
  if (!is_prime(p)) fail(Errc::precondition, "gf requires a prime p, got " +
                                                 std::to_string(p));
  if (k < 1) fail(Errc::precondition, "gf requires k >= 1");
  if (cap > kMaxTableCap) cap = kMaxTableCap;
  int64_t q = ipow_capped(p, int(k), int64_t(cap));
  if (q > int64_t(cap))
    fail(Errc::cap_exceeded, "gf(" + std::to_string(p) + "," + std::to_string(k) +
                                 ") exceeds the table cap " + std::to_string(cap));
  std::string desc = k == 1 ? "gf(" + std::to_string(p) + ")"
                            : "gf(" + std::to_string(p) + "," + std::to_string(k) + ")";
  if (k == 1) return residue_table_ring(p, desc);

  // Modulus: first irreducible monic by ascending packed non-leading digits.
  FpPoly modulus;
  int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int64_t v = 0; v < count; ++v) {
    FpPoly cand = monic_from_packed(v, int(k), int(p));
    if (fp_irreducible(cand, int(p))) {
      modulus = cand;
      break;
    }
  }
  if (modulus.empty()) fail(Errc::internal, "no irreducible polynomial found");

  auto unpack = [&](int64_t v) {
    FpPoly out(size_t(k), 0);
    for (int i = 0; i < k; ++i) {
      out[size_t(i)] = int(v % p);
      v /= p;
    }
    return fp_trim(std::move(out));
  };
  auto pack = [&](const FpPoly& a) {
    int64_t v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  };

  const uint32_t n = uint32_t(q);
  std::vector<uint16_t> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> labels(n);
  for (uint32_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    FpPoly a = unpack(i);
    for (uint32_t j = 0; j < n; ++j) {
      FpPoly b = unpack(j);
      FpPoly s(std::max(a.size(), b.size()), 0);
      for (size_t d = 0; d < s.size(); ++d) {
        int va = d < a.size() ? a[d] : 0;
        int vb = d < b.size() ? b[d] : 0;
        s[d] = (va + vb) % int(p);
      }
      add[size_t(i) * n + j] = uint16_t(pack(fp_trim(std::move(s))));
      mul[size_t(i) * n + j] = uint16_t(pack(fp_mod(fp_mul(a, b, int(p)), modulus, int(p))));
    }
  }
  return FiniteRing(std::make_shared<TableRing>(n, std::move(add), std::move(mul),
                                                uint16_t(1), std::move(labels), desc));
}

FiniteRing matrix_ring(int n, const FiniteRing& ring) {
  if (n < 1) fail(Errc::precondition, "matrix_ring requires n >= 1");
  return FiniteRing(std::make_shared<MatrixBackend>(ring, n));
}

FiniteRing upper_triangular(int n, const FiniteRing& ring) {
  if (n < 1) fail(Errc::precondition, "upper_triangular requires n >= 1");
  return FiniteRing(std::make_shared<UpperTriBackend>(ring, n));
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b) {
  return FiniteRing(std::make_shared<ProductBackend>(a, b));
}

FiniteRing trivial_extension(const FiniteRing& ring) {
  return FiniteRing(std::make_shared<TrivExtBackend>(ring));
}

FiniteRing triangular(const FiniteRing& ring) {
  return FiniteRing(std::make_shared<TriangularBackend>(ring));
}

FiniteRing truncated_series(const FiniteRing& ring, int k) {
  if (k < 1) fail(Errc::precondition, "truncated_series requires k >= 1");
  return FiniteRing(std::make_shared<SeriesBackend>(ring, k));
}

FiniteRing corner(const FiniteRing& ring, const Elem& idem, uint32_t cap,
                  std::string desc) {
  if (!ring.contains(idem))
    fail(Errc::element_not_in_ring, "corner: idempotent not in ring");
  const RingBackend& b = ring.backend();
  if (b.mul(idem, idem) != idem)
    fail(Errc::not_idempotent,
         "corner: " + ring.label(idem) + " is not idempotent");
  if (cap > kMaxTableCap) cap = kMaxTableCap;
  if (!ring.size_exact() || ring.size() > cap)
    fail(Errc::cap_exceeded, "corner: ambient " + ring.describe() +
                                 " is above the table cap");

  std::vector<Elem> elems;
  std::unordered_set<Elem, ElemHash> seen;
  for (const Elem& x : ring.elements()) {
    Elem y = b.mul(b.mul(idem, x), idem);
    if (seen.insert(y).second) elems.push_back(std::move(y));
  }
  if (desc.empty())
    desc = "corner(" + ring.describe() + ",e=" + ring.label(idem) + ")";
  return table_from_elements(ring, elems, desc);
}

std::vector<uint16_t> ideal_closure(const FiniteRing& ring,
                                    const std::vector<uint16_t>& gens) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  std::vector<bool> in(n, false);
  std::vector<uint16_t> members;
  auto push = [&](uint16_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  push(0);
  for (uint16_t g : gens) {
    if (g >= n) fail(Errc::bad_argument, "ideal generator index out of range");
    push(g);
  }
  for (size_t i = 0; i < members.size(); ++i) {
    uint16_t x = members[i];
    push(t.negi(x));
    for (uint32_t r = 0; r < n; ++r) {
      push(t.muli(uint16_t(r), x));
      push(t.muli(x, uint16_t(r)));
    }
    for (size_t j = 0; j <= i; ++j) push(t.addi(x, members[j]));
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteRing quotient(const FiniteRing& ring, const std::vector<uint16_t>& ideal_gens,
                    std::string desc) {
  const TableRing& t = ring.table();
  const uint32_t n = t.count();
  std::vector<uint16_t> ideal = ideal_closure(ring, ideal_gens);

  // Ascending scan assigns every coset its least member as representative.
  constexpr uint16_t kUnassigned = 0xffff;
  std::vector<uint16_t> coset_of(n, kUnassigned);
  std::vector<uint16_t> reps;
  for (uint32_t x = 0; x < n; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    uint16_t q = uint16_t(reps.size());
    reps.push_back(uint16_t(x));
    for (uint16_t j : ideal) coset_of[t.addi(uint16_t(x), j)] = q;
  }

  const uint32_t m = uint32_t(reps.size());
  std::vector<uint16_t> add(size_t(m) * m), mul(size_t(m) * m);
  for (uint32_t a = 0; a < m; ++a)
    for (uint32_t b = 0; b < m; ++b) {
      add[size_t(a) * m + b] = coset_of[t.addi(reps[a], reps[b])];
      mul[size_t(a) * m + b] = coset_of[t.muli(reps[a], reps[b])];
    }

  std::vector<std::string> labels(m);
  std::vector<Elem> src(m);
  for (uint32_t i = 0; i < m; ++i) {
    labels[i] = t.label_at(reps[i]);
    src[i] = Elem::of_int(reps[i]);
  }
  if (desc.empty()) {
    desc = "quot(" + ring.describe();
    for (uint16_t g : ideal_gens) desc += ",\"" + t.label_at(g) + "\"";
    desc += ")";
  }
  return FiniteRing(std::make_shared<TableRing>(m, std::move(add), std::move(mul),
                                                coset_of[t.one_index()],
                                                std::move(labels), desc, ring,
                                                std::move(src)));
}

FiniteRing subring_generated(const FiniteRing& ambient, const std::vector<Elem>& gens,
                             uint32_t cap, std::string desc) {
  if (cap > kMaxTableCap) cap = kMaxTableCap;
  const RingBackend& b = ambient.backend();
  std::vector<Elem> elems;
  std::unordered_map<Elem, uint16_t, ElemHash> index;
  auto push = [&](Elem e) {
    if (index.emplace(e, uint16_t(elems.size())).second) {
      elems.push_back(std::move(e));
      if (elems.size() > cap)
        fail(Errc::cap_exceeded,
             "generated subring exceeds the table cap " + std::to_string(cap));
    }
  };
  push(ambient.zero());
  push(ambient.one());
  for (const Elem& g : gens) {
    if (!ambient.contains(g))
      fail(Errc::element_not_in_ring, "subring generator not in ambient ring");
    push(g);
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    Elem x = elems[i];  // copy: elems may reallocate
    push(b.neg(x));
    for (size_t j = 0; j <= i; ++j) {
      Elem y = elems[j];
      push(b.add(x, y));
      push(b.mul(x, y));
      push(b.mul(y, x));
    }
  }
  if (desc.empty())
    desc = "subring(" + ambient.describe() + ",gens=" + std::to_string(gens.size()) + ")";
  return table_from_elements(ambient, elems, desc);
}

Elem series_unit(const FiniteRing& series_ring, int degree) {
  const auto& zero = series_ring.zero();
  std::vector<Elem> parts = zero.as_vec();
  if (degree < 0 || size_t(degree) >= parts.size())
    fail(Errc::bad_argument, "series degree out of range");
  // Replace coefficient at `degree` with the coefficient-ring identity.
  Elem one_part = series_ring.one().as_vec()[0];
  parts[size_t(degree)] = one_part;
  return Elem::of_vec(std::move(parts));
}

Elem matrix_unit(const FiniteRing& mat_ring, int n, int row, int col,
                 const Elem& entry) {
  std::vector<Elem> parts = mat_ring.zero().as_vec();
  parts[size_t(row) * n + col] = entry;
  return Elem::of_vec(std::move(parts));
}

FiniteRing example_ring(ExampleRingId id, int k, uint32_t cap) {
  if (k < 3)
    fail(Errc::precondition,
         "example rings need truncation k >= 3 so degree-2 products survive");
  std::string desc = std::string("paper(") + (id == ExampleRingId::E2 ? "e2" : "e5") +
                     "," + std::to_string(k) + ")";
  if (id == ExampleRingId::E2) {
    FiniteRing coeffs = truncated_series(gf(2), k);
    FiniteRing ambient = matrix_ring(3, coeffs);
    std::vector<Elem> gens;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int d = 1; d < k; ++d)
          gens.push_back(matrix_unit(ambient, 3, i, j, series_unit(coeffs, d)));
    return subring_generated(ambient, gens, cap, desc);
  }
  FiniteRing entries = matrix_ring(2, gf(2));
  FiniteRing ambient = truncated_series(entries, k);
  std::vector<Elem> gens;
  for (int d = 1; d < k; ++d)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::vector<Elem> parts = ambient.zero().as_vec();
        parts[size_t(d)] = matrix_unit(entries, 2, i, j, gf(2).one());
        gens.push_back(Elem::of_vec(std::move(parts)));
      }
  return subring_generated(ambient, gens, cap, desc);
}

}  // namespace ringlab
