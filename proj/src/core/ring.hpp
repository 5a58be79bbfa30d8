#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "elem.hpp"
#include "error.hpp"

namespace ringlab {

// Largest element count a ring may be materialized at. Indices are stored as
// 16-bit values both in memory and in the table cache file format.
constexpr uint32_t kDefaultTableCap = 4096;
constexpr uint32_t kMaxTableCap = 65535;

// Computed rings beyond this size refuse element enumeration outright;
// callers must carve out a generated subring first.
constexpr uint64_t kEnumLimit = 1ull << 22;

class FiniteRing;
struct SeriesShape;
struct MatrixShape;

// Arithmetic provider for one ring. Implementations are immutable after
// construction and safe to share across threads.
class RingBackend {
 public:
  virtual ~RingBackend() = default;

  // Element count; saturated at UINT64_MAX when the true count overflows.
  virtual uint64_t size() const = 0;
  virtual bool size_exact() const { return true; }

  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(const Elem& x, const Elem& y) const = 0;
  virtual Elem neg(const Elem& x) const = 0;
  virtual Elem mul(const Elem& x, const Elem& y) const = 0;

  // Structural membership: does this value denote an element of the ring?
  virtual bool contains(const Elem& x) const = 0;

  virtual bool enumerable() const = 0;
  virtual Elem element_at(uint64_t ordinal) const;
  virtual uint64_t ordinal_of(const Elem& x) const;

  virtual std::string label(const Elem& x) const = 0;

  // Construction description; doubles as the canonical expression for
  // DSL-expressible rings.
  virtual std::string describe() const = 0;

  // Structural introspection for series-aware analyses.
  virtual std::optional<SeriesShape> series_shape() const;
  virtual std::optional<MatrixShape> matrix_shape() const;
};

class TableRing;

// Value handle on a ring. Copies share the backend.
class FiniteRing {
 public:
  FiniteRing() = default;
  explicit FiniteRing(std::shared_ptr<const RingBackend> backend)
      : backend_(std::move(backend)) {}

  bool valid() const { return backend_ != nullptr; }
  const RingBackend& backend() const { return *backend_; }
  bool same_ring(const FiniteRing& o) const { return backend_ == o.backend_; }

  uint64_t size() const { return backend_->size(); }
  bool size_exact() const { return backend_->size_exact(); }
  Elem zero() const { return backend_->zero(); }
  Elem one() const { return backend_->one(); }

  // Checked arithmetic: operands must structurally belong to this ring.
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;

  bool contains(const Elem& x) const { return backend_->contains(x); }
  bool is_zero(const Elem& x) const { return x == backend_->zero(); }

  bool enumerable() const { return backend_->enumerable(); }
  // All elements in element order; the first one is zero.
  std::vector<Elem> elements() const;
  Elem element_at(uint64_t ordinal) const { return backend_->element_at(ordinal); }

  std::string label(const Elem& x) const { return backend_->label(x); }
  std::string describe() const { return backend_->describe(); }

  bool is_table() const;
  // Table view; throws precondition error when the ring is not table-backed.
  const TableRing& table() const;
  const TableRing* table_if() const;

 private:
  std::shared_ptr<const RingBackend> backend_;
};

// Cayley-table ring: all arithmetic resolved through size x size lookup
// tables over canonical element indices. Index 0 is always the zero element.
class TableRing final : public RingBackend {
 public:
  TableRing(uint32_t n, std::vector<uint16_t> add_table,
            std::vector<uint16_t> mul_table, uint16_t one_index,
            std::vector<std::string> labels, std::string description,
            FiniteRing source = {}, std::vector<Elem> source_elems = {});

  uint64_t size() const override { return n_; }
  Elem zero() const override { return Elem::of_int(0); }
  Elem one() const override { return Elem::of_int(one_); }
  Elem add(const Elem& x, const Elem& y) const override {
    return Elem::of_int(addi(idx(x), idx(y)));
  }
  Elem neg(const Elem& x) const override { return Elem::of_int(negi(idx(x))); }
  Elem mul(const Elem& x, const Elem& y) const override {
    return Elem::of_int(muli(idx(x), idx(y)));
  }
  bool contains(const Elem& x) const override {
    return x.is_int() && x.as_int() >= 0 && uint64_t(x.as_int()) < n_;
  }
  bool enumerable() const override { return true; }
  Elem element_at(uint64_t ordinal) const override;
  uint64_t ordinal_of(const Elem& x) const override;
  std::string label(const Elem& x) const override { return labels_[idx(x)]; }
  std::string describe() const override { return description_; }

  // Raw index arithmetic, the hot path for scans and searches.
  uint32_t count() const { return n_; }
  uint16_t addi(uint16_t a, uint16_t b) const { return add_[size_t(a) * n_ + b]; }
  uint16_t muli(uint16_t a, uint16_t b) const { return mul_[size_t(a) * n_ + b]; }
  uint16_t negi(uint16_t a) const { return neg_[a]; }
  uint16_t subi(uint16_t a, uint16_t b) const { return addi(a, negi(b)); }
  uint16_t one_index() const { return one_; }
  const std::string& label_at(uint16_t i) const { return labels_[i]; }

  // Index of the element carrying this label, if any.
  std::optional<uint16_t> index_of_label(const std::string& label) const;

  // Provenance: the ring this table was materialized from, with the ambient
  // encoding of each index. Empty for rings loaded from the table cache.
  bool has_source() const { return source_.valid(); }
  const FiniteRing& source_ring() const { return source_; }
  const Elem& source_elem(uint16_t i) const { return source_elems_[i]; }

 private:
  uint16_t idx(const Elem& x) const { return uint16_t(x.as_int()); }

  uint32_t n_;
  std::vector<uint16_t> add_, mul_, neg_;
  uint16_t one_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, uint16_t> label_index_;
  std::string description_;
  FiniteRing source_;
  std::vector<Elem> source_elems_;
};

// Materializes an enumerable ring of size <= cap into a table ring.
// Already table-backed rings are returned unchanged.
FiniteRing materialize(const FiniteRing& ring, uint32_t cap = kDefaultTableCap);

// Builds a table ring from an explicit element list (closure results).
// elems[0] must be the zero element; arithmetic must be closed on the list.
FiniteRing table_from_elements(const FiniteRing& ambient,
                               const std::vector<Elem>& elems,
                               const std::string& description);

// Shape of a truncated-series ring: coefficient vectors of length truncation.
struct SeriesShape {
  FiniteRing coeff_ring;
  int truncation;
};

// Shape of a (possibly upper-triangular) matrix ring over an entry ring.
struct MatrixShape {
  FiniteRing entry_ring;
  int n;
  bool upper_only;
};

struct AxiomCheckResult {
  bool ok = true;
  std::string detail;  // first violated law, with operands
};

// Ring-law self test: associativity, commutative addition, identities,
// inverses, distributivity. Exhaustive over all triples up to
// exhaustive_limit elements, deterministic sampling above.
AxiomCheckResult check_ring_axioms(const FiniteRing& ring,
                                   uint32_t exhaustive_limit = 256,
                                   uint64_t samples = 100000);

}  // namespace ringlab
