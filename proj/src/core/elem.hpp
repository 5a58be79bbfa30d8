#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace ringlab {

// Immutable element value. Leaf rings use small integers (residues, table
// indices, packed field elements); composite rings use tuples of components
// (matrix entries row-major, series coefficients by degree, pairs).
class Elem {
 public:
  Elem() = default;

  static Elem of_int(int64_t v) {
    Elem e;
    e.int_ = v;
    return e;
  }

  static Elem of_vec(std::vector<Elem> parts) {
    Elem e;
    e.vec_ = std::make_shared<const std::vector<Elem>>(std::move(parts));
    return e;
  }

  bool is_int() const { return vec_ == nullptr; }
  int64_t as_int() const { return int_; }
  const std::vector<Elem>& as_vec() const { return *vec_; }

  bool operator==(const Elem& o) const {
    if (is_int() != o.is_int()) return false;
    if (is_int()) return int_ == o.int_;
    if (vec_ == o.vec_) return true;
    const auto& a = *vec_;
    const auto& b = *o.vec_;
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }
  bool operator!=(const Elem& o) const { return !(*this == o); }

  // Structural order: ints by value, tuples lexicographic (index 0 most
  // significant). Ints sort before tuples; a well-formed ring never mixes.
  int compare(const Elem& o) const {
    if (is_int() && o.is_int())
      return int_ < o.int_ ? -1 : (int_ == o.int_ ? 0 : 1);
    if (is_int()) return -1;
    if (o.is_int()) return 1;
    const auto& a = *vec_;
    const auto& b = *o.vec_;
    size_t n = a.size() < b.size() ? a.size() : b.size();
    for (size_t i = 0; i < n; ++i) {
      int c = a[i].compare(b[i]);
      if (c != 0) return c;
    }
    return a.size() < b.size() ? -1 : (a.size() == b.size() ? 0 : 1);
  }
  bool operator<(const Elem& o) const { return compare(o) < 0; }

  uint64_t hash() const {
    if (is_int()) return mix(0x9e3779b97f4a7c15ull, uint64_t(int_));
    uint64_t h = 0xcbf29ce484222325ull;
    for (const Elem& p : *vec_) h = mix(h, p.hash());
    return mix(h, uint64_t(vec_->size()));
  }

 private:
  static uint64_t mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0x100000001b3ull;
    return h;
  }

  int64_t int_ = 0;
  std::shared_ptr<const std::vector<Elem>> vec_;
};

struct ElemHash {
  size_t operator()(const Elem& e) const { return size_t(e.hash()); }
};

}  // namespace ringlab
