#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ring.hpp"

namespace ringlab {

// AST of the ring-expression language. The canonical serialization
// (lowercase, no whitespace, quoted quotient labels) is the cache key and
// the replay key for certificates.
struct RingExpr {
  enum class Kind { zmod, gf, mat, tri, prod, trivext, corner, quot, series, paper };

  Kind kind;
  int64_t a = 0;  // modulus / characteristic / dimension / index / truncation
  int64_t b = 0;  // gf extension degree
  std::string paper_id;                                // "e2" | "e5"
  std::vector<std::shared_ptr<const RingExpr>> kids;   // inner expressions
  std::vector<std::string> labels;                     // quotient generators
};

using RingExprPtr = std::shared_ptr<const RingExpr>;

// Recursive-descent parse; parse errors carry the byte offset.
RingExprPtr parse_ring_expr(std::string_view text);

std::string serialize(const RingExpr& expr);

bool expr_equal(const RingExpr& x, const RingExpr& y);

// Builds the ring described by the expression. Composite rings come back
// computed; corner / quot / paper nodes materialize internally (their inner
// rings must fit the cap).
FiniteRing build_ring(const RingExpr& expr, uint32_t cap = kDefaultTableCap);

}  // namespace ringlab
