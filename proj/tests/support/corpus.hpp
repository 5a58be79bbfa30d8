#pragma once

#include <string>
#include <vector>

#include "expr.hpp"

namespace ringlab::testsupport {

// The structural test corpus: residue rings up to 16, fields up to order 9,
// the 2x2 triangular/full matrix rings over F2, a trivial extension, and
// quotients of those. Everything is size <= 16 and oracle-checkable.
inline std::vector<std::string> radical_corpus_exprs() {
  std::vector<std::string> v;
  for (int n = 2; n <= 16; ++n) v.push_back("zmod(" + std::to_string(n) + ")");
  for (const char* f : {"gf(2)", "gf(3)", "gf(2,2)", "gf(5)", "gf(7)", "gf(2,3)",
                        "gf(3,2)"})
    v.push_back(f);
  v.push_back("t(2,gf(2))");
  v.push_back("m(2,gf(2))");
  v.push_back("trivext(zmod(4))");
  v.push_back("quot(zmod(12),\"6\")");
  v.push_back("quot(zmod(16),\"4\")");
  v.push_back("quot(t(2,gf(2)),\"[[0,1],[0,0]]\")");
  v.push_back("quot(m(2,gf(2)),\"[[1,0],[0,1]]\")");
  v.push_back("quot(trivext(zmod(4)),\"(0,1)\")");
  return v;
}

inline FiniteRing build_materialized(const std::string& text) {
  return materialize(build_ring(*parse_ring_expr(text)));
}

inline std::vector<FiniteRing> build_corpus(const std::vector<std::string>& exprs) {
  std::vector<FiniteRing> out;
  out.reserve(exprs.size());
  for (const std::string& e : exprs) out.push_back(build_materialized(e));
  return out;
}

// Index of an ambient element inside a table ring built from it.
inline uint16_t source_index_of(const TableRing& t, const Elem& ambient_elem) {
  for (uint32_t i = 0; i < t.count(); ++i)
    if (t.source_elem(uint16_t(i)) == ambient_elem) return uint16_t(i);
  throw std::runtime_error("ambient element not in table ring");
}

}  // namespace ringlab::testsupport
