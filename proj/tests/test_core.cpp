#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "constructions.hpp"
#include "corpus.hpp"

using namespace ringlab;

namespace {

template <typename Fn>
std::optional<Errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const RingError& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("element values compare structurally") {
  Elem a = Elem::of_int(3);
  Elem b = Elem::of_int(3);
  Elem c = Elem::of_int(4);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.compare(c) < 0);
  Elem v1 = Elem::of_vec({a, c});
  Elem v2 = Elem::of_vec({a, c});
  Elem v3 = Elem::of_vec({c, a});
  CHECK(v1 == v2);
  CHECK(v1.hash() == v2.hash());
  CHECK(v1 != v3);
  CHECK(v1.compare(v3) < 0);
}

TEST_CASE("zmod arithmetic and enumeration") {
  FiniteRing z4 = zmod(4);
  CHECK(z4.size() == 4);
  CHECK(z4.add(Elem::of_int(3), Elem::of_int(3)) == Elem::of_int(2));
  CHECK(z4.mul(Elem::of_int(2), Elem::of_int(2)) == Elem::of_int(0));

  std::vector<Elem> elems = z4.elements();
  REQUIRE(elems.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(elems[size_t(i)] == Elem::of_int(i));
  CHECK(z4.label(Elem::of_int(3)) == "3");

  CHECK(thrown_code([] { zmod(1); }) == Errc::precondition);
  CHECK(thrown_code([] { zmod(-5); }) == Errc::precondition);
}

TEST_CASE("zmod(2) is a field") {
  FiniteRing z2 = zmod(2);
  CHECK(z2.mul(Elem::of_int(1), Elem::of_int(1)) == Elem::of_int(1));
  CHECK(check_ring_axioms(z2).ok);
}

TEST_CASE("gf builds the smallest irreducible modulus") {
  // gf(2,2): x^2 = x + 1, so 2 * 2 = 3 in packed labels.
  FiniteRing f4 = gf(2, 2);
  CHECK(f4.size() == 4);
  CHECK(f4.mul(Elem::of_int(2), Elem::of_int(2)) == Elem::of_int(3));

  // gf(3,2): x^2 + 1 is the first irreducible, so x * x = -1 = 2.
  FiniteRing f9 = gf(3, 2);
  CHECK(f9.size() == 9);
  CHECK(f9.mul(Elem::of_int(3), Elem::of_int(3)) == Elem::of_int(2));

  CHECK(thrown_code([] { gf(4); }) == Errc::precondition);
  CHECK(thrown_code([] { gf(6, 2); }) == Errc::precondition);
}

TEST_CASE("matrix units multiply by the composition rule") {
  FiniteRing m2 = matrix_ring(2, gf(2));
  Elem e12 = matrix_unit(m2, 2, 0, 1, Elem::of_int(1));
  Elem e21 = matrix_unit(m2, 2, 1, 0, Elem::of_int(1));
  Elem e11 = matrix_unit(m2, 2, 0, 0, Elem::of_int(1));
  Elem e22 = matrix_unit(m2, 2, 1, 1, Elem::of_int(1));
  CHECK(m2.mul(e12, e21) == e11);
  CHECK(m2.mul(e21, e12) == e22);
  CHECK(m2.mul(e12, e12) == m2.zero());
  CHECK(m2.label(e12) == "[[0,1],[0,0]]");
}

TEST_CASE("materialize produces faithful tables") {
  FiniteRing z6 = materialize(zmod(6), 4096);
  CHECK(z6.size() == 6);
  CHECK(z6.is_table());

  FiniteRing t2 = materialize(upper_triangular(2, gf(2)), 4096);
  CHECK(t2.size() == 8);

  // Sampled agreement between table lookups and computed arithmetic.
  FiniteRing computed = upper_triangular(2, gf(2));
  const TableRing& tab = t2.table();
  std::mt19937_64 rng(7);
  for (int s = 0; s < 10000; ++s) {
    uint16_t i = uint16_t(rng() % 8), j = uint16_t(rng() % 8);
    Elem x = computed.element_at(i), y = computed.element_at(j);
    CHECK(computed.backend().ordinal_of(computed.mul(x, y)) ==
          tab.muli(i, j));
    CHECK(computed.backend().ordinal_of(computed.add(x, y)) ==
          tab.addi(i, j));
  }
}

TEST_CASE("materialize refuses oversized rings with the exact size") {
  FiniteRing big = matrix_ring(3, truncated_series(gf(2), 3));
  CHECK(big.size() == (1ull << 27));
  CHECK(thrown_code([&] { materialize(big, 4096); }) == Errc::cap_exceeded);
  CHECK(thrown_code([&] { big.elements(); }) == Errc::enumeration_unavailable);
  // Arithmetic still works on the computed backend.
  CHECK(big.mul(big.one(), big.one()) == big.one());
}

TEST_CASE("ring axioms hold on every constructed ring") {
  for (const char* expr :
       {"zmod(4)", "zmod(12)", "gf(2,2)", "gf(3,2)", "m(2,gf(2))", "t(2,gf(2))",
        "trivext(zmod(4))", "series(gf(2),3)", "prod(zmod(4),gf(2))",
        "quot(zmod(12),\"6\")", "corner(m(2,gf(2)),1)"}) {
    FiniteRing r = testsupport::build_materialized(expr);
    AxiomCheckResult res = check_ring_axioms(r);
    INFO(expr, ": ", res.detail);
    CHECK(res.ok);
  }
  CHECK(check_ring_axioms(triangular(zmod(4))).ok);
}

TEST_CASE("identities and inverses hold exhaustively") {
  for (const char* expr : {"zmod(16)", "m(2,gf(2))", "trivext(zmod(4))"}) {
    FiniteRing r = testsupport::build_materialized(expr);
    const TableRing& t = r.table();
    for (uint32_t x = 0; x < t.count(); ++x) {
      CHECK(t.muli(t.one_index(), uint16_t(x)) == x);
      CHECK(t.muli(uint16_t(x), t.one_index()) == x);
      CHECK(t.addi(uint16_t(x), t.negi(uint16_t(x))) == 0);
    }
  }
}

TEST_CASE("element order starts at zero and is deterministic") {
  for (const char* expr : {"zmod(6)", "t(2,gf(2))", "paper(e5,3)"}) {
    FiniteRing a = testsupport::build_materialized(expr);
    FiniteRing b = testsupport::build_materialized(expr);
    REQUIRE(a.size() == b.size());
    const TableRing& ta = a.table();
    const TableRing& tb = b.table();
    CHECK(ta.label_at(0) == tb.label_at(0));
    CHECK(a.is_zero(a.element_at(0)));
    for (uint32_t i = 0; i < ta.count(); ++i)
      CHECK(ta.label_at(uint16_t(i)) == tb.label_at(uint16_t(i)));
  }
}

TEST_CASE("mixed-ring arithmetic is a hard error") {
  FiniteRing z4 = zmod(4);
  FiniteRing m2 = matrix_ring(2, gf(2));
  Elem mat = m2.one();
  CHECK(thrown_code([&] { z4.add(Elem::of_int(1), mat); }) ==
        Errc::element_not_in_ring);
  CHECK(thrown_code([&] { z4.mul(Elem::of_int(7), Elem::of_int(1)); }) ==
        Errc::element_not_in_ring);
  CHECK(thrown_code([&] { m2.neg(Elem::of_int(0)); }) ==
        Errc::element_not_in_ring);
}

TEST_CASE("computed rings answer size without enumeration") {
  FiniteRing huge = matrix_ring(2, zmod(4096));
  CHECK(huge.size_exact());
  CHECK(huge.size() == 4096ull * 4096 * 4096 * 4096);
  CHECK_FALSE(huge.enumerable());
}
