#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "constructions.hpp"
#include "corpus.hpp"
#include "structure.hpp"

using namespace ringlab;
using testsupport::build_materialized;

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

std::set<std::string> member_labels(const ElementSet& s) {
  std::set<std::string> out;
  const TableRing& t = s.ring.table();
  for (uint16_t m : s.members) out.insert(t.label_at(m));
  return out;
}

}  // namespace

TEST_CASE("nilpotency power scan") {
  FiniteRing z4 = zmod(4);
  NilpotencyResult r = is_nilpotent(z4, Elem::of_int(2));
  CHECK(r.nilpotent);
  CHECK(r.index == 2);
  CHECK_FALSE(is_nilpotent(z4, Elem::of_int(1)).nilpotent);
  CHECK(is_nilpotent(z4, Elem::of_int(0)).index == 1);

  FiniteRing m2 = matrix_ring(2, gf(2));
  Elem e12 = matrix_unit(m2, 2, 0, 1, Elem::of_int(1));
  Elem e11 = matrix_unit(m2, 2, 0, 0, Elem::of_int(1));
  CHECK(is_nilpotent(m2, e12).index == 2);
  CHECK_FALSE(is_nilpotent(m2, e11).nilpotent);  // idempotent repeat
}

TEST_CASE("structural scans match hand counts") {
  CHECK(member_labels(nilpotents(zmod(12))) == std::set<std::string>{"0", "6"});
  CHECK(units(gf(2, 2)).count() == 3);
  CHECK(units(gf(3, 2)).count() == 8);
  CHECK(idempotents(build_materialized("t(2,gf(2))")).count() == 6);
  CHECK(member_labels(center(build_materialized("m(2,gf(2))"))) ==
        std::set<std::string>{"[[0,0],[0,0]]", "[[1,0],[0,1]]"});
  CHECK(member_labels(nilpotents(build_materialized("m(2,gf(2))"))) ==
        std::set<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[1,0]]",
                              "[[1,1],[1,1]]"});
}

TEST_CASE("radical by quasi-regularity") {
  CHECK(member_labels(jacobson_radical(zmod(12))) ==
        std::set<std::string>{"0", "6"});
  CHECK(jacobson_radical(build_materialized("m(2,gf(2))")).count() == 1);
  CHECK(member_labels(jacobson_radical(build_materialized("t(2,gf(2))"))) ==
        std::set<std::string>{"[[0,0],[0,0]]", "[[0,1],[0,0]]"});
  CHECK(jacobson_radical(build_materialized("series(gf(2),3)")).count() == 4);
  CHECK(jacobson_radical(materialize(triangular(gf(2)))).count() == 2);
}

TEST_CASE("radical of the trivial extension contains J(R) x R") {
  FiniteRing t = build_materialized("trivext(zmod(4))");
  ElementSet rad = jacobson_radical(t);
  const TableRing& tab = t.table();
  for (int j : {0, 2})
    for (int m = 0; m < 4; ++m) {
      auto idx = tab.index_of_label("(" + std::to_string(j) + "," +
                                    std::to_string(m) + ")");
      REQUIRE(idx.has_value());
      CHECK(rad.mask[*idx]);
    }
  CHECK(rad.count() == 8);
}

TEST_CASE("radical oracle on the definitional route") {
  CHECK(member_labels(jacobson_radical_oracle(zmod(4))) ==
        std::set<std::string>{"0", "2"});
  CHECK(jacobson_radical_oracle(gf(2, 2)).count() == 1);
  CHECK(jacobson_radical_oracle(zmod(6)).count() == 1);
  // Size 64 still fits the oracle; size 125 does not.
  CHECK(jacobson_radical_oracle(materialize(triangular(zmod(4)))).count() == 16);
  CHECK(thrown_code([] {
    jacobson_radical_oracle(materialize(triangular(zmod(5))));
  }) == Errc::cap_exceeded);
}

TEST_CASE("both radical algorithms agree on the whole corpus") {
  for (const std::string& expr : testsupport::radical_corpus_exprs()) {
    FiniteRing r = build_materialized(expr);
    REQUIRE(r.size() <= 64);
    INFO(expr);
    CHECK(jacobson_radical(r).members == jacobson_radical_oracle(r).members);
  }
}

TEST_CASE("radical structure invariants across the corpus") {
  for (const std::string& expr : testsupport::radical_corpus_exprs()) {
    INFO(expr);
    FiniteRing r = build_materialized(expr);
    const TableRing& t = r.table();
    ElementSet rad = jacobson_radical(r);
    ElementSet us = units(r);

    for (uint16_t j : rad.members) {
      // Two-sided ideal, nil, and 1 + j invertible.
      for (uint32_t x = 0; x < t.count(); ++x) {
        CHECK(rad.mask[t.muli(uint16_t(x), j)]);
        CHECK(rad.mask[t.muli(j, uint16_t(x))]);
      }
      for (uint16_t j2 : rad.members) CHECK(rad.mask[t.addi(j, j2)]);
      CHECK(is_nilpotent(r, Elem::of_int(j)).nilpotent);
      CHECK(us.mask[t.addi(t.one_index(), j)]);
    }

    FiniteRing q = quotient(r, rad.members);
    CHECK(jacobson_radical(q).count() == 1);  // J(R/J) = 0
  }
}

TEST_CASE("product radical is the product of radicals") {
  // The identity behind V-PROD, checked setwise on a named pair.
  FiniteRing a = zmod(4);
  FiniteRing b = gf(2);
  FiniteRing p = materialize(direct_product(a, b));
  ElementSet rp = jacobson_radical(p);
  CHECK(member_labels(rp) == std::set<std::string>{"(0,0)", "(2,0)"});
}

TEST_CASE("locality") {
  CHECK(is_local(zmod(4)).local);
  CHECK(is_local(gf(3, 2)).local);
  LocalResult z6 = is_local(zmod(6));
  CHECK_FALSE(z6.local);
  REQUIRE(z6.witness.has_value());
  CHECK(*z6.witness == 2);  // first non-unit outside the radical
  CHECK(is_local(build_materialized("series(gf(2),3)")).local);
  CHECK_FALSE(is_local(build_materialized("m(2,gf(2))")).local);
}

TEST_CASE("abelian test returns the first violation in element order") {
  FiniteRing t2 = build_materialized("t(2,gf(2))");
  AbelianResult r = is_abelian(t2);
  REQUIRE_FALSE(r.abelian);
  CHECK(t2.table().label_at(*r.idem) == "[[0,0],[0,1]]");
  CHECK(t2.table().label_at(*r.other) == "[[0,1],[0,0]]");

  CHECK(is_abelian(zmod(12)).abelian);

  FiniteRing m2 = build_materialized("m(2,gf(2))");
  AbelianResult rm = is_abelian(m2);
  REQUIRE_FALSE(rm.abelian);
  CHECK(m2.table().label_at(*rm.idem) == "[[0,0],[0,1]]");
  CHECK(m2.table().label_at(*rm.other) == "[[0,0],[1,0]]");
}

TEST_CASE("series non-nilpotency certificates") {
  FiniteRing entries = matrix_ring(2, gf(2));
  FiniteRing amb5 = truncated_series(entries, 3);

  auto series_elem = [&](int degree, int i, int j) {
    std::vector<Elem> parts = amb5.zero().as_vec();
    parts[size_t(degree)] = matrix_unit(entries, 2, i, j, Elem::of_int(1));
    return Elem::of_vec(std::move(parts));
  };

  SUBCASE("idempotent leading coefficient certifies") {
    auto cert = series_nonnilpotency_certificate(amb5, series_elem(1, 0, 0));
    REQUIRE(cert.has_value());
    CHECK(cert->lowest_degree == 1);
    CHECK(cert->leading_coeff_label == "[[1,0],[0,0]]");
    CHECK(cert->witness_exponent_checked >= 1);
    CHECK(revalidate_certificate(*cert));
  }
  SUBCASE("nilpotent leading coefficient is inconclusive") {
    CHECK_FALSE(series_nonnilpotency_certificate(amb5, series_elem(1, 0, 1))
                    .has_value());
  }
  SUBCASE("zero element violates the precondition") {
    CHECK(thrown_code([&] {
      series_nonnilpotency_certificate(amb5, amb5.zero());
    }) == Errc::precondition);
  }
  SUBCASE("non-series rings are rejected") {
    CHECK(thrown_code([&] {
      series_nonnilpotency_certificate(zmod(4), Elem::of_int(2));
    }) == Errc::bad_argument);
  }

  SUBCASE("matrix-over-series elements decompose by degree") {
    FiniteRing coeffs = truncated_series(gf(2), 3);
    FiniteRing amb2 = matrix_ring(3, coeffs);
    // t^2 * (e11 + e12): leading coefficient e11 + e12 is idempotent.
    Elem x = amb2.add(matrix_unit(amb2, 3, 0, 0, series_unit(coeffs, 2)),
                      matrix_unit(amb2, 3, 0, 1, series_unit(coeffs, 2)));
    auto cert = series_nonnilpotency_certificate(amb2, x);
    REQUIRE(cert.has_value());
    CHECK(cert->lowest_degree == 2);
    CHECK(cert->leading_coeff_label == "[[1,1,0],[0,0,0],[0,0,0]]");
    // t^2 * e12 alone: nilpotent leading coefficient, one-sided criterion.
    CHECK_FALSE(series_nonnilpotency_certificate(
                    amb2, matrix_unit(amb2, 3, 0, 1, series_unit(coeffs, 2)))
                    .has_value());
  }

  SUBCASE("table rings delegate to their ambient encoding") {
    FiniteRing s = materialize(truncated_series(gf(2), 3));
    const TableRing& t = s.table();
    auto t_idx = t.index_of_label("t");
    REQUIRE(t_idx.has_value());
    auto cert = series_nonnilpotency_certificate(s, Elem::of_int(*t_idx));
    REQUIRE(cert.has_value());
    CHECK(cert->lowest_degree == 1);
  }
}
