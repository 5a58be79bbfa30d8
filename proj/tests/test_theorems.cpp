#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "constructions.hpp"
#include "corpus.hpp"
#include "structure.hpp"
#include "theorems.hpp"

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

}  // namespace

TEST_CASE("product validator on a named pair") {
  TheoremVerdict v = validate_prod(zmod(4), gf(2), 1, 1);
  CHECK(v.holds);
  CHECK_FALSE(v.vacuous);
  REQUIRE(v.details.size() == 3);
  for (const auto& d : v.details) CHECK(d.verdict == Verdict::verified);
}

TEST_CASE("local validator") {
  TheoremVerdict v = validate_local(zmod(4), 2, 2);
  CHECK(v.holds);
  CHECK_FALSE(v.vacuous);

  TheoremVerdict w = validate_local(build_materialized("m(2,gf(2))"), 1, 1);
  CHECK(w.holds);
  CHECK(w.vacuous);  // not local, hypothesis empty
}

TEST_CASE("T_n validator at n = 2 on the base field") {
  TheoremVerdict v = validate_tn(gf(2), 2, 2, 2);
  CHECK(v.holds);
  TheoremVerdict v3 = validate_tn(gf(2), 3, 2, 2);
  CHECK(v3.holds);
}

TEST_CASE("triangular and trivial-extension validators") {
  CHECK(validate_tri(gf(2), 2, 2).holds);
  CHECK(validate_tri(zmod(4), 2, 2).holds);
  CHECK(validate_triv(zmod(4), 2, 2).holds);
}

TEST_CASE("quotient-route validator with the radical ideal") {
  FiniteRing z4 = zmod(4);
  ElementSet rad = jacobson_radical(z4);
  TheoremVerdict v = validate_quot(z4, rad.members, 2, 2);
  CHECK(v.holds);
  CHECK_FALSE(v.vacuous);

  // An ideal not inside the radical leaves the hypothesis empty.
  TheoremVerdict w = validate_quot(zmod(6), {3}, 1, 1);
  CHECK(w.holds);
  CHECK(w.vacuous);
}

TEST_CASE("corner validator gates the converse on abelianness") {
  FiniteRing m2 = build_materialized("m(2,gf(2))");
  const TableRing& t = m2.table();
  uint16_t e11 = *t.index_of_label("[[1,0],[0,0]]");
  TheoremVerdict v = validate_corner(m2, e11, 1, 1);
  CHECK(v.holds);
  CHECK(v.vacuous);  // M2(F2) already fails at (1,1); converse skipped
  CHECK(v.note.find("not abelian") != std::string::npos);

  // On a commutative ring both directions run.
  FiniteRing z6 = zmod(6);
  uint16_t e3 = *z6.table().index_of_label("3");
  REQUIRE(z6.table().muli(e3, e3) == e3);
  TheoremVerdict w = validate_corner(z6, e3, 2, 2);
  CHECK(w.holds);
  CHECK_FALSE(w.vacuous);
}

TEST_CASE("the full driver holds on the bundled corpus at (1,1)") {
  std::vector<FiniteRing> corpus;
  for (const char* e : {"zmod(2)", "zmod(4)", "gf(2,2)", "t(2,gf(2))"})
    corpus.push_back(build_materialized(e));
  TheoremRun run = check_theorems(corpus, 1, 1);
  CHECK(run.all_hold);
  CHECK(run.checked > 20);
  for (const TheoremVerdict& row : run.rows) {
    INFO(to_string(row.id), " ", row.instance, " ", row.note);
    CHECK((row.skipped || row.holds));
  }
}

TEST_CASE("over-budget instances are skipped, not failed") {
  std::vector<FiniteRing> corpus = {build_materialized("m(2,gf(2))")};
  TheoremRun run = check_theorems(corpus, 2, 2);
  CHECK(run.all_hold);
  CHECK(run.skipped > 0);
  bool tri_skipped = false;
  for (const TheoremVerdict& row : run.rows)
    if (row.id == TheoremId::vtri && row.skipped) tri_skipped = true;
  CHECK(tri_skipped);
}

TEST_CASE("example suite case E7") {
  ExampleSuiteReport rep = run_example_suite("e7", 3);
  REQUIRE(rep.cases.size() == 1);
  CHECK(rep.cases[0].passed);
  CHECK(rep.all_passed);
}

TEST_CASE("example suite case E9") {
  ExampleSuiteReport rep = run_example_suite("e9", 3);
  REQUIRE(rep.cases.size() == 1);
  for (const CheckItem& c : rep.cases[0].checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("example suite rejects truncation 2 and unknown cases") {
  CHECK(thrown_code([] { run_example_suite("all", 2); }) == Errc::precondition);
  CHECK(thrown_code([] { run_example_suite("e3", 3); }) == Errc::bad_argument);
}
