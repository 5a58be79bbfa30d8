// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "brute.hpp"
#include "constructions.hpp"
#include "corpus.hpp"
#include "ncpoly.hpp"
#include "report_json.hpp"
#include "structure.hpp"
#include "theorems.hpp"

using namespace ringlab;
using testsupport::build_materialized;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail = "") {
  std::printf("%s  C%-2d %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct CliRun {
  int exit_code = -1;
  std::string stdout_text;
  double elapsed = 0;
};

CliRun run_cli(const std::string& args, const std::string& tag) {
  CliRun out;
  std::string out_path = "/tmp/ringlab_acceptance_" + tag + ".out";
  std::string cmd = std::string("\"") + RINGLAB_CLI_PATH + "\" " + args + " > " +
                    out_path + " 2>/dev/null";
  auto t0 = std::chrono::steady_clock::now();
  int rc = std::system(cmd.c_str());
  out.elapsed = seconds_since(t0);
  out.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  out.stdout_text = buf.str();
  return out;
}

bool suite_check(const ExampleCaseReport& c, const std::string& name) {
  for (const CheckItem& item : c.checks)
    if (item.name == name) return item.pass;
  return false;
}

// --- criteria -------------------------------------------------------------

void criterion_1() {
  CliRun run = run_cli(
      "classify \"m(2,gf(2))\" --target j --deg-f 1 --deg-g 1 --json", "c1");
  bool cli_ok = run.exit_code == 1 && run.elapsed < 1.0;

  // The explicit witness pair revalidates by direct arithmetic.
  FiniteRing m2 = build_materialized("m(2,gf(2))");
  const TableRing& t = m2.table();
  ClassificationReport manual;
  manual.ring_expr = "m(2,gf(2))";
  manual.ring_size = 16;
  manual.target = TargetKind::jac;
  manual.deg_f = 1;
  manual.deg_g = 1;
  SearchWitness w;
  w.f = {*t.index_of_label("[[0,1],[0,0]]"), *t.index_of_label("[[1,0],[0,0]]")};
  w.g = {*t.index_of_label("[[1,1],[0,0]]"), *t.index_of_label("[[0,0],[1,1]]")};
  w.i = 1;
  w.j = 0;
  w.product = *t.index_of_label("[[1,1],[0,0]]");
  manual.witness = w;
  bool witness_ok = verify_certificate(m2, manual) &&
                    jacobson_radical(m2).count() == 1;

  report(1, cli_ok && witness_ok, "M2(F2) counterexample via CLI",
         "exit " + std::to_string(run.exit_code) + " in " +
             std::to_string(run.elapsed) + "s; explicit witness " +
             (witness_ok ? "revalidates" : "FAILS"));
}

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  ExampleSuiteReport rep = run_example_suite("e2", 3);
  double el = seconds_since(t0);
  const ExampleCaseReport& c = rep.cases.at(0);
  bool ok = c.passed && suite_check(c, "size") && suite_check(c, "radical-is-tR") &&
            suite_check(c, "witness-product-zero") &&
            suite_check(c, "products-in-radical") &&
            suite_check(c, "non-nilpotent-product-certificate") &&
            suite_check(c, "quotient-route") && el < 60.0;
  report(2, ok, "E2 reproduction at truncation 3",
         std::to_string(el) + "s");
}

void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  ExampleSuiteReport rep = run_example_suite("e5", 3);
  double el = seconds_since(t0);
  const ExampleCaseReport& c = rep.cases.at(0);
  bool ok = c.passed && suite_check(c, "size") && suite_check(c, "is-local") &&
            suite_check(c, "witness-product-zero") &&
            suite_check(c, "square-non-nilpotent-certificate") && el < 60.0;
  report(3, ok, "E5 reproduction at truncation 3",
         std::to_string(el) + "s");
}

void criterion_4() {
  FiniteRing t2 = build_materialized("t(2,gf(2))");
  AbelianResult ab = is_abelian(t2);
  bool witness_ok =
      !ab.abelian && ab.idem && t2.table().label_at(*ab.idem) == "[[0,0],[0,1]]";
  ClassifyOptions o;
  o.target = TargetKind::jac;
  o.deg_f = 2;
  o.deg_g = 2;
  bool verified = classify(t2, o).verdict == Verdict::verified;
  report(4, witness_ok && verified, "E9: T2(F2) non-central idempotent + verified",
         witness_ok ? "witness e22" : "wrong witness");
}

void criterion_5() {
  int mismatches = 0;
  int count = 0;
  for (const std::string& expr : testsupport::radical_corpus_exprs()) {
    FiniteRing r = build_materialized(expr);
    if (r.size() > 64) continue;
    ++count;
    if (jacobson_radical(r).members != jacobson_radical_oracle(r).members)
      ++mismatches;
  }
  report(5, mismatches == 0 && count >= 25, "radical oracle equivalence",
         std::to_string(count) + " rings, " + std::to_string(mismatches) +
             " discrepancies");
}

void criterion_6() {
  std::vector<FiniteRing> corpus;
  for (const std::string& e : testsupport::radical_corpus_exprs())
    corpus.push_back(build_materialized(e));

  bool ok = true;
  std::string why;

  for (const FiniteRing& r : corpus) {
    const TableRing& t = r.table();
    ElementSet rad = jacobson_radical(r);
    ElementSet us = units(r);
    for (uint16_t j : rad.members) {
      for (uint32_t x = 0; x < t.count() && ok; ++x)
        if (!rad.mask[t.muli(uint16_t(x), j)] || !rad.mask[t.muli(j, uint16_t(x))])
          ok = false, why = "ideal property fails in " + r.describe();
      if (!is_nilpotent(r, Elem::of_int(j)).nilpotent)
        ok = false, why = "non-nil radical member in " + r.describe();
      if (!us.mask[t.addi(t.one_index(), j)])
        ok = false, why = "1+j not a unit in " + r.describe();
    }
    if (jacobson_radical(quotient(r, rad.members)).count() != 1)
      ok = false, why = "J(R/J) nonzero in " + r.describe();
    if (!ok) break;
  }

  // I-PRODJ: radical of a product is the product of the radicals, setwise.
  if (ok) {
    for (size_t i = 0; i < corpus.size() && ok; ++i) {
      ElementSet ra = jacobson_radical(corpus[i]);
      for (size_t j = i; j < corpus.size() && ok; ++j) {
        ElementSet rb = jacobson_radical(corpus[j]);
        FiniteRing p = materialize(direct_product(corpus[i], corpus[j]), 65535);
        ElementSet rp = jacobson_radical(p);
        const TableRing& tp = p.table();
        for (uint32_t x = 0; x < tp.count(); ++x) {
          const auto& parts = tp.source_elem(uint16_t(x)).as_vec();
          bool expect = ra.mask[uint16_t(parts[0].as_int())] &&
                        rb.mask[uint16_t(parts[1].as_int())];
          if (rp.mask[x] != expect) {
            ok = false;
            why = "I-PRODJ fails on " + p.describe();
            break;
          }
        }
      }
    }
  }

  // I-TRIJ: radical of T_n(R) = matrices with all diagonal entries in J(R).
  if (ok) {
    for (const FiniteRing& r : corpus) {
      for (int n = 2; n <= 3; ++n) {
        uint64_t size = 1;
        for (int s = 0; s < n * (n + 1) / 2; ++s) size *= r.size();
        if (size > 4096) continue;
        ElementSet rad_inner = jacobson_radical(r);
        FiniteRing tn = materialize(upper_triangular(n, r), 4096);
        ElementSet rad_tn = jacobson_radical(tn);
        const TableRing& tt = tn.table();
        std::vector<int> diag_slots;
        for (int i = 0, slot = 0; i < n; ++i)
          for (int j = i; j < n; ++j, ++slot)
            if (i == j) diag_slots.push_back(slot);
        for (uint32_t x = 0; x < tt.count(); ++x) {
          const auto& parts = tt.source_elem(uint16_t(x)).as_vec();
          bool expect = true;
          for (int s : diag_slots)
            if (!rad_inner.mask[uint16_t(parts[size_t(s)].as_int())]) expect = false;
          if (rad_tn.mask[x] != expect) {
            ok = false;
            why = "I-TRIJ fails on " + tn.describe();
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  }

  report(6, ok, "radical structure invariants (nil ideal, 1+J, J(R/J), I-PRODJ, I-TRIJ)",
         why);
}

void criterion_7() {
  std::ifstream in(std::string(RINGLAB_DATA_DIR) + "/theorem_corpus.txt");
  std::vector<FiniteRing> corpus;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    corpus.push_back(build_materialized(line.substr(a, b - a + 1)));
  }

  bool ok = corpus.size() >= 8;
  std::string detail;
  for (auto [df, dg] : {std::pair{1, 1}, {2, 2}}) {
    TheoremRun run = check_theorems(corpus, df, dg);
    std::map<TheoremId, int> ran;
    for (const TheoremVerdict& row : run.rows)
      if (!row.skipped) ++ran[row.id];
    bool coverage = true;
    for (TheoremId id : {TheoremId::vquot, TheoremId::vlocal, TheoremId::vprod,
                         TheoremId::vtri, TheoremId::vtn, TheoremId::vtriv,
                         TheoremId::vcorner})
      if (ran[id] == 0) coverage = false;
    if (!run.all_hold || !coverage) ok = false;
    detail += "(" + std::to_string(df) + "," + std::to_string(dg) + "): " +
              std::to_string(run.checked) + " checked, " +
              std::to_string(run.skipped) + " skipped; ";
  }
  report(7, ok, "theorem validators hold at (1,1) and (2,2)", detail);
}

void criterion_8() {
  int runs = 0;
  bool ok = true;
  std::string why;
  for (const std::string& expr : testsupport::radical_corpus_exprs()) {
    FiniteRing r = build_materialized(expr);
    if (r.size() > 8) continue;
    for (TargetKind target : {TargetKind::zero, TargetKind::nil, TargetKind::jac})
      for (auto [df, dg] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        ++runs;
        ClassifyOptions o;
        o.target = target;
        o.deg_f = df;
        o.deg_g = dg;
        ClassificationReport fast = classify(r, o);
        testsupport::BruteOutcome slow =
            testsupport::brute_classify(r, target, df, dg);
        if (fast.verdict != slow.verdict) {
          ok = false;
          why = expr + " verdict mismatch";
        } else if (fast.verdict == Verdict::counterexample &&
                   (!verify_certificate(r, fast) ||
                    fast.witness->f != slow.witness->f ||
                    fast.witness->g != slow.witness->g)) {
          ok = false;
          why = expr + " witness mismatch";
        }
      }
  }
  report(8, ok && runs >= 150, "checker agrees with brute-force enumeration",
         std::to_string(runs) + " comparisons" + (why.empty() ? "" : "; " + why));
}

void criterion_9() {
  bool ok = true;
  std::string why;
  for (const std::string& expr : testsupport::radical_corpus_exprs()) {
    FiniteRing r = build_materialized(expr);
    for (auto [df, dg] : {std::pair{1, 1}, {2, 2}}) {
      ClassifyOptions o;
      o.deg_f = df;
      o.deg_g = dg;
      o.target = TargetKind::zero;
      if (classify(r, o).verdict != Verdict::verified) continue;
      o.target = TargetKind::nil;
      bool nil_ok = classify(r, o).verdict == Verdict::verified;
      o.target = TargetKind::jac;
      bool jac_ok = classify(r, o).verdict == Verdict::verified;
      if (!nil_ok || !jac_ok) {
        ok = false;
        why = expr;
      }
    }
  }
  // Counterexamples persist when either bound grows.
  for (const char* expr : {"m(2,gf(2))", "t(2,gf(2))"}) {
    FiniteRing r = build_materialized(expr);
    for (TargetKind target : {TargetKind::zero, TargetKind::nil, TargetKind::jac}) {
      ClassifyOptions o;
      o.target = target;
      o.deg_f = 1;
      o.deg_g = 1;
      if (classify(r, o).verdict != Verdict::counterexample) continue;
      for (auto [df, dg] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
        o.deg_f = df;
        o.deg_g = dg;
        if (classify(r, o).verdict != Verdict::counterexample) {
          ok = false;
          why = std::string(expr) + " lost its counterexample at larger bounds";
        }
      }
    }
  }
  report(9, ok, "monotonicity across targets and bounds", why);
}

void criterion_10() {
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"classify \"m(2,gf(2))\" --target j --deg-f 1 --deg-g 1 --json", "e7"},
      {"verify-paper --case e2 --truncation 3 --json", "e2"},
      {"verify-paper --case e5 --truncation 3 --json", "e5"},
      {"verify-paper --case e9 --truncation 3 --json", "e9"},
  };
  bool ok = true;
  std::string why;
  for (const auto& [args, tag] : runs) {
    CliRun one = run_cli("--workers 1 " + args, tag + "_w1");
    CliRun eight = run_cli("--workers 8 " + args, tag + "_w8");
    if (one.stdout_text.empty() || one.stdout_text != eight.stdout_text ||
        one.exit_code != eight.exit_code) {
      ok = false;
      why = tag + " differs across worker counts";
    }
  }
  report(10, ok, "byte-identical JSON across 1 and 8 workers", why);
}

}  // namespace

int main() {
  std::printf("ringlab acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d criterion failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
