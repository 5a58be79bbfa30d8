// ringlab command-line front end. All computation goes through the C API in
// ringlab.h; this file only parses arguments, renders JSON documents as text,
// and maps results to exit codes:
//   0 verified / holds / true     1 counterexample / witness found
//   2 unknown (sampled)           3 precondition or budget error
//   4 parse error

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "ringlab.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitWitness = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;
constexpr int kExitParse = 4;

struct CtxDeleter {
  void operator()(ringlab_ctx* c) const { ringlab_ctx_free(c); }
};
struct RingDeleter {
  void operator()(ringlab_ring* r) const { ringlab_ring_free(r); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ringlab_string_free(s);
  return out;
}

int exit_for_status(ringlab_status st) {
  return st == RINGLAB_ERR_PARSE ? kExitParse : kExitError;
}

int report_error(const ringlab_ctx* ctx, ringlab_status st) {
  std::cerr << "error: " << ringlab_ctx_last_error(ctx) << "\n";
  return exit_for_status(st);
}

std::string poly_text(const json& labels) {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    std::string lbl = labels[i].get<std::string>();
    if (lbl.find('+') != std::string::npos || lbl.find(',') != std::string::npos)
      lbl = "(" + lbl + ")";
    if (!out.empty()) out += " + ";
    out += lbl;
    if (i == 1)
      out += "*x";
    else if (i > 1)
      out += "*x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void print_members(const json& doc) {
  std::cout << doc["kind"].get<std::string>() << " of " << doc["ring_expr"].get<std::string>()
            << ": " << doc["count"].get<uint64_t>() << " element(s)\n";
  for (const auto& m : doc["members"]) std::cout << "  " << m.get<std::string>() << "\n";
}

void print_classification(const json& doc) {
  const auto& p = doc["parameters"];
  std::cout << "ring    : " << doc["ring_expr"].get<std::string>() << "  (size "
            << doc["ring_size"].get<uint64_t>() << ")\n";
  std::cout << "target  : " << p["target"].get<std::string>() << "  (target set size "
            << doc["stats"]["target_size"].get<uint64_t>() << ")\n";
  std::cout << "bounds  : deg f <= " << p["deg_f"].get<int>() << ", deg g <= "
            << p["deg_g"].get<int>() << "\n";
  std::cout << "mode    : " << p["mode"].get<std::string>();
  if (p.contains("trials")) std::cout << "  (" << p["trials"].get<uint64_t>() << " trials)";
  std::cout << "\n";
  std::cout << "verdict : " << doc["verdict"].get<std::string>() << "\n";
  if (doc.contains("witness")) {
    const auto& w = doc["witness"];
    std::cout << "witness : f = " << poly_text(w["f"]) << "\n";
    std::cout << "          g = " << poly_text(w["g"]) << "\n";
    std::cout << "          offending (i,j) = (" << w["i"].get<int>() << ","
              << w["j"].get<int>() << "), a_i*b_j = " << w["product"].get<std::string>()
              << " outside the target set\n";
  }
  std::cout << "pairs examined: " << doc["stats"]["pairs_examined"].get<uint64_t>()
            << "\n";
}

void print_theorems(const json& doc) {
  for (const auto& row : doc["results"]) {
    std::string status = row["status"].get<std::string>();
    std::cout << (status == "holds" ? "  ok " : (status == "skipped" ? "skip " : "FAIL "))
              << row["theorem"].get<std::string>() << "  "
              << row["instance"].get<std::string>();
    if (row.contains("note")) std::cout << "  [" << row["note"].get<std::string>() << "]";
    std::cout << "\n";
  }
  std::cout << "checked " << doc["checked"].get<int>() << ", skipped "
            << doc["skipped"].get<int>() << ", bounds (" << doc["deg_f"].get<int>()
            << "," << doc["deg_g"].get<int>() << "): "
            << (doc["all_hold"].get<bool>() ? "all hold" : "FAILURES") << "\n";
}

void print_suite(const json& doc) {
  for (const auto& c : doc["cases"]) {
    std::cout << "case " << c["id"].get<std::string>() << ": "
              << (c["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
    for (const auto& chk : c["checks"]) {
      std::cout << "  " << (chk["pass"].get<bool>() ? "ok   " : "FAIL ")
                << chk["name"].get<std::string>();
      if (chk.contains("detail"))
        std::cout << "  (" << chk["detail"].get<std::string>() << ")";
      std::cout << "\n";
    }
  }
  std::cout << (doc["all_passed"].get<bool>() ? "all cases pass" : "CASE FAILURES")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: finite-ring structure and Armendariz-type classification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool json_out = false;
  std::string cache_dir;
  int workers = 1;
  uint64_t budget = 10000000;
  uint32_t cap = 4096;
  app.add_flag("--json", json_out, "emit one JSON document instead of text");
  app.add_option("--cache-dir", cache_dir, "directory for the Cayley-table cache");
  app.add_option("--workers", workers, "worker threads (affects speed, never output)")
      ->check(CLI::Range(1, 256));
  app.add_option("--budget", budget, "exhaustive-search budget (f-tuple count)");
  app.add_option("--cap", cap, "table materialization cap (elements)")
      ->check(CLI::Range(uint32_t(1), uint32_t(65535)));

  std::string expr, target = "j", mode = "exhaustive", bounds = "1,1";
  std::string corpus_file, cert_file, which_case = "all";
  int deg_f = 1, deg_g = 1, truncation = 3;
  uint64_t trials = 100000;

  CLI::App* cmd_info = app.add_subcommand("info", "ring overview");
  cmd_info->add_option("expr", expr, "ring expression")->required();

  CLI::App* cmd_radical = app.add_subcommand("radical", "Jacobson radical elements");
  cmd_radical->add_option("expr", expr)->required();

  CLI::App* cmd_idem = app.add_subcommand("idempotents", "idempotent elements");
  cmd_idem->add_option("expr", expr)->required();

  CLI::App* cmd_local = app.add_subcommand("is-local", "local ring test");
  cmd_local->add_option("expr", expr)->required();

  CLI::App* cmd_abelian = app.add_subcommand("is-abelian",
                                             "are all idempotents central");
  cmd_abelian->add_option("expr", expr)->required();

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "bounded Armendariz-type classification");
  cmd_classify->add_option("expr", expr)->required();
  cmd_classify->add_option("--target", target, "armendariz | weak | j")->required();
  cmd_classify->add_option("--deg-f", deg_f, "max degree of f")->required();
  cmd_classify->add_option("--deg-g", deg_g, "max degree of g")->required();
  cmd_classify->add_option("--mode", mode, "exhaustive | sample");
  cmd_classify->add_option("--trials", trials, "sample count (sampled mode)");

  CLI::App* cmd_theorems =
      app.add_subcommand("check-theorems", "run closure-theorem validators");
  cmd_theorems->add_option("--corpus", corpus_file, "file with one ring expression per line")
      ->required();
  cmd_theorems->add_option("--bounds", bounds, "degree bounds N,M");

  CLI::App* cmd_paper =
      app.add_subcommand("verify-paper", "run the bundled worked-example suite");
  cmd_paper->add_option("--case", which_case, "E2 | E5 | E7 | E9 | all");
  cmd_paper->add_option("--truncation", truncation, "series truncation (>= 3)");

  CLI::App* cmd_cert =
      app.add_subcommand("verify-cert", "replay a classification certificate");
  cmd_cert->add_option("file", cert_file, "certificate JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<ringlab_ctx, CtxDeleter> ctx_holder;
  {
    ringlab_ctx* raw = nullptr;
    if (ringlab_ctx_new(&raw) != RINGLAB_OK) {
      std::cerr << "error: cannot create context\n";
      return kExitError;
    }
    ctx_holder.reset(raw);
  }
  ringlab_ctx* ctx = ctx_holder.get();
  if (!cache_dir.empty()) ringlab_ctx_set_cache_dir(ctx, cache_dir.c_str());
  ringlab_ctx_set_workers(ctx, workers);
  ringlab_ctx_set_budget(ctx, budget);
  ringlab_ctx_set_table_cap(ctx, cap);

  auto open_ring = [&](std::unique_ptr<ringlab_ring, RingDeleter>& out) -> int {
    ringlab_ring* raw = nullptr;
    ringlab_status st = ringlab_ring_open(ctx, expr.c_str(), &raw);
    if (st != RINGLAB_OK) return report_error(ctx, st);
    out.reset(raw);
    return -1;
  };

  auto finish = [&](const std::string& doc_text, int code,
                    void (*printer)(const json&)) -> int {
    if (json_out) {
      std::cout << doc_text << "\n";
    } else {
      printer(json::parse(doc_text));
    }
    return code;
  };

  if (*cmd_info || *cmd_radical || *cmd_idem || *cmd_local || *cmd_abelian ||
      *cmd_classify) {
    std::unique_ptr<ringlab_ring, RingDeleter> ring;
    int rc = open_ring(ring);
    if (rc >= 0) return rc;
    char* out = nullptr;

    if (*cmd_info) {
      ringlab_status st = ringlab_ring_info(ctx, ring.get(), &out);
      if (st != RINGLAB_OK) return report_error(ctx, st);
      std::string text = take_string(out);
      if (json_out) {
        std::cout << text << "\n";
        return kExitOk;
      }
      json doc = json::parse(text);
      for (auto& [key, value] : doc.items()) {
        if (key == "schema_version" || key == "tool_version" || key == "command")
          continue;
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>()
                                                       : value.dump())
                  << "\n";
      }
      return kExitOk;
    }
    if (*cmd_radical) {
      ringlab_status st = ringlab_ring_radical(ctx, ring.get(), &out);
      if (st != RINGLAB_OK) return report_error(ctx, st);
      return finish(take_string(out), kExitOk, print_members);
    }
    if (*cmd_idem) {
      ringlab_status st = ringlab_ring_idempotents(ctx, ring.get(), &out);
      if (st != RINGLAB_OK) return report_error(ctx, st);
      return finish(take_string(out), kExitOk, print_members);
    }
    if (*cmd_local) {
      int local = 0;
      ringlab_status st = ringlab_ring_is_local(ctx, ring.get(), &local, &out);
      if (st != RINGLAB_OK) return report_error(ctx, st);
      std::string text = take_string(out);
      if (json_out)
        std::cout << text << "\n";
      else {
        json doc = json::parse(text);
        std::cout << doc["ring_expr"].get<std::string>() << " is "
                  << (local ? "local" : "not local") << "\n";
        if (doc.contains("witness"))
          std::cout << "  witness: " << doc["witness"]["element"].get<std::string>()
                    << " is " << doc["witness"]["reason"].get<std::string>() << "\n";
      }
      return local ? kExitOk : kExitWitness;
    }
    if (*cmd_abelian) {
      int abelian = 0;
      ringlab_status st = ringlab_ring_is_abelian(ctx, ring.get(), &abelian, &out);
      if (st != RINGLAB_OK) return report_error(ctx, st);
      std::string text = take_string(out);
      if (json_out)
        std::cout << text << "\n";
      else {
        json doc = json::parse(text);
        std::cout << doc["ring_expr"].get<std::string>() << " is "
                  << (abelian ? "abelian" : "not abelian") << "\n";
        if (doc.contains("witness"))
          std::cout << "  idempotent " << doc["witness"]["idempotent"].get<std::string>()
                    << " does not commute with "
                    << doc["witness"]["element"].get<std::string>() << "\n";
      }
      return abelian ? kExitOk : kExitWitness;
    }
    // classify
    int verdict = 0;
    ringlab_status st =
        ringlab_classify(ctx, ring.get(), target.c_str(), deg_f, deg_g,
                         mode.c_str(), trials, &verdict, &out);
    if (st != RINGLAB_OK) return report_error(ctx, st);
    int code = verdict == 0 ? kExitOk : (verdict == 1 ? kExitWitness : kExitUnknown);
    return finish(take_string(out), code, print_classification);
  }

  if (*cmd_theorems) {
    std::ifstream in(corpus_file);
    if (!in) {
      std::cerr << "error: cannot read corpus file " << corpus_file << "\n";
      return kExitError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    int df = 1, dg = 1;
    if (std::sscanf(bounds.c_str(), "%d,%d", &df, &dg) != 2 || df < 0 || dg < 0) {
      std::cerr << "error: --bounds expects N,M\n";
      return kExitError;
    }
    int all_hold = 0;
    char* out = nullptr;
    ringlab_status st = ringlab_check_theorems(ctx, buf.str().c_str(), df, dg,
                                               &all_hold, &out);
    if (st != RINGLAB_OK) return report_error(ctx, st);
    return finish(take_string(out), all_hold ? kExitOk : kExitWitness,
                  print_theorems);
  }

  if (*cmd_paper) {
    std::string lc = which_case;
    for (char& c : lc) c = char(std::tolower(static_cast<unsigned char>(c)));
    int all_passed = 0;
    char* out = nullptr;
    ringlab_status st =
        ringlab_verify_paper(ctx, lc.c_str(), truncation, &all_passed, &out);
    if (st != RINGLAB_OK) return report_error(ctx, st);
    return finish(take_string(out), all_passed ? kExitOk : kExitWitness, print_suite);
  }

  if (*cmd_cert) {
    std::ifstream in(cert_file);
    if (!in) {
      std::cerr << "error: cannot read certificate file " << cert_file << "\n";
      return kExitError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    int valid = 0;
    char* out = nullptr;
    ringlab_status st =
        ringlab_verify_certificate(ctx, buf.str().c_str(), &valid, &out);
    if (st != RINGLAB_OK) return report_error(ctx, st);
    std::string text = take_string(out);
    if (json_out)
      std::cout << text << "\n";
    else
      std::cout << (valid ? "certificate valid: witness revalidates"
                          : "certificate INVALID")
                << "\n";
    return valid ? kExitOk : kExitWitness;
  }

  return kExitError;
}
