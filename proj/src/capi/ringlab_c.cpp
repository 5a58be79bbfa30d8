#include "ringlab.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "cache.hpp"
#include "checker.hpp"
#include "constructions.hpp"
#include "expr.hpp"
#include "report_json.hpp"
#include "structure.hpp"
#include "theorems.hpp"

using namespace ringlab;

struct ringlab_ctx {
  std::string cache_dir;
  int workers = 1;
  uint64_t budget = 10000000;
  uint32_t cap = kDefaultTableCap;
  std::string last_error;
};

struct ringlab_ring {
  RingExprPtr expr;
  std::string canonical;
  FiniteRing built;              // as constructed (possibly computed)
  FiniteRing table;              // materialized view, once available
  bool table_attempted = false;
};

namespace {

ringlab_status status_of(Errc code) {
  switch (code) {
    case Errc::parse_error: return RINGLAB_ERR_PARSE;
    case Errc::precondition: return RINGLAB_ERR_PRECONDITION;
    case Errc::budget_exceeded: return RINGLAB_ERR_BUDGET;
    case Errc::cap_exceeded: return RINGLAB_ERR_CAP_EXCEEDED;
    case Errc::enumeration_unavailable: return RINGLAB_ERR_ENUMERATION;
    case Errc::not_idempotent: return RINGLAB_ERR_NOT_IDEMPOTENT;
    case Errc::element_not_in_ring: return RINGLAB_ERR_ELEMENT_NOT_IN_RING;
    case Errc::bad_argument: return RINGLAB_ERR_BAD_ARGUMENT;
    case Errc::io_error: return RINGLAB_ERR_IO;
    case Errc::malformed_witness: return RINGLAB_ERR_MALFORMED_WITNESS;
    case Errc::internal: return RINGLAB_ERR_INTERNAL;
  }
  return RINGLAB_ERR_INTERNAL;
}

template <typename Fn>
ringlab_status guarded(ringlab_ctx* ctx, Fn&& fn) {
  if (!ctx) return RINGLAB_ERR_BAD_ARGUMENT;
  try {
    fn();
    return RINGLAB_OK;
  } catch (const RingError& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return RINGLAB_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit_json(char** out_json, const ordered_json& doc) {
  if (out_json) *out_json = dup_string(doc.dump(2));
}

// Materialized view of the ring, loading from / saving to the table cache.
const FiniteRing& ensure_table(ringlab_ctx* ctx, ringlab_ring* ring) {
  if (ring->table.valid()) return ring->table;
  if (!ring->table_attempted && !ctx->cache_dir.empty()) {
    ring->table_attempted = true;
    std::string warning;
    if (auto cached = cache_load(ctx->cache_dir, ring->canonical, &warning)) {
      ring->table = *cached;
      return ring->table;
    }
    if (!warning.empty()) std::fprintf(stderr, "ringlab: %s\n", warning.c_str());
  }
  ring->table = materialize(ring->built, ctx->cap);
  if (!ctx->cache_dir.empty()) cache_store(ctx->cache_dir, ring->canonical, ring->table);
  return ring->table;
}

CheckOptions check_options(const ringlab_ctx* ctx) {
  CheckOptions opt;
  opt.budget = ctx->budget;
  opt.workers = ctx->workers;
  opt.cap = ctx->cap;
  return opt;
}

}  // namespace

extern "C" {

const char* ringlab_version(void) { return kToolVersion; }

ringlab_status ringlab_ctx_new(ringlab_ctx** out_ctx) {
  if (!out_ctx) return RINGLAB_ERR_BAD_ARGUMENT;
  *out_ctx = new ringlab_ctx();
  return RINGLAB_OK;
}

void ringlab_ctx_free(ringlab_ctx* ctx) { delete ctx; }

const char* ringlab_ctx_last_error(const ringlab_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

ringlab_status ringlab_ctx_set_cache_dir(ringlab_ctx* ctx, const char* path) {
  if (!ctx) return RINGLAB_ERR_BAD_ARGUMENT;
  ctx->cache_dir = path ? path : "";
  return RINGLAB_OK;
}

ringlab_status ringlab_ctx_set_workers(ringlab_ctx* ctx, int workers) {
  if (!ctx || workers < 1 || workers > 256) return RINGLAB_ERR_BAD_ARGUMENT;
  ctx->workers = workers;
  return RINGLAB_OK;
}

ringlab_status ringlab_ctx_set_budget(ringlab_ctx* ctx, uint64_t budget) {
  if (!ctx || budget == 0) return RINGLAB_ERR_BAD_ARGUMENT;
  ctx->budget = budget;
  return RINGLAB_OK;
}

ringlab_status ringlab_ctx_set_table_cap(ringlab_ctx* ctx, uint32_t cap) {
  if (!ctx || cap == 0 || cap > kMaxTableCap) return RINGLAB_ERR_BAD_ARGUMENT;
  ctx->cap = cap;
  return RINGLAB_OK;
}

ringlab_status ringlab_ring_open(ringlab_ctx* ctx, const char* expr,
                                 ringlab_ring** out_ring) {
  if (!out_ring || !expr) return RINGLAB_ERR_BAD_ARGUMENT;
  *out_ring = nullptr;
  return guarded(ctx, [&] {
    auto handle = std::make_unique<ringlab_ring>();
    handle->expr = parse_ring_expr(expr);
    handle->canonical = serialize(*handle->expr);
    if (!ctx->cache_dir.empty()) {
      if (auto cached = cache_load(ctx->cache_dir, handle->canonical)) {
        handle->table = *cached;
        handle->built = *cached;
        handle->table_attempted = true;
        *out_ring = handle.release();
        return;
      }
    }
    handle->built = build_ring(*handle->expr, ctx->cap);
    *out_ring = handle.release();
  });
}

void ringlab_ring_free(ringlab_ring* ring) { delete ring; }

uint64_t ringlab_ring_size(const ringlab_ring* ring) {
  return ring ? ring->built.size() : 0;
}

const char* ringlab_ring_expr(const ringlab_ring* ring) {
  return ring ? ring->canonical.c_str() : "";
}

ringlab_status ringlab_ring_info(ringlab_ctx* ctx, ringlab_ring* ring,
                                 char** out_json) {
  if (!ring) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    ordered_json doc;
    doc["schema_version"] = kCertificateSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["command"] = "info";
    doc["ring_expr"] = ring->canonical;
    const FiniteRing& built = ring->built;
    if (built.size_exact())
      doc["size"] = built.size();
    else
      doc["size"] = nullptr;
    bool can_materialize =
        built.is_table() || (built.size_exact() && built.size() <= ctx->cap &&
                             built.enumerable());
    doc["materializable"] = can_materialize;
    if (can_materialize) {
      const FiniteRing& t = ensure_table(ctx, ring);
      const TableRing& tab = t.table();
      doc["zero"] = tab.label_at(0);
      doc["one"] = tab.label_at(tab.one_index());
      // Additive order of 1.
      uint16_t acc = tab.one_index();
      int ch = 1;
      while (acc != 0) {
        acc = tab.addi(acc, tab.one_index());
        ++ch;
      }
      doc["characteristic"] = ch;
      bool comm = true;
      for (uint32_t i = 0; i < tab.count() && comm; ++i)
        for (uint32_t j = i + 1; j < tab.count(); ++j)
          if (tab.muli(uint16_t(i), uint16_t(j)) != tab.muli(uint16_t(j), uint16_t(i))) {
            comm = false;
            break;
          }
      doc["commutative"] = comm;
      doc["units"] = units(t).count();
      doc["nilpotents"] = nilpotents(t).count();
      doc["idempotents"] = idempotents(t).count();
      doc["center"] = center(t).count();
      doc["radical"] = jacobson_radical(t).count();
    } else {
      doc["zero"] = built.label(built.zero());
      doc["one"] = built.label(built.one());
      doc["note"] = "ring exceeds the table cap; set-level queries unavailable";
    }
    emit_json(out_json, doc);
  });
}

ringlab_status ringlab_ring_radical(ringlab_ctx* ctx, ringlab_ring* ring,
                                    char** out_json) {
  if (!ring) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    const FiniteRing& t = ensure_table(ctx, ring);
    ordered_json doc = element_set_json(jacobson_radical(t));
    doc["kind"] = "jacobson-radical";
    emit_json(out_json, doc);
  });
}

ringlab_status ringlab_ring_idempotents(ringlab_ctx* ctx, ringlab_ring* ring,
                                        char** out_json) {
  if (!ring) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    const FiniteRing& t = ensure_table(ctx, ring);
    ordered_json doc = element_set_json(idempotents(t));
    doc["kind"] = "idempotents";
    emit_json(out_json, doc);
  });
}

ringlab_status ringlab_ring_is_local(ringlab_ctx* ctx, ringlab_ring* ring,
                                     int* out_is_local, char** out_json) {
  if (!ring || !out_is_local) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    const FiniteRing& t = ensure_table(ctx, ring);
    LocalResult res = is_local(t);
    *out_is_local = res.local ? 1 : 0;
    ordered_json doc;
    doc["ring_expr"] = ring->canonical;
    doc["local"] = res.local;
    if (res.witness)
      doc["witness"] = {{"element", t.table().label_at(*res.witness)},
                        {"reason", "neither a unit nor in the radical"}};
    emit_json(out_json, doc);
  });
}

ringlab_status ringlab_ring_is_abelian(ringlab_ctx* ctx, ringlab_ring* ring,
                                       int* out_is_abelian, char** out_json) {
  if (!ring || !out_is_abelian) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    const FiniteRing& t = ensure_table(ctx, ring);
    AbelianResult res = is_abelian(t);
    *out_is_abelian = res.abelian ? 1 : 0;
    ordered_json doc;
    doc["ring_expr"] = ring->canonical;
    doc["abelian"] = res.abelian;
    if (!res.abelian) {
      const TableRing& tab = t.table();
      doc["witness"] = {{"idempotent", tab.label_at(*res.idem)},
                        {"element", tab.label_at(*res.other)},
                        {"left_product", tab.label_at(tab.muli(*res.idem, *res.other))},
                        {"right_product", tab.label_at(tab.muli(*res.other, *res.idem))}};
    }
    emit_json(out_json, doc);
  });
}

ringlab_status ringlab_classify(ringlab_ctx* ctx, ringlab_ring* ring,
                                const char* target, int deg_f, int deg_g,
                                const char* mode, uint64_t trials,
                                int* out_verdict, char** out_json) {
  if (!ring || !target || !out_verdict) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    auto kind = target_from_string(target);
    if (!kind) fail(Errc::bad_argument, std::string("unknown target '") + target + "'");
    ClassifyOptions opt;
    opt.target = *kind;
    opt.deg_f = deg_f;
    opt.deg_g = deg_g;
    opt.budget = ctx->budget;
    opt.workers = ctx->workers;
    opt.trials = trials == 0 ? 100000 : trials;
    if (mode && std::string(mode) == "sample")
      opt.mode = SearchMode::sampled;
    else if (mode && std::string(mode) != "exhaustive" && std::string(mode) != "")
      fail(Errc::bad_argument, std::string("unknown mode '") + mode + "'");
    const FiniteRing& t = ensure_table(ctx, ring);
    ClassificationReport rep = classify(t, opt);
    rep.ring_expr = ring->canonical;
    *out_verdict = rep.verdict == Verdict::verified
                       ? 0
                       : (rep.verdict == Verdict::counterexample ? 1 : 2);
    emit_json(out_json, classification_json(rep, t));
  });
}

ringlab_status ringlab_verify_certificate(ringlab_ctx* ctx, const char* cert_json,
                                          int* out_valid, char** out_json) {
  if (!cert_json || !out_valid) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    ordered_json doc = ordered_json::parse(cert_json, nullptr, false);
    if (doc.is_discarded())
      fail(Errc::malformed_witness, "certificate is not valid JSON");
    if (!doc.contains("ring_expr") || !doc["ring_expr"].is_string())
      fail(Errc::malformed_witness, "certificate lacks ring_expr");
    RingExprPtr expr = parse_ring_expr(doc["ring_expr"].get<std::string>());
    FiniteRing ringv = materialize(build_ring(*expr, ctx->cap), ctx->cap);
    ClassificationReport rep = classification_from_json(doc, ringv);
    bool valid = verify_certificate(ringv, rep);
    *out_valid = valid ? 1 : 0;
    ordered_json out;
    out["command"] = "verify-cert";
    out["ring_expr"] = serialize(*expr);
    out["valid"] = valid;
    if (!valid) out["note"] = "witness does not revalidate by direct arithmetic";
    emit_json(out_json, out);
  });
}

ringlab_status ringlab_check_theorems(ringlab_ctx* ctx, const char* corpus_text,
                                      int deg_f, int deg_g, int* out_all_hold,
                                      char** out_json) {
  if (!corpus_text || !out_all_hold) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    std::vector<FiniteRing> corpus;
    std::istringstream in(corpus_text);
    std::string line;
    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      size_t b = line.find_last_not_of(" \t\r");
      std::string expr_text = line.substr(a, b - a + 1);
      RingExprPtr expr = parse_ring_expr(expr_text);
      corpus.push_back(materialize(build_ring(*expr, ctx->cap), ctx->cap));
    }
    if (corpus.empty()) fail(Errc::bad_argument, "corpus is empty");
    TheoremRun run = check_theorems(corpus, deg_f, deg_g, check_options(ctx));
    *out_all_hold = run.all_hold ? 1 : 0;
    emit_json(out_json, theorem_run_json(run));
  });
}

ringlab_status ringlab_verify_paper(ringlab_ctx* ctx, const char* which_case,
                                    int truncation, int* out_all_passed,
                                    char** out_json) {
  if (!which_case || !out_all_passed) return RINGLAB_ERR_BAD_ARGUMENT;
  return guarded(ctx, [&] {
    ExampleSuiteReport rep =
        run_example_suite(which_case, truncation, check_options(ctx));
    *out_all_passed = rep.all_passed ? 1 : 0;
    emit_json(out_json, example_suite_json(rep));
  });
}

void ringlab_string_free(char* s) { delete[] s; }

}  // extern "C"
