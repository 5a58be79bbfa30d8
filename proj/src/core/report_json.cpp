#include "report_json.hpp"

namespace ringlab {

namespace {

std::vector<std::string> index_labels(const TableRing& t,
                                      const std::vector<uint16_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (uint16_t i : idx) out.push_back(t.label_at(i));
  return out;
}

std::vector<uint16_t> resolve_labels(const TableRing& t,
                                     const ordered_json& labels) {
  if (!labels.is_array())
    fail(Errc::malformed_witness, "witness coefficients must be an array");
  std::vector<uint16_t> out;
  for (const auto& l : labels) {
    if (!l.is_string())
      fail(Errc::malformed_witness, "witness coefficient labels must be strings");
    auto idx = t.index_of_label(l.get<std::string>());
    if (!idx)
      fail(Errc::malformed_witness,
           "label '" + l.get<std::string>() + "' does not resolve in the ring");
    out.push_back(*idx);
  }
  return out;
}

}  // namespace

ordered_json classification_json(const ClassificationReport& report,
                                 const FiniteRing& ring) {
  const TableRing& t = ring.table();
  ordered_json doc;
  doc["schema_version"] = kCertificateSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = "classify";
  doc["ring_expr"] = report.ring_expr;
  doc["ring_size"] = report.ring_size;
  ordered_json params;
  params["target"] = to_string(report.target);
  params["deg_f"] = report.deg_f;
  params["deg_g"] = report.deg_g;
  params["mode"] = to_string(report.mode);
  if (report.mode == SearchMode::sampled) params["trials"] = report.trials;
  doc["parameters"] = params;
  doc["verdict"] = to_string(report.verdict);
  if (report.witness) {
    const SearchWitness& w = *report.witness;
    ordered_json jw;
    jw["f"] = index_labels(t, w.f);
    jw["g"] = index_labels(t, w.g);
    jw["i"] = w.i;
    jw["j"] = w.j;
    jw["product"] = t.label_at(w.product);
    jw["target_kind"] = to_string(report.target);
    jw["target_size"] = report.target_size;
    if (!w.nil_power_trace.empty())
      jw["product_power_trace"] = index_labels(t, w.nil_power_trace);
    doc["witness"] = jw;
  }
  ordered_json stats;
  stats["pairs_examined"] = report.pairs_examined;
  stats["target_size"] = report.target_size;
  doc["stats"] = stats;
  return doc;
}

ClassificationReport classification_from_json(const ordered_json& doc,
                                              const FiniteRing& ring) {
  const TableRing& t = ring.table();
  ClassificationReport rep;
  if (!doc.is_object() || !doc.contains("parameters") || !doc.contains("verdict"))
    fail(Errc::malformed_witness, "certificate lacks required fields");
  rep.ring_expr = doc.value("ring_expr", ring.describe());
  rep.ring_size = uint32_t(ring.size());
  const auto& params = doc["parameters"];
  auto target = target_from_string(params.value("target", ""));
  if (!target) fail(Errc::malformed_witness, "unknown classification target");
  rep.target = *target;
  rep.deg_f = params.value("deg_f", -1);
  rep.deg_g = params.value("deg_g", -1);
  if (rep.deg_f < 0 || rep.deg_g < 0)
    fail(Errc::malformed_witness, "certificate lacks degree bounds");
  rep.mode = params.value("mode", "exhaustive") == "sample" ? SearchMode::sampled
                                                            : SearchMode::exhaustive;
  std::string verdict = doc["verdict"].get<std::string>();
  rep.verdict = verdict == "verified"
                    ? Verdict::verified
                    : (verdict == "counterexample" ? Verdict::counterexample
                                                   : Verdict::unknown);
  if (doc.contains("witness")) {
    const auto& jw = doc["witness"];
    SearchWitness w;
    w.f = resolve_labels(t, jw.contains("f") ? jw["f"] : ordered_json());
    w.g = resolve_labels(t, jw.contains("g") ? jw["g"] : ordered_json());
    w.i = jw.value("i", -1);
    w.j = jw.value("j", -1);
    if (!jw.contains("product") || !jw["product"].is_string())
      fail(Errc::malformed_witness, "witness lacks a product label");
    auto prod = t.index_of_label(jw["product"].get<std::string>());
    if (!prod)
      fail(Errc::malformed_witness, "witness product label does not resolve");
    w.product = *prod;
    rep.witness = std::move(w);
  }
  return rep;
}

ordered_json theorem_run_json(const TheoremRun& run) {
  ordered_json doc;
  doc["schema_version"] = kCertificateSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = "check-theorems";
  doc["deg_f"] = run.deg_f;
  doc["deg_g"] = run.deg_g;
  ordered_json rows = ordered_json::array();
  for (const TheoremVerdict& v : run.rows) {
    ordered_json row;
    row["theorem"] = to_string(v.id);
    row["instance"] = v.instance;
    row["status"] = v.skipped ? "skipped" : (v.holds ? "holds" : "fails");
    if (v.vacuous) row["vacuous"] = true;
    if (!v.note.empty()) row["note"] = v.note;
    if (!v.details.empty()) {
      ordered_json verdicts = ordered_json::array();
      for (const auto& d : v.details) {
        ordered_json sub;
        sub["ring_expr"] = d.ring_expr;
        sub["verdict"] = to_string(d.verdict);
        verdicts.push_back(sub);
      }
      row["classifications"] = verdicts;
    }
    rows.push_back(row);
  }
  doc["results"] = rows;
  doc["checked"] = run.checked;
  doc["skipped"] = run.skipped;
  doc["all_hold"] = run.all_hold;
  return doc;
}

ordered_json example_suite_json(const ExampleSuiteReport& report) {
  ordered_json doc;
  doc["schema_version"] = kCertificateSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = "verify-paper";
  doc["truncation"] = report.truncation;
  ordered_json cases = ordered_json::array();
  for (const auto& c : report.cases) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["passed"] = c.passed;
    ordered_json checks = ordered_json::array();
    for (const auto& chk : c.checks) {
      ordered_json jchk;
      jchk["name"] = chk.name;
      jchk["pass"] = chk.pass;
      if (!chk.detail.empty()) jchk["detail"] = chk.detail;
      checks.push_back(jchk);
    }
    jc["checks"] = checks;
    cases.push_back(jc);
  }
  doc["cases"] = cases;
  doc["all_passed"] = report.all_passed;
  return doc;
}

ordered_json element_set_json(const ElementSet& set) {
  const TableRing& t = set.ring.table();
  ordered_json doc;
  doc["ring_expr"] = set.ring.describe();
  doc["count"] = set.members.size();
  ordered_json members = ordered_json::array();
  for (uint16_t m : set.members) members.push_back(t.label_at(m));
  doc["members"] = members;
  return doc;
}

}  // namespace ringlab
