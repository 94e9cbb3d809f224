#include "lctlab/json_io.hpp"

#include "lctlab/version.hpp"

namespace lctlab::io {

namespace {

Rat rat_from_json(const json& j, const char* what) {
  try {
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
  throw SchemaError(std::string(what) + ": expected an integer or a \"p/q\" string");
}

std::vector<Rat> rat_vector(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError(std::string(what) + ": expected a nonempty array");
  }
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rat_from_json(item, what));
  return out;
}

ExtRat ext_from_json(const json& j, const char* what) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtRat::inf();
  return ExtRat::of(rat_from_json(j, what));
}

json ext_to_json(const ExtRat& e) { return json(ext_str(e)); }

bounds::Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return bounds::Verdict::Holds;
  if (s == "fails") return bounds::Verdict::Fails;
  if (s == "holds-with-lower-bound") return bounds::Verdict::HoldsWithLowerBound;
  throw SchemaError("unknown verdict: " + s);
}

}  // namespace

SingularityModel parse_model(const json& doc) {
  if (!doc.is_object() || !doc.contains("model") || !doc["model"].is_object()) {
    throw SchemaError("document must be an object with a \"model\" object");
  }
  const json& m = doc["model"];
  if (!m.contains("type") || !m["type"].is_string()) {
    throw SchemaError("model needs a string \"type\"");
  }
  const std::string type = m["type"].get<std::string>();
  if (type == "weighted" || type == "truncated") {
    if (!m.contains("weights")) throw SchemaError("weighted model needs \"weights\"");
    auto raw = rat_vector(m["weights"], "weights");
    if (type == "weighted") return WeightedMonomial{Weights(std::move(raw))};
    if (!m.contains("M")) throw SchemaError("truncated model needs \"M\"");
    Rat trunc = rat_from_json(m["M"], "M");
    if (trunc <= 0) throw ValidationError("truncation level M must be positive");
    return TruncatedWeighted{Weights(std::move(raw)), std::move(trunc)};
  }
  if (type == "monomial") {
    if (!m.contains("exponents") || !m["exponents"].is_array() || m["exponents"].empty()) {
      throw SchemaError("monomial model needs a nonempty \"exponents\" array");
    }
    std::vector<ExponentVector> gens;
    std::size_t dim = 0;
    for (const auto& row : m["exponents"]) {
      auto v = rat_vector(row, "exponents");
      if (dim == 0) dim = v.size();
      if (v.size() != dim) throw SchemaError("exponent rows have inconsistent dimensions");
      gens.push_back(std::move(v));
    }
    for (const auto& g : gens) {
      for (const auto& c : g) {
        if (c < 0) throw SchemaError("exponents must be nonnegative");
      }
    }
    return MonomialIdeal(NewtonPolyhedron::from_generators(gens));
  }
  throw SchemaError("unknown model type: " + type);
}

SingularityModel parse_model_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("JSON parse error: ") + e.what());
  }
  return parse_model(doc);
}

json model_to_json(const SingularityModel& m) {
  json out;
  if (const auto* wm = std::get_if<WeightedMonomial>(&m)) {
    out["type"] = "weighted";
    json ws = json::array();
    for (const auto& a : wm->weights.ascending()) ws.push_back(rat_str(a));
    out["weights"] = std::move(ws);
  } else if (const auto* tw = std::get_if<TruncatedWeighted>(&m)) {
    out["type"] = "truncated";
    json ws = json::array();
    for (const auto& a : tw->weights.ascending()) ws.push_back(rat_str(a));
    out["weights"] = std::move(ws);
    out["M"] = rat_str(tw->truncation);
  } else {
    const auto& ideal = std::get<MonomialIdeal>(m);
    out["type"] = "monomial";
    json rows = json::array();
    for (const auto& v : ideal.poly().vertices()) {
      json row = json::array();
      for (const auto& c : v) row.push_back(rat_str(c));
      rows.push_back(std::move(row));
    }
    out["exponents"] = std::move(rows);
  }
  return json{{"model", std::move(out)}};
}

json table_to_json(const InvariantTable& t) {
  json out;
  out["n"] = t.n;
  out["c"] = ext_to_json(t.c);
  out["c_float"] = ext_double(t.c);
  json cks = json::array();
  for (const auto& entry : t.ck) {
    cks.push_back(json{{"value", rat_str(entry.value)},
                       {"value_float", to_double(entry.value)},
                       {"exact", entry.exact}});
  }
  out["c_k"] = std::move(cks);
  json es = json::array(), efs = json::array();
  for (const auto& e : t.e) {
    es.push_back(rat_str(e));
    efs.push_back(to_double(e));
  }
  out["e_k"] = std::move(es);
  out["e_k_float"] = std::move(efs);
  out["lelong"] = rat_str(t.lelong);
  out["truncated"] = t.truncated;
  return out;
}

InvariantTable table_from_json(const json& j) {
  InvariantTable t;
  t.n = j.at("n").get<std::size_t>();
  t.c = ext_from_json(j.at("c"), "c");
  for (const auto& entry : j.at("c_k")) {
    t.ck.push_back(CkEntry{rat_from_json(entry.at("value"), "c_k"),
                           entry.at("exact").get<bool>()});
  }
  for (const auto& e : j.at("e_k")) t.e.push_back(rat_from_json(e, "e_k"));
  t.lelong = rat_from_json(j.at("lelong"), "lelong");
  t.truncated = j.at("truncated").get<bool>();
  return t;
}

json check_to_json(const bounds::CheckResult& c) {
  return json{{"name", c.name},
              {"lhs", ext_to_json(c.lhs)},
              {"rhs", ext_to_json(c.rhs)},
              {"verdict", bounds::verdict_str(c.verdict)},
              {"margin", ext_to_json(c.margin)}};
}

bounds::CheckResult check_from_json(const json& j) {
  bounds::CheckResult c;
  c.name = j.at("name").get<std::string>();
  c.lhs = ext_from_json(j.at("lhs"), "lhs");
  c.rhs = ext_from_json(j.at("rhs"), "rhs");
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.margin = ext_from_json(j.at("margin"), "margin");
  return c;
}

json report_to_json(const ReportDocument& doc) {
  json out;
  out["model"] = doc.model.at("model");
  out["invariants"] = table_to_json(doc.table);
  json checks = json::array();
  for (const auto& c : doc.checks) checks.push_back(check_to_json(c));
  out["checks"] = std::move(checks);
  if (doc.numeric) {
    const auto& n = *doc.numeric;
    out["numeric"] = json{{"exact_c", n.exact_c},
                          {"decay_c_hat", n.decay_c_hat},
                          {"decay_stderr", n.decay_stderr},
                          {"decay_within_5pct", n.decay_within_5pct},
                          {"integrability_at_0.9c", n.integrability_low},
                          {"integrability_at_1.1c", n.integrability_high},
                          {"integrability_ok", n.integrability_ok},
                          {"samples", n.samples},
                          {"seed", n.seed}};
  }
  out["all_exact_hold"] = doc.all_exact_hold;
  out["version"] = doc.version;
  return out;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument doc;
  doc.model = json{{"model", j.at("model")}};
  doc.table = table_from_json(j.at("invariants"));
  for (const auto& c : j.at("checks")) doc.checks.push_back(check_from_json(c));
  if (j.contains("numeric")) {
    bounds::NumericCrossCheck n;
    const auto& src = j.at("numeric");
    n.exact_c = src.at("exact_c").get<double>();
    n.decay_c_hat = src.at("decay_c_hat").get<double>();
    n.decay_stderr = src.at("decay_stderr").get<double>();
    n.decay_within_5pct = src.at("decay_within_5pct").get<bool>();
    n.integrability_low = src.at("integrability_at_0.9c").get<std::string>();
    n.integrability_high = src.at("integrability_at_1.1c").get<std::string>();
    n.integrability_ok = src.at("integrability_ok").get<bool>();
    n.samples = src.at("samples").get<std::uint64_t>();
    n.seed = src.at("seed").get<std::uint64_t>();
    doc.numeric = std::move(n);
  }
  doc.all_exact_hold = j.at("all_exact_hold").get<bool>();
  doc.version = j.at("version").get<std::string>();
  return doc;
}

ReportDocument make_report_document(const SingularityModel& m, const bounds::CheckReport& rep) {
  ReportDocument doc;
  doc.model = model_to_json(m);
  doc.table = rep.table;
  doc.checks = rep.checks;
  doc.numeric = rep.numeric;
  doc.all_exact_hold = rep.all_exact_hold;
  doc.version = kVersion;
  return doc;
}

json invariants_document(const SingularityModel& m, const InvariantTable& t) {
  json out;
  out["model"] = model_to_json(m).at("model");
  out["invariants"] = table_to_json(t);
  out["version"] = kVersion;
  return out;
}

}  // namespace lctlab::io
