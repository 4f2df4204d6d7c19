#include "cubeturan/report.hpp"

#include <sstream>

namespace cubeturan {

Json rational_json(const Rational& r) {
  return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Json count_json(const CountReport& r) {
  return Json{{"n", r.n},
              {"pattern", r.pattern.to_string()},
              {"count", r.count.str()},
              {"ambient_total", r.ambient_total.str()},
              {"density", rational_json(r.density)},
              {"method", to_string(r.method)}};
}

Json search_json(const SearchResult& r) {
  return Json{{"n", r.n},
              {"target", r.target.to_string()},
              {"forbid", r.forbid.to_string()},
              {"value", r.value.str()},
              {"ambient_total", r.ambient_total.str()},
              {"density", rational_json(r.density)},
              {"method", to_string(r.method)},
              {"nodes_explored", std::to_string(r.nodes_explored)},
              {"witness_edges", r.witness.sorted_keys()}};
}

Json bound_json(const BoundValue& b) {
  Json params = Json::object();
  for (const auto& [k, v] : b.params) params[k] = v;
  Json j{{"theorem", to_string(b.theorem)},
         {"side", to_string(b.side)},
         {"params", params},
         {"expression", b.expression},
         {"value", b.value ? rational_json(*b.value) : Json(nullptr)},
         {"asymptotic", b.asymptotic},
         {"unresolved", b.unresolved}};
  if (b.numeric_part) j["numeric_part"] = rational_json(*b.numeric_part);
  return j;
}

Json sandwich_json(const SandwichReport& r) {
  Json j{{"theorem", to_string(r.theorem)}, {"lower", bound_json(r.lower)}, {"upper", bound_json(r.upper)}};
  if (r.measured) {
    j["measured"] = Json{{"label", r.measured_label}, {"value", rational_json(*r.measured)}};
  }
  j["lines"] = r.lines;
  j["consistent"] = r.consistent;
  return j;
}

Json verdict_json(const FreenessVerdict& v, const Pattern& forbidden) {
  return Json{{"forbid", forbidden.to_string()},
              {"free", v.free},
              {"witness", v.has_witness() ? Json(v.witness_string()) : Json(nullptr)},
              {"checked", std::to_string(v.checked_count)}};
}

Json construction_json(const Construction& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.spec.params) params[k] = v;
  Json j{{"construction", construction_name(c.spec.kind)},
         {"params", params},
         {"n", c.graph.dimension()},
         {"edge_count", std::to_string(c.graph.edge_count())},
         {"claimed_free_of", c.claim_strings()}};
  if (!c.selected.empty()) j["selected_count"] = std::to_string(c.selected.size());
  return j;
}

Json claims_json(const std::vector<ClaimCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"claim", c.claim},
                       {"holds", c.holds},
                       {"witness", c.verdict.has_witness() ? Json(c.verdict.witness_string()) : Json(nullptr)}});
  }
  return arr;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_object() && v.contains("num") && v.contains("den") && v.size() == 2) {
    s = v["num"].get<std::string>() + "/" + v["den"].get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_csv(const Json& j) {
  std::vector<Json> rows;
  if (j.is_array()) {
    for (const auto& r : j) rows.push_back(r);
  } else {
    rows.push_back(j);
  }
  std::vector<std::string> header;
  for (const auto& r : rows) {
    if (!r.is_object()) continue;
    for (const auto& [k, v] : r.items()) {
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << ",";
      if (r.is_object() && r.contains(header[i])) out << csv_cell(r[header[i]]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace cubeturan
