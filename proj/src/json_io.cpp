#include "chainmod/json_io.hpp"

#include <charconv>
#include <string>

#include "chainmod/errors.hpp"

namespace chainmod::io {

Json to_json(const Rat& q) { return q.str(); }

Json to_json(const std::vector<Rat>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(q.str());
  return out;
}

Json to_json(const OpenInterval& iv) {
  return Json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"empty", iv.empty()}};
}

Json to_json(const InequalityReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"j", row.j},
                        {"lower_bound", row.lower_bound.str()},
                        {"value", row.value},
                        {"upper_bound", row.upper_bound.str()},
                        {"satisfied_strict", row.satisfied_strict},
                        {"satisfied_weak", row.satisfied_weak}});
  }
  return Json{{"strict", report.strict}, {"verdict", to_string(report.verdict)}, {"rows", rows}};
}

Json to_json(const HypothesisReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(
        Json{{"i", row.i}, {"value", row.value}, {"bound", row.bound.str()}, {"holds", row.holds}});
  }
  return Json{{"holds", report.holds}, {"rows", rows}};
}

Json to_json(const StabilityVerdict& verdict) {
  return Json{{"status", to_string(verdict.status)}, {"reasons", verdict.reasons}};
}

Json to_json(const NumericalSheaf& sheaf) {
  Json out{{"multirank", sheaf.multirank}, {"euler", sheaf.euler}};
  if (sheaf.sigma_ranks) out["sigma_ranks"] = *sheaf.sigma_ranks;
  return out;
}

Json to_json(const SolveResult& result) {
  Json out{{"status", to_string(result.status)},
           {"case", to_string(result.membership.which)},
           {"in_W", result.membership.which != WCase::NotInW},
           {"degenerate", result.degenerate}};
  if (!result.membership.reason.empty()) out["membership_reason"] = result.membership.reason;
  out["weights"] = result.weights ? to_json(result.weights->weights()) : Json(nullptr);
  out["witness_j"] = result.witness_j ? Json(*result.witness_j) : Json(nullptr);
  Json trace = Json::array();
  for (const auto& step : result.trace) {
    trace.push_back(Json{{"j", step.box.j},
                         {"raw_box", to_json(step.box.raw)},
                         {"box", to_json(step.box.box)},
                         {"feasible", to_json(step.feasible)},
                         {"chosen", step.chosen ? Json(step.chosen->str()) : Json(nullptr)}});
  }
  out["trace"] = trace;
  return out;
}

Json to_json(const Component& comp) {
  return Json{{"chi_vec", comp.chi_vec},
              {"multidegree", comp.multidegree},
              {"coprime_everywhere", comp.coprime_everywhere},
              {"verdict", to_string(comp.verdict)}};
}

Json to_json(const Enumeration& enumeration) {
  Json comps = Json::array();
  for (const auto& c : enumeration.components) comps.push_back(to_json(c));
  Json hits = Json::array();
  for (const auto& h : enumeration.boundary_hits) {
    hits.push_back(Json{{"j", h.j}, {"chi_prefix", h.chi_prefix}, {"endpoint", h.endpoint.str()}});
  }
  return Json{{"components", comps}, {"boundary_hits", hits}};
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  throw InvalidInput("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

std::int64_t int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    auto q = Rat::parse(j.get<std::string>());
    if (!q.is_integer()) throw InvalidInput("expected an integer, got " + q.str());
    return to_int64(q.num());
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

std::vector<std::int64_t> int_list_from_json(const Json& j) {
  if (j.is_string()) return parse_int_list(j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("expected a list of integers, got " + j.dump());
  std::vector<std::int64_t> out;
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

std::vector<Rat> rat_list_from_json(const Json& j) {
  if (j.is_string()) return parse_rat_list(j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("expected a list of rationals, got " + j.dump());
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  std::vector<Rat> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw InvalidInput("matrix rows must have equal length");
    for (const auto& e : row) entries.push_back(rat_from_json(e));
  }
  return RatMatrix(rows, cols, std::move(entries));
}

GluingDatum gluing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("matrices")) {
    throw InvalidInput("gluing datum needs \"r\" and \"matrices\"");
  }
  GluingDatum g;
  g.r = int_from_json(j.at("r"));
  for (const auto& m : j.at("matrices")) g.matrices.push_back(matrix_from_json(m));
  validate(g);
  return g;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  bool blank = text.find_first_not_of(" \t") == std::string_view::npos;
  if (blank) return parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto part : split_commas(text)) {
    auto q = Rat::parse(part);
    if (!q.is_integer()) throw InvalidInput("expected an integer, got '" + std::string(part) + "'");
    out.push_back(to_int64(q.num()));
  }
  return out;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  for (auto part : split_commas(text)) out.push_back(Rat::parse(part));
  return out;
}

}  // namespace chainmod::io
