#include "diffspec/report.hpp"

#include <algorithm>
#include <sstream>

namespace diffspec {

namespace {

using nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

std::string csv_quote(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string render_report(const RunReport& report, OutputFormat format, bool include_timing) {
  switch (format) {
    case OutputFormat::Json: {
      ordered_json doc;
      doc["command"] = report.command;
      doc["field"] = report.field_spec;
      doc["results"] = report.results;
      doc["discrepancies"] = report.discrepancies;
      if (include_timing) doc["elapsed_ms"] = report.elapsed_ms;
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out;
      for (const auto& row : report.rows) {
        std::vector<std::string> quoted;
        quoted.reserve(row.size());
        for (const std::string& cell : row) quoted.push_back(csv_quote(cell));
        out += join(quoted, ',') + "\n";
      }
      return out;
    }
    case OutputFormat::Table: {
      std::ostringstream os;
      os << "command: " << report.command << "\n";
      os << "field:   " << report.field_spec << "\n";
      if (!report.rows.empty()) {
        std::vector<std::size_t> width(report.rows[0].size(), 0);
        for (const auto& row : report.rows)
          for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
        for (const auto& row : report.rows) {
          os << " ";
          for (std::size_t c = 0; c < row.size(); ++c) {
            os << " " << row[c] << std::string(width[std::min(c, width.size() - 1)] - row[c].size(), ' ');
          }
          os << "\n";
        }
      }
      for (const auto& d : report.discrepancies) os << "DISCREPANCY: " << d << "\n";
      os << (report.discrepancies.empty() ? "status: ok" : "status: discrepancies found") << "\n";
      if (include_timing) os << "elapsed_ms: " << report.elapsed_ms << "\n";
      return os.str();
    }
  }
  return {};
}

RunReport make_spectrum_report(const Field& field, const SpectrumHistogram& h,
                               bool cross_checked, const std::string& note,
                               std::vector<std::string> discrepancies) {
  RunReport r;
  r.command = "spectrum";
  r.field_spec = field.spec_string();
  r.discrepancies = std::move(discrepancies);

  ordered_json spectrum = ordered_json::array();
  for (const auto& [i, wi] : h.w) spectrum.push_back({i, wi});
  r.results["m"] = h.m;
  r.results["d"] = h.d;
  r.results["spectrum"] = spectrum;
  r.results["delta_f"] = h.delta_f;
  r.results["cross_checked"] = cross_checked;
  if (!note.empty()) r.results["note"] = note;

  r.rows.push_back({"i", "w"});
  for (const auto& [i, wi] : h.w)
    r.rows.push_back({std::to_string(i), std::to_string(wi)});
  return r;
}

RunReport make_solve_report(const Field& field, FieldElement b, BClass cls,
                            std::uint64_t predicted, const std::optional<SolutionSet>& sols,
                            const std::string& note) {
  RunReport r;
  r.command = "solve";
  r.field_spec = field.spec_string();

  ordered_json list = ordered_json::array();
  std::vector<std::string> hex;
  if (sols) {
    for (FieldElement x : sols->solutions) {
      list.push_back(field.to_hex(x));
      hex.push_back(field.to_hex(x));
    }
    if (sols->solutions.size() != predicted)
      r.discrepancies.push_back("solution count " + std::to_string(sols->solutions.size()) +
                                " differs from predicted " + std::to_string(predicted));
  }
  r.results["b"] = field.to_hex(b);
  r.results["class"] = to_string(cls);
  r.results["predicted_count"] = predicted;
  r.results["solutions"] = list;
  r.results["method"] = sols ? to_string(sols->method) : "CLOSED_CONSTRUCTIVE";
  if (!note.empty()) r.results["note"] = note;

  r.rows.push_back({"b", "class", "predicted_count", "method", "solutions"});
  r.rows.push_back({field.to_hex(b), to_string(cls), std::to_string(predicted),
                    sols ? to_string(sols->method) : "CLOSED_CONSTRUCTIVE", join(hex, ';')});
  return r;
}

RunReport make_lambda_report(const Field& field, std::uint64_t closed_form_size,
                             const std::optional<std::vector<FieldElement>>& elements) {
  RunReport r;
  r.command = "lambda";
  r.field_spec = field.spec_string();
  r.results["closed_form_size"] = closed_form_size;
  r.rows.push_back({"index", "element"});
  if (elements) {
    r.results["enumerated_size"] = elements->size();
    ordered_json list = ordered_json::array();
    std::size_t idx = 0;
    for (FieldElement b : *elements) {
      list.push_back(field.to_hex(b));
      r.rows.push_back({std::to_string(idx++), field.to_hex(b)});
    }
    r.results["elements"] = list;
    if (elements->size() != closed_form_size)
      r.discrepancies.push_back("enumerated size " + std::to_string(elements->size()) +
                                " differs from closed form " + std::to_string(closed_form_size));
  }
  return r;
}

RunReport make_decompose_report(const Field& field, FieldElement x, const Decomposition& dc) {
  RunReport r;
  r.command = "decompose";
  r.field_spec = field.spec_string();
  const FieldElement back = recompose(dc);
  r.results["x"] = field.to_hex(x);
  r.results["x1"] = field.to_hex(dc.x1);
  r.results["x2"] = field.to_hex(dc.x2);
  r.results["x3"] = field.to_hex(dc.x3);
  r.results["orders"] = {element_order(dc.x1), element_order(dc.x2), element_order(dc.x3)};
  r.results["recomposed"] = field.to_hex(back);
  if (back != x) r.discrepancies.push_back("recomposition mismatch");

  r.rows.push_back({"component", "value", "order"});
  r.rows.push_back({"x", field.to_hex(x), std::to_string(element_order(x))});
  r.rows.push_back({"x1", field.to_hex(dc.x1), std::to_string(element_order(dc.x1))});
  r.rows.push_back({"x2", field.to_hex(dc.x2), std::to_string(element_order(dc.x2))});
  r.rows.push_back({"x3", field.to_hex(dc.x3), std::to_string(element_order(dc.x3))});
  return r;
}

RunReport make_verify_report(const Field& field, const VerifyReport& vr) {
  RunReport r;
  r.command = "verify";
  r.field_spec = field.spec_string();
  ordered_json checks = ordered_json::array();
  r.rows.push_back({"check", "pass", "detail"});
  for (const CheckResult& c : vr.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    r.rows.push_back({c.name, c.pass ? "true" : "false", c.detail});
  }
  r.results["n"] = field.quartic_n();
  r.results["checks"] = checks;
  r.discrepancies = vr.discrepancies;
  return r;
}

}  // namespace diffspec
