#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffspec/equation.hpp"
#include "diffspec/field.hpp"
#include "diffspec/spectrum.hpp"

namespace diffspec {

enum class OutputFormat { Json, Csv, Table };

OutputFormat parse_output_format(const std::string& name);

/// One command execution: the machine payload plus tabular rows for the
/// csv/table renderings. Exit status is 0 iff discrepancies is empty.
struct RunReport {
  std::string command;
  std::string field_spec;
  nlohmann::ordered_json results;
  std::vector<std::vector<std::string>> rows;  // rows[0] is the header
  std::vector<std::string> discrepancies;
  std::int64_t elapsed_ms = 0;

  int exit_code() const { return discrepancies.empty() ? 0 : 1; }
};

/// Renders the report. Timing is emitted only when include_timing is set,
/// keeping json/csv output byte-identical across runs and --jobs values.
std::string render_report(const RunReport& report, OutputFormat format, bool include_timing);

RunReport make_spectrum_report(const Field& field, const SpectrumHistogram& h,
                               bool cross_checked, const std::string& note,
                               std::vector<std::string> discrepancies);
RunReport make_solve_report(const Field& field, FieldElement b, BClass cls,
                            std::uint64_t predicted, const std::optional<SolutionSet>& sols,
                            const std::string& note);
RunReport make_lambda_report(const Field& field, std::uint64_t closed_form_size,
                             const std::optional<std::vector<FieldElement>>& elements);
RunReport make_decompose_report(const Field& field, FieldElement x, const Decomposition& dc);
RunReport make_verify_report(const Field& field, const VerifyReport& vr);

}  // namespace diffspec
