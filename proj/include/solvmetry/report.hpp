#pragma once

// Command execution and the "solvmetry.report/1" JSON report.

#include "solvmetry/errors.hpp"
#include "solvmetry/io.hpp"
#include "solvmetry/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace solvmetry {

inline constexpr const char* kReportSchema = "solvmetry.report/1";
inline constexpr const char* kVersion = "0.1.0";

struct RunOptions {
  ToleranceConfig tol;
  /// Recorded in the report metadata only; commands are deterministic.
  std::optional<std::uint64_t> seed;
  std::optional<Subspace> subalgebra;
  std::optional<Subspace> iwasawa;
  std::optional<std::pair<Subspace, Subspace>> lr;
};

enum class RunStatus { Ok = 0, DomainError = 1, InputError = 2, InternalError = 3 };

struct RunOutput {
  RunStatus status = RunStatus::Ok;
  /// The report, pretty-printed with two-space indentation.
  std::string json;
};

std::vector<std::string> command_names();

/// Runs one command. `input` may be null only for "catalog". Never throws;
/// failures are reported in the JSON "error" field and the status.
RunOutput run_command(const std::string& command, const ParsedAlgebra* input, const std::string& source,
                      const RunOptions& options);

/// `input` is a file path or "catalog:<name>". Load failures become an error
/// report. validate loads without the Jacobi check so it can list violations.
RunOutput run_on_input(const std::string& command, const std::string& input, const RunOptions& options);
ParsedAlgebra load_input(const std::string& input, bool check_jacobi = true);

/// Human-readable rendering of a report (or of an array of reports).
/// Throws Error(ParseError) if the text is not JSON.
std::string render_text(const std::string& report_json);

/// Error kind -> status category.
RunStatus status_of(ErrorKind kind);

}  // namespace solvmetry
