#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtorus/cohomology.hpp"
#include "qtorus/linalg.hpp"
#include "qtorus/poisson.hpp"

namespace qtorus {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

/// Throws std::invalid_argument for anything but json, csv or text.
OutputFormat parse_format(const std::string& name);

struct RunConfig {
  SubgroupLabel group = SubgroupLabel::Z2;
  std::vector<int> degrees{0, 1, 2};
  int max_window = 6;
  std::optional<Theta> theta;
  OutputFormat format = OutputFormat::Json;
  std::string out;  // empty: standard output
  bool verify_invariance = false;
  bool poisson = false;
  bool witnesses = false;
};

/// Throws ContractViolation unless max_window >= 3 and every degree is 0..2.
void validate(const RunConfig& config);

struct NumericCheck {
  int matrices = 0;
  int mismatches = 0;
};

struct RunResult {
  Json report;
  bool match = false;  // every expected value reproduced
};

/// Runs the requested pipeline and assembles the report record. With a theta,
/// every engine matrix is also ranked in floating point and compared.
RunResult run_pipeline(const RunConfig& config);

/// Throws std::invalid_argument if the record has no sectors or lacks a
/// required field.
void validate_report(const Json& report);

/// JSON (two-space indent), CSV or plain text rendering of the same record.
std::string render(const Json& report, OutputFormat format);

/// Command-line entry point. Exit codes: 0 all comparisons match, 2 computed
/// with mismatches, 1 internal error, 64 usage error.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qtorus
