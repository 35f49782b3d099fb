#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "qtorus/report.hpp"

using namespace qtorus;

namespace {

int run(std::vector<const char*> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "qtorus");
  std::ostringstream out, err;
  const int rc = run_command(static_cast<int>(args.size()), args.data(), out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

}  // namespace

TEST(Report, ParseFormat) {
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("text"), OutputFormat::Text);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Report, ValidateConfig) {
  RunConfig c;
  c.max_window = 2;
  EXPECT_THROW(validate(c), ContractViolation);
  c.max_window = 4;
  c.degrees = {3};
  EXPECT_THROW(validate(c), ContractViolation);
  c.degrees = {0, 2};
  EXPECT_NO_THROW(validate(c));
}

TEST(Report, ValidateReportRejectsEmptySectors) {
  Json j;
  j["group"] = "Z2";
  j["sectors"] = Json::array();
  EXPECT_THROW(validate_report(j), std::invalid_argument);
  EXPECT_THROW(validate_report(Json::object()), std::invalid_argument);
}

TEST(Report, PipelineFieldsAndMatch) {
  RunConfig c;
  c.group = SubgroupLabel::Z2;
  c.degrees = {2};
  c.max_window = 4;
  RunResult r = run_pipeline(c);
  EXPECT_NO_THROW(validate_report(r.report));
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.report["totals"]["hh2"], 5);
  EXPECT_EQ(r.report["sectors"].size(), 2u);
  EXPECT_EQ(r.report["paper_comparison"]["match"], true);
}

TEST(Report, RenderFormats) {
  RunConfig c;
  c.group = SubgroupLabel::Z3;
  c.degrees = {0};
  c.max_window = 3;
  Json j = run_pipeline(c).report;
  EXPECT_EQ(Json::parse(render(j, OutputFormat::Json)), j);
  const std::string csv = render(j, OutputFormat::Csv);
  EXPECT_EQ(csv.rfind("record,group,label", 0), 0u);
  EXPECT_FALSE(render(j, OutputFormat::Text).empty());
}

TEST(Report, ExitCodes) {
  std::string text;
  EXPECT_EQ(run({"--group", "z2", "--degree", "0", "--window", "3"}, &text), 0);
  EXPECT_NO_THROW(validate_report(Json::parse(text)));
  EXPECT_EQ(run({"--group", "z9"}), 64);
  EXPECT_EQ(run({"--group", "z2", "--window", "2"}), 64);
  EXPECT_EQ(run({"--group", "z2", "--degree", "5"}), 64);
  EXPECT_EQ(run({"--group", "z2", "--bogus"}), 64);
  EXPECT_EQ(run({}), 64);
  EXPECT_EQ(run({"--group", "z2", "--numeric-theta", "1/3"}), 64);
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_EQ(run({"--group", "z2", "--degree", "0", "--window", "3", "--out", "/nonexistent/dir/x.json"}), 1);
}
