#include <gtest/gtest.h>

#include <sstream>

#include "carand/bitio.hpp"
#include "carand/report.hpp"

namespace carand {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const BatteryReport& sample() {
  static const BatteryReport report = [] {
    BatteryConfig c;
    c.stream_length = 20000;
    c.streams = 4;
    c.rules = {30, 54, 73, 110};
    std::vector<RuleCorpus> corpora;
    for (int rule : c.rules) {
      GenSpec spec;
      spec.rule = rule;
      spec.sequences = 8;
      corpora.push_back({rule, generate_corpus_bits(spec)});
    }
    // One deliberately short corpus.
    corpora[3].bits.truncate(1000);
    return run_battery(corpora, c);
  }();
  return report;
}

TEST(TextReport, ShapeFifteenByFour) {
  const auto text = render_report(sample(), ReportFormat::text);
  const auto l = lines(text);
  // header + 15 tests + approved row + incomplete note
  ASSERT_EQ(l.size(), 18u);
  EXPECT_EQ(l[0].rfind("Test", 0), 0u);
  for (const char* r : {"30", "54", "73", "110"}) EXPECT_NE(l[0].find(r), std::string::npos);
  for (std::size_t t = 0; t < 15; ++t) {
    EXPECT_EQ(l[t + 1].rfind(std::string(sts::display_name(sts::kAllTests[t])), 0), 0u) << l[t + 1];
  }
  EXPECT_EQ(l[16].rfind("Approved", 0), 0u);
  EXPECT_EQ(l[17].rfind("rule 110 incomplete", 0), 0u);
  // Universal needs far more than 20000 bits: inapplicable everywhere.
  EXPECT_NE(l[9].find("—"), std::string::npos);
}

TEST(TextReport, EmptyReportIsHeaderOnly) {
  BatteryReport empty;
  EXPECT_EQ(lines(render_report(empty, ReportFormat::text)).size(), 1u);
  EXPECT_EQ(render_report(empty, ReportFormat::csv), "test,rule,proportion,uniformity_p,verdict\n");
}

TEST(CsvReport, RowsAndEmptyFields) {
  const auto l = lines(render_report(sample(), ReportFormat::csv));
  ASSERT_EQ(l.size(), 1u + 15u * 4u);
  EXPECT_EQ(l[0], "test,rule,proportion,uniformity_p,verdict");
  EXPECT_EQ(l[1].rfind("frequency,30,", 0), 0u);
  for (std::size_t i = 1; i < l.size(); ++i) {
    EXPECT_EQ(std::count(l[i].begin(), l[i].end(), ','), 4) << l[i];
    if (l[i].ends_with(",inapplicable")) EXPECT_NE(l[i].find(",,,"), std::string::npos) << l[i];
  }
}

TEST(JsonReport, RoundTrip) {
  const auto json = render_report(sample(), ReportFormat::json);
  EXPECT_EQ(parse_report_json(json), sample());
  EXPECT_EQ(render_report(parse_report_json(json), ReportFormat::json), json);
}

TEST(JsonReport, MalformedInput) {
  EXPECT_THROW(parse_report_json("{"), FormatError);
  EXPECT_THROW(parse_report_json(R"({"format":"something-else"})"), FormatError);
  EXPECT_THROW(parse_report_json("[]"), FormatError);
}

TEST(Bundle, RoundTripAndText) {
  ReproduceBundle b;
  b.repeats = {sample(), sample()};
  b.modal = modal_report(b.repeats);
  b.ordering = {true, false};
  const auto json = render_bundle(b, ReportFormat::json);
  EXPECT_EQ(parse_bundle_json(json), b);
  EXPECT_THROW(parse_report_json(json), FormatError);
  const auto text = render_bundle(b, ReportFormat::text);
  EXPECT_NE(text.find("Approved per repeat"), std::string::npos);
  EXPECT_NE(text.find("NOT ordered"), std::string::npos);
}

TEST(Formats, Names) {
  for (auto f : {ReportFormat::text, ReportFormat::csv, ReportFormat::json}) {
    EXPECT_EQ(parse_report_format(to_string(f)), f);
  }
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace carand
