#include "carand/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace carand {

using nlohmann::json;

namespace {

constexpr std::size_t kNameColumn = 40;
constexpr std::size_t kCellColumn = 6;

std::string fixed(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Pads by display columns; "—" is three bytes wide in UTF-8.
std::string pad(std::string_view text, std::size_t columns) {
  std::size_t shown = 0;
  for (unsigned char c : text) shown += (c & 0xC0) != 0x80;
  std::string out(text);
  if (shown < columns) out.append(columns - shown, ' ');
  return out;
}

void render_text(std::ostringstream& out, const BatteryReport& report) {
  out << pad("Test", kNameColumn);
  for (const auto& r : report.rules) out << pad(std::to_string(r.rule), kCellColumn);
  out << "\n";
  if (report.rules.empty()) return;
  for (std::size_t t = 0; t < sts::kAllTests.size(); ++t) {
    out << pad(sts::display_name(sts::kAllTests[t]), kNameColumn);
    for (const auto& r : report.rules) out << pad(symbol(r.tests.at(t).verdict), kCellColumn);
    out << "\n";
  }
  out << pad("Approved", kNameColumn);
  for (const auto& r : report.rules) {
    out << pad(std::to_string(r.count(Verdict::approved)), kCellColumn);
  }
  out << "\n";
  for (const auto& r : report.rules) {
    if (!r.complete) out << "rule " << r.rule << " incomplete: " << r.error << "\n";
  }
}

void render_csv(std::ostringstream& out, const BatteryReport& report) {
  out << "test,rule,proportion,uniformity_p,verdict\n";
  for (std::size_t t = 0; t < sts::kAllTests.size(); ++t) {
    for (const auto& r : report.rules) {
      const auto& s = r.tests.at(t);
      out << sts::key(s.id) << ',' << r.rule << ',';
      if (s.verdict != Verdict::inapplicable) {
        out << fixed(s.proportion, "%.6f") << ',' << fixed(s.uniformity_p, "%.6g");
      } else {
        out << ',';
      }
      out << ',' << to_string(s.verdict) << "\n";
    }
  }
}

json band_json(const ProportionBand& b) { return json{{"lower", b.lower}, {"upper", b.upper}}; }

ProportionBand band_from(const json& j) {
  return {j.at("lower").get<double>(), j.at("upper").get<double>()};
}

json config_json(const BatteryConfig& c) {
  const auto& p = c.params;
  return json{
      {"rules", c.rules},
      {"stream_length", c.stream_length},
      {"streams", c.streams},
      {"alpha", c.alpha},
      {"uniformity_threshold", c.uniformity_threshold},
      {"params",
       {{"alpha", p.alpha},
        {"block_frequency_m", p.block_frequency_m},
        {"non_overlapping_m", p.non_overlapping_m},
        {"overlapping_m", p.overlapping_m},
        {"overlapping_block", p.overlapping_block},
        {"universal_l", p.universal_l},
        {"universal_q", p.universal_q},
        {"linear_complexity_m", p.linear_complexity_m},
        {"serial_m", p.serial_m},
        {"apen_m", p.apen_m},
        {"enforce_minimums", p.enforce_minimums}}},
  };
}

BatteryConfig config_from(const json& j) {
  BatteryConfig c;
  c.rules = j.at("rules").get<std::vector<int>>();
  c.stream_length = j.at("stream_length").get<std::size_t>();
  c.streams = j.at("streams").get<std::size_t>();
  c.alpha = j.at("alpha").get<double>();
  c.uniformity_threshold = j.at("uniformity_threshold").get<double>();
  const auto& p = j.at("params");
  c.params.alpha = p.at("alpha").get<double>();
  c.params.block_frequency_m = p.at("block_frequency_m").get<std::size_t>();
  c.params.non_overlapping_m = p.at("non_overlapping_m").get<std::size_t>();
  c.params.overlapping_m = p.at("overlapping_m").get<std::size_t>();
  c.params.overlapping_block = p.at("overlapping_block").get<std::size_t>();
  c.params.universal_l = p.at("universal_l").get<unsigned>();
  c.params.universal_q = p.at("universal_q").get<std::size_t>();
  c.params.linear_complexity_m = p.at("linear_complexity_m").get<std::size_t>();
  c.params.serial_m = p.at("serial_m").get<std::size_t>();
  c.params.apen_m = p.at("apen_m").get<std::size_t>();
  c.params.enforce_minimums = p.at("enforce_minimums").get<bool>();
  return c;
}

json aggregate_json(const Aggregate& a) {
  return json{{"count", a.count},
              {"passed", a.passed},
              {"proportion", a.proportion},
              {"band", band_json(a.band)},
              {"proportion_ok", a.proportion_ok},
              {"uniformity_p", a.uniformity_p},
              {"uniformity_ok", a.uniformity_ok}};
}

Aggregate aggregate_from(const json& j) {
  Aggregate a;
  a.count = j.at("count").get<std::size_t>();
  a.passed = j.at("passed").get<std::size_t>();
  a.proportion = j.at("proportion").get<double>();
  a.band = band_from(j.at("band"));
  a.proportion_ok = j.at("proportion_ok").get<bool>();
  a.uniformity_p = j.at("uniformity_p").get<double>();
  a.uniformity_ok = j.at("uniformity_ok").get<bool>();
  return a;
}

json summary_json(const TestSummary& s) {
  json subtests = json::array();
  for (const auto& a : s.subtests) subtests.push_back(aggregate_json(a));
  return json{{"test", sts::key(s.id)},
              {"verdict", to_string(s.verdict)},
              {"applicable_streams", s.applicable_streams},
              {"proportion", s.proportion},
              {"band", band_json(s.band)},
              {"uniformity_p", s.uniformity_p},
              {"note", s.note},
              {"subtests", subtests},
              {"stream_p_values", s.stream_p_values}};
}

TestSummary summary_from(const json& j) {
  TestSummary s;
  s.id = sts::parse_test_id(j.at("test").get<std::string>());
  s.verdict = parse_verdict(j.at("verdict").get<std::string>());
  s.applicable_streams = j.at("applicable_streams").get<std::size_t>();
  s.proportion = j.at("proportion").get<double>();
  s.band = band_from(j.at("band"));
  s.uniformity_p = j.at("uniformity_p").get<double>();
  s.note = j.at("note").get<std::string>();
  for (const auto& a : j.at("subtests")) s.subtests.push_back(aggregate_from(a));
  s.stream_p_values = j.at("stream_p_values").get<std::vector<std::vector<double>>>();
  return s;
}

json report_json(const BatteryReport& report) {
  json rules = json::array();
  for (const auto& r : report.rules) {
    json tests = json::array();
    for (const auto& t : r.tests) tests.push_back(summary_json(t));
    rules.push_back(
        json{{"rule", r.rule}, {"complete", r.complete}, {"error", r.error}, {"tests", tests}});
  }
  return json{{"format", "carand-battery-report"},
              {"version", 1},
              {"config", config_json(report.config)},
              {"rules", rules}};
}

BatteryReport report_from(const json& j) {
  if (j.at("format").get<std::string>() != "carand-battery-report") {
    throw FormatError("not a battery report");
  }
  BatteryReport report;
  report.config = config_from(j.at("config"));
  for (const auto& r : j.at("rules")) {
    RuleReport rule;
    rule.rule = r.at("rule").get<int>();
    rule.complete = r.at("complete").get<bool>();
    rule.error = r.at("error").get<std::string>();
    for (const auto& t : r.at("tests")) rule.tests.push_back(summary_from(t));
    if (rule.tests.size() != sts::kAllTests.size()) throw FormatError("rule report is missing tests");
    report.rules.push_back(std::move(rule));
  }
  return report;
}

template <typename F>
auto parse_guarded(std::string_view text, F&& body) {
  try {
    return body(json::parse(text));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid report: ") + e.what());
  }
}

}  // namespace

std::string_view to_string(ReportFormat f) {
  switch (f) {
    case ReportFormat::text: return "text";
    case ReportFormat::csv: return "csv";
    case ReportFormat::json: return "json";
  }
  return "?";
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::text;
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "'");
}

std::string render_report(const BatteryReport& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::text: render_text(out, report); break;
    case ReportFormat::csv: render_csv(out, report); break;
    case ReportFormat::json: out << report_json(report).dump(2) << "\n"; break;
  }
  return out.str();
}

BatteryReport parse_report_json(std::string_view text) {
  return parse_guarded(text, [](const json& j) { return report_from(j); });
}

std::string render_bundle(const ReproduceBundle& bundle, ReportFormat format) {
  if (format == ReportFormat::json) {
    json repeats = json::array();
    for (const auto& r : bundle.repeats) repeats.push_back(report_json(r));
    json j{{"format", "carand-reproduce-bundle"},
           {"version", 1},
           {"modal", report_json(bundle.modal)},
           {"repeats", repeats},
           {"ordering", bundle.ordering}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << render_report(bundle.modal, format);
  if (format == ReportFormat::text) {
    out << "\nApproved per repeat\n";
    for (std::size_t i = 0; i < bundle.repeats.size(); ++i) {
      out << pad("repeat " + std::to_string(i), kNameColumn);
      for (const auto& r : bundle.repeats[i].rules) {
        out << pad(std::to_string(r.count(Verdict::approved)), kCellColumn);
      }
      out << (bundle.ordering.at(i) ? "ordered" : "NOT ordered") << "\n";
    }
  }
  return out.str();
}

ReproduceBundle parse_bundle_json(std::string_view text) {
  return parse_guarded(text, [](const json& j) {
    if (j.at("format").get<std::string>() != "carand-reproduce-bundle") {
      throw FormatError("not a reproduce bundle");
    }
    ReproduceBundle b;
    b.modal = report_from(j.at("modal"));
    for (const auto& r : j.at("repeats")) b.repeats.push_back(report_from(r));
    b.ordering = j.at("ordering").get<std::vector<bool>>();
    return b;
  });
}

}  // namespace carand
