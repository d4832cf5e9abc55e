#pragma once

#include <string>
#include <string_view>

#include "carand/battery.hpp"

namespace carand {

enum class ReportFormat { text, csv, json };

std::string_view to_string(ReportFormat f);
ReportFormat parse_report_format(std::string_view text);

/// text: tests as rows, rules as columns, A / R / — cells, then an
///       approved-count row. No rules gives the header row alone.
/// csv:  test,rule,proportion,uniformity_p,verdict (empty numbers when
///       inapplicable).
/// json: the whole report including per-stream p-values.
std::string render_report(const BatteryReport& report, ReportFormat format);

/// Inverse of render_report(..., json). Throws FormatError.
BatteryReport parse_report_json(std::string_view text);

/// Modal matrix followed by per-repeat approved counts (text/csv), or the
/// whole bundle (json).
std::string render_bundle(const ReproduceBundle& bundle, ReportFormat format);
ReproduceBundle parse_bundle_json(std::string_view text);

}  // namespace carand
