#pragma once

// Wire formats: the polynomial expression grammar, system files and
// JSON / text reports.
//
// Expressions use variables s1..sN, integer and rational literals (3, -4/7),
// + - *, ^ with an integer exponent (s1^-2 and s1^(-2) both work) and
// parentheses. There is no division operator; Laurent inverses are written
// with negative exponents.
//
// A system file starts with a header line "n k l" followed by l lines of k
// expressions separated by ';'. '#' starts a comment.

#include <string>
#include <string_view>

#include <json.hpp>

#include "autonomy/behavior.hpp"
#include "autonomy/control.hpp"
#include "autonomy/degree.hpp"
#include "autonomy/genericity.hpp"
#include "autonomy/laurent.hpp"

namespace autonomy {

using Json = nlohmann::ordered_json;

// Throws ParseError (with a 0-based offset into `text`) on bad syntax or a
// variable index outside 1..n; PreconditionError never escapes.
LaurentPoly parse_poly(std::string_view text, std::size_t n);
// Canonical form, e.g. "3*s1^2*s2^-1 - 4", "-s1", "4/7*s1", "0".
std::string format_poly(const LaurentPoly& p);

SystemMatrix parse_system(std::string_view text);
std::string format_system(const SystemMatrix& m);

enum class ReportFormat { Json, Text };
ReportFormat parse_report_format(std::string_view name);

Json degree_to_json(DegreeValue d);
DegreeValue degree_from_json(const Json& j);

Json to_json(const AutonomyReport& r);
Json to_json(const StrengthReport& r);
Json to_json(const ExperimentStats& s);

AutonomyReport autonomy_report_from_json(const Json& j);
StrengthReport strength_report_from_json(const Json& j);
ExperimentStats experiment_stats_from_json(const Json& j);

// JSON is pretty-printed with two-space indent. Text is one "key: value"
// line per field; lists continue on indented lines below their key. Both end
// with a newline.
std::string write_report(const AutonomyReport& r, ReportFormat format);
std::string write_report(const StrengthReport& r, ReportFormat format);
std::string write_report(const ExperimentStats& s, ReportFormat format);

// Inverse of the text layout, producing the same object as the JSON writer.
Json parse_text_report(std::string_view text);
// Accepts either layout.
Json parse_report(std::string_view text);

}  // namespace autonomy
