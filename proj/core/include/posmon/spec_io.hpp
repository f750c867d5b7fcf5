#pragma once

#include <posmon/budget.hpp>
#include <posmon/monoid_spec.hpp>
#include <posmon/report.hpp>

#include <string>

namespace posmon {

// Spec-file schema: a JSON document {"monoid": {...}} with "kind" one of
// cyclic | fg | unit_fraction | interval_ms | interval_sr | direct_sum and
// kind-specific fields. Rationals are "a/b" strings; polynomial coefficients
// are integer arrays, constant term first. Unknown keys are rejected.
// Errors: ParseError with field diagnostics, plus the constructors' own
// validation errors.
MonoidSpec parse_spec(const std::string& json_text);

// Canonical serialization; parse(serialize(spec)) == spec.
std::string serialize_spec(const MonoidSpec& spec);

// One-line human description of the monoid.
std::string describe_monoid(const MonoidSpec& spec);

// Deterministic machine report: verdicts with provenance and witnesses, rank,
// trust flags and the budgets in effect. Identical inputs produce
// byte-identical output.
std::string render_report_json(const MonoidSpec& spec, const ClassificationReport& report,
                               const SearchBudget& budget);

// Human-readable report, one property per line.
std::string render_report_text(const MonoidSpec& spec, const ClassificationReport& report);

// Reads back the verdict/rank/trust portion of a rendered report; the
// round-trip parse(render(report)) == report holds.
ClassificationReport parse_report_json(const std::string& json_text);

}  // namespace posmon
