#pragma once

#include <posmon/budget.hpp>
#include <posmon/monoid_spec.hpp>
#include <posmon/report.hpp>

namespace posmon {

// Seeds the family-specific facts for the given monoid and closes them under
// the implication chain. A contradiction out of propagate signals an
// implementation bug by design.
ClassificationReport classify(const MonoidSpec& spec, const SearchBudget& budget);

}  // namespace posmon
