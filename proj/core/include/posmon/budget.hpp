#pragma once

#include <posmon/integer.hpp>

namespace posmon {

// Knobs for the bounded searches. Every verdict that depends on an exhausted
// search reports the budget it ran under.
struct SearchBudget {
    // Antimatter witness search: quotient-polynomial degree and coefficient
    // height bounds.
    unsigned witness_degree = 8;
    Int witness_height = 64;
    // Highest power tried when sigma is probed through classification paths.
    unsigned sigma_max = 8;
    // Hard node cap for the depth-first searches.
    long long node_cap = 2'000'000;
    // Enclosure refinement steps allowed per sign decision.
    int refine_steps = 64;

    std::string describe() const {
        return "deg<=" + std::to_string(witness_degree) + ", height<=" + witness_height.str() +
               ", sigma_max=" + std::to_string(sigma_max);
    }
};

}  // namespace posmon
