#pragma once

#include <posmon/integer.hpp>

#include <algorithm>
#include <vector>

namespace posmon {

// One factorization: multiplicities over a fixed ordered atom list (for
// cyclic semirings the list is the powers in increasing exponent order).
struct Factorization {
    std::vector<Int> multiplicities;

    Int length() const {
        Int total = 0;
        for (const auto& m : multiplicities) total += m;
        return total;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
    friend bool operator<(const Factorization& a, const Factorization& b) {
        return std::lexicographical_compare(a.multiplicities.begin(), a.multiplicities.end(),
                                            b.multiplicities.begin(), b.multiplicities.end());
    }
};

// Z(b): complete=true only when the enumeration bounds prove exhaustion.
struct FactorizationSet {
    std::vector<Factorization> items;  // sorted lexicographically
    bool complete = true;

    friend bool operator==(const FactorizationSet&, const FactorizationSet&) = default;
};

// L(b): sorted distinct lengths.
struct LengthSet {
    std::vector<Int> lengths;
    bool complete = true;

    friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

inline LengthSet lengths_of(const FactorizationSet& z) {
    LengthSet out;
    out.complete = z.complete;
    for (const auto& f : z.items) out.lengths.push_back(f.length());
    std::sort(out.lengths.begin(), out.lengths.end());
    out.lengths.erase(std::unique(out.lengths.begin(), out.lengths.end()), out.lengths.end());
    return out;
}

}  // namespace posmon
