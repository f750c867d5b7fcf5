#pragma once

#include <posmon/integer.hpp>

#include <array>
#include <map>
#include <string>

namespace posmon {

// The seven tracked properties. Antimatter is kept as its own flag because a
// non-atomic monoid need not be antimatter; the other six form the chain
// UFM => HFM => BFM, UFM => FFM => BFM => ACCP => atomic.
enum class Property { Antimatter, Atomic, Accp, Bfm, Ffm, Hfm, Ufm };

inline constexpr std::array<Property, 7> kAllProperties = {
    Property::Antimatter, Property::Atomic, Property::Accp, Property::Bfm,
    Property::Ffm,        Property::Hfm,    Property::Ufm};

const char* property_name(Property p);

enum class TruthValue { Yes, No, Unknown };

const char* truth_value_name(TruthValue v);

struct Verdict {
    TruthValue value = TruthValue::Unknown;
    std::string provenance;
    // Flat structured witness, rendered verbatim into reports. Ordered map
    // keeps output deterministic.
    std::map<std::string, std::string> witness;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Rank {
    enum class Kind { Finite, CountablyInfinite, Unknown };
    Kind kind = Kind::Unknown;
    Int value = 0;  // meaningful for Finite only

    static Rank finite(const Int& v) { return Rank{Kind::Finite, v}; }
    static Rank countably_infinite() { return Rank{Kind::CountablyInfinite, 0}; }
    static Rank unknown() { return Rank{Kind::Unknown, 0}; }

    Rank operator+(const Rank& other) const;
    std::string to_string() const;

    friend bool operator==(const Rank&, const Rank&) = default;
};

// Caller-declared assumptions the verdicts inherit.
struct TrustFlags {
    bool asserted_irreducibility = false;
    bool declared_independence = false;
    bool declared_transcendence = false;

    TrustFlags merged(const TrustFlags& other) const {
        return TrustFlags{asserted_irreducibility || other.asserted_irreducibility,
                          declared_independence || other.declared_independence,
                          declared_transcendence || other.declared_transcendence};
    }

    friend bool operator==(const TrustFlags&, const TrustFlags&) = default;
};

struct ClassificationReport {
    std::map<Property, Verdict> verdicts;  // one entry per property, always
    Rank rank;
    TrustFlags trust;
    // For unknown verdicts: the budget that was exhausted, if a search ran.
    std::string budget_note;

    ClassificationReport();

    const Verdict& verdict(Property p) const { return verdicts.at(p); }
    TruthValue value(Property p) const { return verdicts.at(p).value; }
    void set(Property p, TruthValue v, std::string provenance,
             std::map<std::string, std::string> witness = {});
    bool has_unknown() const;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

// Least fixed point of the implication closure over the chain and the
// antimatter exclusion rule. Throws Error{ContradictoryVerdicts} when a
// property would be forced to both yes and no; the message carries both
// provenances.
ClassificationReport propagate(ClassificationReport report);

}  // namespace posmon
