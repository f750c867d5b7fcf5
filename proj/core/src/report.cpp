#include <posmon/report.hpp>

#include <posmon/error.hpp>

#include <utility>
#include <vector>

namespace posmon {

const char* property_name(Property p) {
    switch (p) {
        case Property::Antimatter: return "antimatter";
        case Property::Atomic: return "atomic";
        case Property::Accp: return "accp";
        case Property::Bfm: return "bfm";
        case Property::Ffm: return "ffm";
        case Property::Hfm: return "hfm";
        case Property::Ufm: return "ufm";
    }
    return "?";
}

const char* truth_value_name(TruthValue v) {
    switch (v) {
        case TruthValue::Yes: return "yes";
        case TruthValue::No: return "no";
        case TruthValue::Unknown: return "unknown";
    }
    return "?";
}

Rank Rank::operator+(const Rank& other) const {
    if (kind == Kind::Unknown || other.kind == Kind::Unknown) return unknown();
    if (kind == Kind::CountablyInfinite || other.kind == Kind::CountablyInfinite)
        return countably_infinite();
    return finite(value + other.value);
}

std::string Rank::to_string() const {
    switch (kind) {
        case Kind::Finite: return value.str();
        case Kind::CountablyInfinite: return "countably_infinite";
        case Kind::Unknown: return "unknown";
    }
    return "?";
}

ClassificationReport::ClassificationReport() {
    for (Property p : kAllProperties) verdicts.emplace(p, Verdict{});
}

void ClassificationReport::set(Property p, TruthValue v, std::string provenance,
                               std::map<std::string, std::string> witness) {
    Verdict& slot = verdicts.at(p);
    slot.value = v;
    slot.provenance = std::move(provenance);
    slot.witness = std::move(witness);
}

bool ClassificationReport::has_unknown() const {
    for (const auto& [p, verdict] : verdicts)
        if (verdict.value == TruthValue::Unknown) return true;
    return false;
}

namespace {

// UFM => HFM, UFM => FFM, HFM => BFM, FFM => BFM, BFM => ACCP, ACCP => atomic.
constexpr std::pair<Property, Property> kChain[] = {
    {Property::Ufm, Property::Hfm}, {Property::Ufm, Property::Ffm},
    {Property::Hfm, Property::Bfm}, {Property::Ffm, Property::Bfm},
    {Property::Bfm, Property::Accp}, {Property::Accp, Property::Atomic},
};

}  // namespace

ClassificationReport propagate(ClassificationReport report) {
    auto derive = [&](Property p, TruthValue v, const std::string& provenance) -> bool {
        Verdict& slot = report.verdicts.at(p);
        if (slot.value == v) return false;
        if (slot.value != TruthValue::Unknown) {
            fail(ErrorCode::ContradictoryVerdicts,
                 std::string(property_name(p)) + " forced to both " +
                     truth_value_name(slot.value) + " (" + slot.provenance + ") and " +
                     truth_value_name(v) + " (" + provenance + ")");
        }
        slot.value = v;
        slot.provenance = provenance;
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [from, to] : kChain) {
            if (report.value(from) == TruthValue::Yes && report.value(to) != TruthValue::Yes)
                changed |= derive(to, TruthValue::Yes,
                                  std::string("implied: ") + property_name(from) + " implies " +
                                      property_name(to));
            if (report.value(to) == TruthValue::No && report.value(from) != TruthValue::No)
                changed |= derive(from, TruthValue::No,
                                  std::string("implied: not ") + property_name(to) + " rules out " +
                                      property_name(from));
        }
        // Nonzero monoid: antimatter and atomic exclude each other.
        if (report.value(Property::Antimatter) == TruthValue::Yes &&
            report.value(Property::Atomic) != TruthValue::No)
            changed |= derive(Property::Atomic, TruthValue::No,
                              "implied: an antimatter monoid with a nonzero element is not atomic");
        if (report.value(Property::Atomic) == TruthValue::Yes &&
            report.value(Property::Antimatter) != TruthValue::No)
            changed |= derive(Property::Antimatter, TruthValue::No,
                              "implied: an atomic monoid with a nonzero element has atoms");
    }
    return report;
}

}  // namespace posmon
