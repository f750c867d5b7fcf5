#include <posmon/spec_io.hpp>

#include <posmon/error.hpp>

#include <json.hpp>

#include <sstream>

namespace posmon {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    fail(ErrorCode::ParseError, where + ": " + what);
}

void reject_unknown_keys(const Json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) parse_fail(where, "unknown key '" + key + "'");
    }
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (!j.is_string()) parse_fail(where, "expected a rational \"a/b\" string");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const Error& e) {
        parse_fail(where, e.what());
    }
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return int_from_string(j.get<std::string>());
        } catch (const Error& e) {
            parse_fail(where, e.what());
        }
    }
    parse_fail(where, "expected an integer");
}

Json int_to_json(const Int& v) {
    static const Int kMax = Int(1) << 53;
    if (int_abs(v) <= kMax) return Json(static_cast<long long>(v));
    return Json(v.str());
}

AlgebraicReal constant_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an object describing the constant");
    if (j.contains("rational")) {
        reject_unknown_keys(j, where, {"rational"});
        return AlgebraicReal::from_rational(rational_from_json(j.at("rational"), where));
    }
    if (j.contains("minpoly")) {
        reject_unknown_keys(j, where, {"minpoly", "interval"});
        if (!j.contains("interval")) parse_fail(where, "minpoly needs an \"interval\" [lo, hi]");
        const Json& coeffs = j.at("minpoly");
        if (!coeffs.is_array() || coeffs.empty())
            parse_fail(where, "minpoly must be a nonempty coefficient array, constant term first");
        std::vector<Int> c;
        for (const auto& e : coeffs) c.push_back(int_from_json(e, where + ".minpoly"));
        const Json& iv = j.at("interval");
        if (!iv.is_array() || iv.size() != 2) parse_fail(where, "interval must be [lo, hi]");
        Rational lo = rational_from_json(iv[0], where + ".interval");
        Rational hi = rational_from_json(iv[1], where + ".interval");
        return alg_make(IntPolynomial(std::move(c)), lo, hi);
    }
    if (j.contains("transcendental")) {
        reject_unknown_keys(j, where, {"transcendental", "enclosure"});
        std::string label = j.at("transcendental").is_string()
                                ? j.at("transcendental").get<std::string>()
                                : std::string();
        if (label.empty()) parse_fail(where, "transcendental label must be a nonempty string");
        EnclosureRefiner refiner;
        Rational lo, hi;
        bool have_enclosure = false;
        if (j.contains("enclosure")) {
            const Json& enc = j.at("enclosure");
            if (!enc.is_array() || enc.size() != 2) parse_fail(where, "enclosure must be [lo, hi]");
            lo = rational_from_json(enc[0], where + ".enclosure");
            hi = rational_from_json(enc[1], where + ".enclosure");
            have_enclosure = true;
        }
        if (label == "pi") {
            if (!have_enclosure) return make_pi();
            auto [plo, phi] = pi_enclosure(16);
            if (hi <= plo || lo >= phi)
                parse_fail(where, "the declared enclosure does not contain pi");
            return AlgebraicReal::transcendental(label, lo, hi, pi_refiner());
        }
        if (!have_enclosure)
            parse_fail(where, "a transcendental other than \"pi\" needs an explicit enclosure");
        return AlgebraicReal::transcendental(label, lo, hi);
    }
    parse_fail(where, "constant needs one of \"rational\", \"minpoly\", \"transcendental\"");
}

Json constant_to_json(const AlgebraicReal& a) {
    Json j = Json::object();
    switch (a.kind()) {
        case AlgebraicKind::Rational:
            j["rational"] = a.rational_value().to_string();
            break;
        case AlgebraicKind::Algebraic: {
            Json coeffs = Json::array();
            for (const auto& c : a.minpoly().coefficients()) coeffs.push_back(int_to_json(c));
            j["minpoly"] = std::move(coeffs);
            j["interval"] = Json::array({a.lo().to_string(), a.hi().to_string()});
            break;
        }
        case AlgebraicKind::Transcendental:
            j["transcendental"] = a.label();
            j["enclosure"] = Json::array({a.lo().to_string(), a.hi().to_string()});
            break;
    }
    return j;
}

MonoidSpec monoid_from_json(const Json& j, const std::string& where);

MonoidSpec cyclic_from_json(const Json& j, const std::string& where) {
    reject_unknown_keys(j, where, {"kind", "alpha"});
    if (!j.contains("alpha")) parse_fail(where, "cyclic needs \"alpha\"");
    return MonoidSpec{CyclicSpec{constant_from_json(j.at("alpha"), where + ".alpha")}};
}

MonoidSpec fg_from_json(const Json& j, const std::string& where) {
    reject_unknown_keys(j, where, {"kind", "basis", "generators"});
    if (!j.contains("basis") || !j.at("basis").is_array() || j.at("basis").empty())
        parse_fail(where, "fg needs a nonempty \"basis\" array");
    if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
        parse_fail(where, "fg needs a nonempty \"generators\" array");
    FgSpec spec;
    std::size_t i = 0;
    for (const auto& c : j.at("basis"))
        spec.basis_constants.push_back(
            constant_from_json(c, where + ".basis[" + std::to_string(i++) + "]"));
    i = 0;
    for (const auto& g : j.at("generators")) {
        if (!g.is_array())
            parse_fail(where, "generator " + std::to_string(i) + " must be an array of rationals");
        Coordinates coords;
        for (const auto& e : g)
            coords.push_back(rational_from_json(e, where + ".generators[" + std::to_string(i) + "]"));
        spec.generators.push_back(std::move(coords));
        ++i;
    }
    return MonoidSpec{std::move(spec)};
}

MonoidSpec unit_fraction_from_json(const Json& j, const std::string& where) {
    reject_unknown_keys(j, where, {"kind", "rule"});
    if (!j.contains("rule")) parse_fail(where, "unit_fraction needs \"rule\"");
    const Json& rule = j.at("rule");
    if (rule.is_string()) {
        if (rule.get<std::string>() != "primes")
            parse_fail(where, "rule must be \"primes\" or an explicit modulus list");
        return MonoidSpec{UnitFractionSpec{UnitFractionScheme::primes()}};
    }
    if (rule.is_array()) {
        std::vector<Int> moduli;
        for (const auto& e : rule) moduli.push_back(int_from_json(e, where + ".rule"));
        return MonoidSpec{UnitFractionSpec{UnitFractionScheme::explicit_list(std::move(moduli))}};
    }
    parse_fail(where, "rule must be \"primes\" or an explicit modulus list");
}

MonoidSpec interval_from_json(const Json& j, const std::string& where, bool is_ms) {
    if (is_ms) {
        reject_unknown_keys(j, where, {"kind", "s"});
        if (!j.contains("s")) parse_fail(where, "interval_ms needs \"s\"");
        return MonoidSpec{
            IntervalSpec{IntervalMonoidSpec::ms(rational_from_json(j.at("s"), where + ".s"))}};
    }
    reject_unknown_keys(j, where, {"kind", "r"});
    if (!j.contains("r")) parse_fail(where, "interval_sr needs \"r\"");
    return MonoidSpec{
        IntervalSpec{IntervalMonoidSpec::sr(rational_from_json(j.at("r"), where + ".r"))}};
}

MonoidSpec direct_sum_from_json(const Json& j, const std::string& where) {
    reject_unknown_keys(j, where, {"kind", "parts"});
    if (!j.contains("parts") || !j.at("parts").is_array() || j.at("parts").empty())
        parse_fail(where, "direct_sum needs a nonempty \"parts\" array");
    DirectSumSpec spec;
    std::size_t i = 0;
    for (const auto& part : j.at("parts"))
        spec.parts.push_back(monoid_from_json(part, where + ".parts[" + std::to_string(i++) + "]"));
    return MonoidSpec{std::move(spec)};
}

MonoidSpec monoid_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected a monoid object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        parse_fail(where, "missing \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return cyclic_from_json(j, where);
    if (kind == "fg") return fg_from_json(j, where);
    if (kind == "unit_fraction") return unit_fraction_from_json(j, where);
    if (kind == "interval_ms") return interval_from_json(j, where, true);
    if (kind == "interval_sr") return interval_from_json(j, where, false);
    if (kind == "direct_sum") return direct_sum_from_json(j, where);
    parse_fail(where, "unknown kind '" + kind + "'");
}

Json monoid_to_json(const MonoidSpec& spec) {
    Json j = Json::object();
    if (const auto* cyclic = std::get_if<CyclicSpec>(&spec.value)) {
        j["kind"] = "cyclic";
        j["alpha"] = constant_to_json(cyclic->alpha);
    } else if (const auto* fg = std::get_if<FgSpec>(&spec.value)) {
        j["kind"] = "fg";
        Json basis = Json::array();
        for (const auto& c : fg->basis_constants) basis.push_back(constant_to_json(c));
        j["basis"] = std::move(basis);
        Json gens = Json::array();
        for (const auto& g : fg->generators) {
            Json row = Json::array();
            for (const auto& c : g) row.push_back(c.to_string());
            gens.push_back(std::move(row));
        }
        j["generators"] = std::move(gens);
    } else if (const auto* uf = std::get_if<UnitFractionSpec>(&spec.value)) {
        j["kind"] = "unit_fraction";
        if (uf->scheme.is_primes()) {
            j["rule"] = "primes";
        } else {
            Json rule = Json::array();
            for (const auto& d : uf->scheme.known_prefix()) rule.push_back(int_to_json(d));
            j["rule"] = std::move(rule);
        }
    } else if (const auto* interval = std::get_if<IntervalSpec>(&spec.value)) {
        if (interval->interval.kind == IntervalMonoidSpec::Kind::Ms) {
            j["kind"] = "interval_ms";
            j["s"] = interval->interval.parameter.to_string();
        } else {
            j["kind"] = "interval_sr";
            j["r"] = interval->interval.parameter.to_string();
        }
    } else if (const auto* sum = std::get_if<DirectSumSpec>(&spec.value)) {
        j["kind"] = "direct_sum";
        Json parts = Json::array();
        for (const auto& part : sum->parts) parts.push_back(monoid_to_json(part));
        j["parts"] = std::move(parts);
    }
    return j;
}

}  // namespace

MonoidSpec parse_spec(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) parse_fail("document", "expected a JSON object");
    reject_unknown_keys(doc, "document", {"monoid"});
    if (!doc.contains("monoid")) parse_fail("document", "missing top-level \"monoid\"");
    return monoid_from_json(doc.at("monoid"), "monoid");
}

std::string serialize_spec(const MonoidSpec& spec) {
    Json doc = Json::object();
    doc["monoid"] = monoid_to_json(spec);
    return doc.dump(2);
}

std::string describe_monoid(const MonoidSpec& spec) {
    if (const auto* cyclic = std::get_if<CyclicSpec>(&spec.value))
        return "cyclic semiring over " + cyclic->alpha.describe();
    if (const auto* fg = std::get_if<FgSpec>(&spec.value)) {
        std::ostringstream os;
        os << "finitely generated monoid, " << fg->generators.size() << " generator(s) over basis (";
        for (std::size_t i = 0; i < fg->basis_constants.size(); ++i) {
            if (i) os << ", ";
            os << fg->basis_constants[i].describe();
        }
        os << ")";
        return os.str();
    }
    if (const auto* uf = std::get_if<UnitFractionSpec>(&spec.value)) return uf->scheme.describe();
    if (const auto* interval = std::get_if<IntervalSpec>(&spec.value)) {
        if (interval->interval.kind == IntervalMonoidSpec::Kind::Ms)
            return "interval monoid {0} u [s, inf) with s = " +
                   interval->interval.parameter.to_string();
        return "interval monoid N0 u [r, inf) with r = " + interval->interval.parameter.to_string();
    }
    if (const auto* sum = std::get_if<DirectSumSpec>(&spec.value)) {
        std::ostringstream os;
        os << "direct sum of " << sum->parts.size() << " part(s)";
        return os.str();
    }
    return "monoid";
}

namespace {

Json verdict_to_json(const Verdict& v) {
    Json j = Json::object();
    j["value"] = truth_value_name(v.value);
    j["provenance"] = v.provenance;
    Json w = Json::object();
    for (const auto& [key, value] : v.witness) w[key] = value;
    j["witness"] = std::move(w);
    return j;
}

}  // namespace

std::string render_report_json(const MonoidSpec& spec, const ClassificationReport& report,
                               const SearchBudget& budget) {
    Json doc = Json::object();
    doc["monoid"] = monoid_to_json(spec);
    Json verdicts = Json::object();
    for (Property p : kAllProperties)
        verdicts[property_name(p)] = verdict_to_json(report.verdict(p));
    doc["verdicts"] = std::move(verdicts);
    doc["rank"] = report.rank.to_string();
    Json trust = Json::object();
    trust["asserted_irreducibility"] = report.trust.asserted_irreducibility;
    trust["declared_independence"] = report.trust.declared_independence;
    trust["declared_transcendence"] = report.trust.declared_transcendence;
    doc["trust"] = std::move(trust);
    Json b = Json::object();
    b["witness_degree"] = budget.witness_degree;
    b["witness_height"] = budget.witness_height.str();
    b["sigma_max"] = budget.sigma_max;
    doc["budget"] = std::move(b);
    doc["budget_note"] = report.budget_note;
    return doc.dump(2);
}

std::string render_report_text(const MonoidSpec& spec, const ClassificationReport& report) {
    std::ostringstream os;
    os << "monoid: " << describe_monoid(spec) << "\n";
    for (Property p : kAllProperties) {
        const Verdict& v = report.verdict(p);
        os << property_name(p) << ": " << truth_value_name(v.value);
        if (!v.provenance.empty()) os << "  (" << v.provenance << ")";
        os << "\n";
        for (const auto& [key, value] : v.witness) os << "    " << key << ": " << value << "\n";
    }
    os << "rank: " << report.rank.to_string() << "\n";
    if (report.trust.asserted_irreducibility)
        os << "trust: irreducibility of a minimal polynomial is asserted, not verified\n";
    if (report.trust.declared_independence)
        os << "trust: linear independence over the rationals is declared by the input\n";
    if (report.trust.declared_transcendence)
        os << "trust: transcendence is declared by the input\n";
    if (!report.budget_note.empty()) os << "budget: " << report.budget_note << "\n";
    return os.str();
}

ClassificationReport parse_report_json(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    ClassificationReport report;
    const Json& verdicts = doc.at("verdicts");
    for (Property p : kAllProperties) {
        const Json& v = verdicts.at(property_name(p));
        Verdict verdict;
        std::string value = v.at("value").get<std::string>();
        verdict.value = value == "yes" ? TruthValue::Yes
                                       : (value == "no" ? TruthValue::No : TruthValue::Unknown);
        verdict.provenance = v.at("provenance").get<std::string>();
        for (const auto& [key, w] : v.at("witness").items())
            verdict.witness[key] = w.get<std::string>();
        report.verdicts[p] = std::move(verdict);
    }
    std::string rank = doc.at("rank").get<std::string>();
    if (rank == "countably_infinite")
        report.rank = Rank::countably_infinite();
    else if (rank == "unknown")
        report.rank = Rank::unknown();
    else
        report.rank = Rank::finite(int_from_string(rank));
    const Json& trust = doc.at("trust");
    report.trust.asserted_irreducibility = trust.at("asserted_irreducibility").get<bool>();
    report.trust.declared_independence = trust.at("declared_independence").get<bool>();
    report.trust.declared_transcendence = trust.at("declared_transcendence").get<bool>();
    report.budget_note = doc.at("budget_note").get<std::string>();
    return report;
}

}  // namespace posmon
