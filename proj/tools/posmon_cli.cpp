// Command-line front end: reads a monoid spec file, runs one operation and
// prints a human-readable or machine-readable report.
//
// Exit codes: 0 = fully decided, 2 = the answer contains unknown or truncated
// results, 1 = input error.

#include <posmon/classify.hpp>
#include <posmon/cyclic_semiring.hpp>
#include <posmon/error.hpp>
#include <posmon/spec_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using Json = nlohmann::ordered_json;
using namespace posmon;

struct Options {
    std::string spec_path;
    bool json = false;
    unsigned budget_deg = SearchBudget{}.witness_degree;
    std::string budget_height = SearchBudget{}.witness_height.str();
    unsigned sigma_max = SearchBudget{}.sigma_max;
    std::optional<unsigned> cap;
    std::optional<unsigned> limit;
    std::optional<unsigned> max;
    std::string element;
};

MonoidSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open spec file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

SearchBudget make_budget(const Options& opt) {
    SearchBudget b;
    b.witness_degree = opt.budget_deg;
    b.witness_height = int_from_string(opt.budget_height);
    b.sigma_max = opt.max.value_or(opt.sigma_max);
    return b;
}

Coordinates parse_coordinates(const std::string& text) {
    Coordinates out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(Rational::from_string(item));
    }
    if (out.empty()) fail(ErrorCode::ParseError, "empty element '" + text + "'");
    return out;
}

Json factorization_set_to_json(const FactorizationSet& z) {
    Json out = Json::object();
    Json items = Json::array();
    for (const auto& f : z.items) {
        Json mult = Json::array();
        for (const auto& m : f.multiplicities) mult.push_back(m.str());
        Json item = Json::object();
        item["multiplicities"] = std::move(mult);
        item["length"] = f.length().str();
        items.push_back(std::move(item));
    }
    out["factorizations"] = std::move(items);
    out["complete"] = z.complete;
    return out;
}

Json length_set_to_json(const LengthSet& l) {
    Json out = Json::object();
    Json lengths = Json::array();
    for (const auto& n : l.lengths) lengths.push_back(n.str());
    out["lengths"] = std::move(lengths);
    out["complete"] = l.complete;
    return out;
}

void emit(const Options& opt, const Json& payload, const std::string& text) {
    if (opt.json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

int run_classify(const Options& opt) {
    MonoidSpec spec = load_spec(opt.spec_path);
    SearchBudget budget = make_budget(opt);
    ClassificationReport report = classify(spec, budget);
    if (opt.json)
        std::cout << render_report_json(spec, report, budget) << "\n";
    else
        std::cout << render_report_text(spec, report);
    return report.has_unknown() ? 2 : 0;
}

int run_atoms(const Options& opt) {
    MonoidSpec spec = load_spec(opt.spec_path);
    SearchBudget budget = make_budget(opt);
    unsigned limit = opt.limit.value_or(8);
    Json payload = Json::object();
    payload["monoid"] = Json::parse(serialize_spec(spec))["monoid"];
    std::ostringstream text;
    text << "monoid: " << describe_monoid(spec) << "\n";
    int exit_code = 0;

    if (const auto* cyclic = std::get_if<CyclicSpec>(&spec.value)) {
        AtomDescription atoms = cs_atoms(cyclic->alpha, budget);
        switch (atoms.kind) {
            case AtomDescription::Kind::AllPowers:
                payload["atoms"] = "all powers a^n";
                text << "atoms: all powers a^n (" << atoms.note << ")\n";
                break;
            case AtomDescription::Kind::PowersBelow:
                payload["atoms"] = "powers a^n for n < " + std::to_string(atoms.sigma);
                payload["sigma"] = atoms.sigma;
                text << "atoms: a^n for n < " << atoms.sigma << "\n";
                break;
            case AtomDescription::Kind::AllPowersUpTo:
                payload["atoms"] =
                    "powers a^n at least for n <= " + std::to_string(atoms.bound) + "; beyond unknown";
                text << "atoms: a^n at least for n <= " << atoms.bound << "; beyond unknown ("
                     << atoms.note << ")\n";
                exit_code = 2;
                break;
            case AtomDescription::Kind::None:
                payload["atoms"] = "none (antimatter)";
                if (atoms.witness) payload["witness"] = atoms.witness->relation();
                text << "atoms: none (antimatter";
                if (atoms.witness) text << ", " << atoms.witness->relation();
                text << ")\n";
                break;
            case AtomDescription::Kind::Undecided:
                payload["atoms"] = "undecided";
                text << "atoms: undecided (" << atoms.note << ")\n";
                exit_code = 2;
                break;
        }
        payload["complete"] = atoms.complete;
    } else if (const auto* fg = std::get_if<FgSpec>(&spec.value)) {
        FgMonoid m = fg_construct(make_basis(fg->basis_constants), fg->generators);
        Json atoms = Json::array();
        text << "atoms:\n";
        for (const auto& a : fg_atoms(m)) {
            Json row = Json::array();
            text << "  (";
            for (std::size_t i = 0; i < a.size(); ++i) {
                row.push_back(a[i].to_string());
                text << (i ? ", " : "") << a[i].to_string();
            }
            text << ")\n";
            atoms.push_back(std::move(row));
        }
        payload["atoms"] = std::move(atoms);
        payload["complete"] = true;
    } else if (const auto* uf = std::get_if<UnitFractionSpec>(&spec.value)) {
        Json atoms = Json::array();
        text << "atoms: 1/d_n for every scheme modulus; first " << limit << ":\n";
        for (std::size_t i = 1; i <= limit && uf->scheme.has_index(i); ++i) {
            std::string atom = "1/" + uf->scheme.modulus(i).str();
            atoms.push_back(atom);
            text << "  " << atom << "\n";
        }
        payload["atoms"] = std::move(atoms);
        payload["complete"] = !uf->scheme.is_primes() && limit >= uf->scheme.known_prefix().size();
    } else if (const auto* interval = std::get_if<IntervalSpec>(&spec.value)) {
        std::string atoms;
        if (interval->interval.kind == IntervalMonoidSpec::Kind::Ms) {
            const Rational& s = interval->interval.parameter;
            atoms = "[" + s.to_string() + ", " + (Rational(2) * s).to_string() + ")";
        } else {
            const Rational& r = interval->interval.parameter;
            atoms = "{1} u [" + r.to_string() + ", " + (r + Rational(1)).to_string() + ") minus " +
                    r.ceil().str();
        }
        payload["atoms"] = atoms;
        payload["complete"] = true;
        text << "atoms: " << atoms << "\n";
    } else {
        fail(ErrorCode::UnsupportedOperation, "atoms: unsupported for direct sums; classify instead");
    }
    emit(opt, payload, text.str());
    return exit_code;
}

int run_factorize(const Options& opt, bool lengths_only) {
    MonoidSpec spec = load_spec(opt.spec_path);
    if (opt.element.empty()) fail(ErrorCode::InvalidArgument, "--element is required");
    Json payload = Json::object();
    payload["monoid"] = Json::parse(serialize_spec(spec))["monoid"];
    payload["element"] = opt.element;
    std::ostringstream text;
    text << "monoid: " << describe_monoid(spec) << "\n";
    int exit_code = 0;

    if (const auto* cyclic = std::get_if<CyclicSpec>(&spec.value)) {
        if (!cyclic->alpha.is_rational())
            fail(ErrorCode::UnsupportedOperation,
                 "factorization enumeration needs a rational base");
        Rational q = cyclic->alpha.rational_value();
        Rational target = Rational::from_string(opt.element);
        FactorizationSet z = cs_factorizations(q, target, opt.cap);
        if (!z.complete) exit_code = 2;
        if (lengths_only) {
            LengthSet l = lengths_of(z);
            payload["result"] = length_set_to_json(l);
            text << "lengths of " << target.to_string() << ": {";
            for (std::size_t i = 0; i < l.lengths.size(); ++i)
                text << (i ? ", " : "") << l.lengths[i].str();
            text << "}" << (l.complete ? "" : "  [truncated]") << "\n";
        } else {
            payload["result"] = factorization_set_to_json(z);
            text << "factorizations of " << target.to_string() << " over powers of "
                 << q.to_string() << ":\n";
            for (const auto& f : z.items) {
                text << "  (";
                for (std::size_t i = 0; i < f.multiplicities.size(); ++i)
                    text << (i ? ", " : "") << f.multiplicities[i].str();
                text << ")  length " << f.length().str() << "\n";
            }
            if (!z.complete) text << "  [truncated: higher powers may contribute]\n";
        }
    } else if (const auto* fg = std::get_if<FgSpec>(&spec.value)) {
        FgMonoid m = fg_construct(make_basis(fg->basis_constants), fg->generators);
        Coordinates x = parse_coordinates(opt.element);
        FactorizationSet z = fg_factorizations(m, x);
        if (lengths_only) {
            payload["result"] = length_set_to_json(lengths_of(z));
            LengthSet l = lengths_of(z);
            text << "lengths: {";
            for (std::size_t i = 0; i < l.lengths.size(); ++i)
                text << (i ? ", " : "") << l.lengths[i].str();
            text << "}\n";
        } else {
            payload["result"] = factorization_set_to_json(z);
            text << "factorizations over the " << fg_atoms(m).size() << " atoms:\n";
            for (const auto& f : z.items) {
                text << "  (";
                for (std::size_t i = 0; i < f.multiplicities.size(); ++i)
                    text << (i ? ", " : "") << f.multiplicities[i].str();
                text << ")  length " << f.length().str() << "\n";
            }
        }
    } else if (const auto* interval = std::get_if<IntervalSpec>(&spec.value)) {
        if (!lengths_only)
            fail(ErrorCode::UnsupportedOperation,
                 "interval monoids support length sets, not full enumeration");
        Rational b = Rational::from_string(opt.element);
        LengthSet l = interval_length_set(interval->interval, b);
        payload["result"] = length_set_to_json(l);
        payload["infinite_factorization_set"] = interval_has_infinite_Z(interval->interval, b);
        text << "lengths of " << b.to_string() << ": {";
        for (std::size_t i = 0; i < l.lengths.size(); ++i)
            text << (i ? ", " : "") << l.lengths[i].str();
        text << "}\n";
    } else if (const auto* uf = std::get_if<UnitFractionSpec>(&spec.value)) {
        if (!lengths_only)
            fail(ErrorCode::UnsupportedOperation,
                 "unit-fraction monoids support the certified length subset of 1 (lengths) and "
                 "canonical decompositions (decompose)");
        Rational b = Rational::from_string(opt.element);
        if (b != Rational(1))
            fail(ErrorCode::UnsupportedOperation,
                 "length sets are certified for the element 1 only");
        LengthSet l = uf_lengths_of_one(uf->scheme, opt.limit.value_or(5));
        payload["result"] = length_set_to_json(l);
        text << "certified subset of the lengths of 1: {";
        for (std::size_t i = 0; i < l.lengths.size(); ++i)
            text << (i ? ", " : "") << l.lengths[i].str();
        text << "}  [subset only]\n";
        exit_code = 2;  // a subset, not all of L(1)
    } else {
        fail(ErrorCode::UnsupportedOperation, "unsupported monoid kind for this command");
    }
    emit(opt, payload, text.str());
    return exit_code;
}

int run_sigma(const Options& opt) {
    MonoidSpec spec = load_spec(opt.spec_path);
    const auto* cyclic = std::get_if<CyclicSpec>(&spec.value);
    if (!cyclic) fail(ErrorCode::UnsupportedOperation, "sigma applies to cyclic semirings");
    unsigned n_max = opt.max.value_or(SearchBudget{}.sigma_max);
    SigmaResult sigma = cs_sigma(cyclic->alpha, n_max);
    Json payload = Json::object();
    payload["monoid"] = Json::parse(serialize_spec(spec))["monoid"];
    std::ostringstream text;
    int exit_code = 0;
    switch (sigma.kind) {
        case SigmaResult::Kind::Finite: {
            payload["sigma"] = sigma.sigma;
            Json w = Json::array();
            for (const auto& c : sigma.witness) w.push_back(c.str());
            payload["witness"] = std::move(w);
            text << "sigma = " << sigma.sigma << "  (a^" << sigma.sigma
                 << " is a nonnegative combination of lower powers)\n";
            break;
        }
        case SigmaResult::Kind::AtLeast:
            payload["sigma"] = "> " + std::to_string(sigma.bound);
            text << "sigma >= " << (sigma.bound + 1) << " (search exhausted at n_max = "
                 << sigma.bound << ")\n";
            exit_code = 2;
            break;
        case SigmaResult::Kind::Infinite:
            payload["sigma"] = "infinite";
            payload["justification"] = sigma.justification;
            text << "sigma = infinity  (" << sigma.justification << ")\n";
            break;
    }
    emit(opt, payload, text.str());
    return exit_code;
}

int run_minimal_pair(const Options& opt) {
    MonoidSpec spec = load_spec(opt.spec_path);
    const auto* cyclic = std::get_if<CyclicSpec>(&spec.value);
    if (!cyclic) fail(ErrorCode::UnsupportedOperation, "minimal-pair applies to cyclic semirings");
    MinimalPair mp = minimal_pair(cyclic->alpha);
    Json payload = Json::object();
    payload["monoid"] = Json::parse(serialize_spec(spec))["monoid"];
    payload["scale"] = mp.scale.str();
    Json plus = Json::array(), minus = Json::array();
    for (const auto& c : mp.plus_part.coefficients()) plus.push_back(c.str());
    for (const auto& c : mp.minus_part.coefficients()) minus.push_back(c.str());
    payload["plus_part"] = std::move(plus);
    payload["minus_part"] = std::move(minus);
    std::ostringstream text;
    text << "scale: " << mp.scale.str() << "\n"
         << "plus part:  " << mp.plus_part.to_string() << "\n"
         << "minus part: " << mp.minus_part.to_string() << "\n";
    emit(opt, payload, text.str());
    return 0;
}

int run_decompose(const Options& opt) {
    MonoidSpec spec = load_spec(opt.spec_path);
    const auto* uf = std::get_if<UnitFractionSpec>(&spec.value);
    if (!uf) fail(ErrorCode::UnsupportedOperation, "decompose applies to unit-fraction monoids");
    if (opt.element.empty()) fail(ErrorCode::InvalidArgument, "--element is required");
    Rational q = Rational::from_string(opt.element);
    CanonicalDecomposition dec = uf_canonical(uf->scheme, q);
    Json payload = Json::object();
    payload["monoid"] = Json::parse(serialize_spec(spec))["monoid"];
    payload["element"] = q.to_string();
    payload["member"] = dec.in_monoid();
    payload["integer_part"] = dec.integer_part.str();
    Json residues = Json::array();
    for (const auto& c : dec.residues) residues.push_back(c.str());
    payload["residues"] = std::move(residues);
    payload["digit_sum"] = dec.digit_sum.str();
    std::ostringstream text;
    if (dec.in_monoid()) {
        text << q.to_string() << " = " << dec.integer_part.str();
        for (std::size_t i = 0; i < dec.residues.size(); ++i)
            if (dec.residues[i] != 0)
                text << " + " << dec.residues[i].str() << "/"
                     << uf->scheme.modulus(i + 1).str();
        text << "\nN(q) = " << dec.integer_part.str() << ", S(q) = " << dec.digit_sum.str() << "\n";
    } else {
        text << q.to_string() << " is not a member (integer part of the canonical decomposition "
             << "is " << dec.integer_part.str() << " < 0)\n";
    }
    emit(opt, payload, text.str());
    return 0;
}

int run_member(const Options& opt) {
    MonoidSpec spec = load_spec(opt.spec_path);
    if (opt.element.empty()) fail(ErrorCode::InvalidArgument, "--element is required");
    Json payload = Json::object();
    payload["monoid"] = Json::parse(serialize_spec(spec))["monoid"];
    payload["element"] = opt.element;
    std::ostringstream text;
    int exit_code = 0;

    if (const auto* fg = std::get_if<FgSpec>(&spec.value)) {
        FgMonoid m = fg_construct(make_basis(fg->basis_constants), fg->generators);
        Coordinates x = parse_coordinates(opt.element);
        MembershipResult r = fg_member(m, x);
        payload["member"] = r.member;
        text << "member: " << (r.member ? "yes" : "no") << "\n";
        if (r.witness) {
            Json w = Json::array();
            for (const auto& c : r.witness->multiplicities) w.push_back(c.str());
            payload["witness"] = std::move(w);
            text << "witness multiplicities: (";
            for (std::size_t i = 0; i < r.witness->multiplicities.size(); ++i)
                text << (i ? ", " : "") << r.witness->multiplicities[i].str();
            text << ")\n";
        }
    } else if (const auto* uf = std::get_if<UnitFractionSpec>(&spec.value)) {
        Rational q = Rational::from_string(opt.element);
        bool member = uf_canonical(uf->scheme, q).in_monoid();
        payload["member"] = member;
        text << "member: " << (member ? "yes" : "no") << "\n";
    } else if (const auto* interval = std::get_if<IntervalSpec>(&spec.value)) {
        Rational x = Rational::from_string(opt.element);
        bool member = interval->interval.contains(x);
        payload["member"] = member;
        payload["atom"] = interval_is_atom(interval->interval, x);
        text << "member: " << (member ? "yes" : "no") << "\n";
        text << "atom: " << (interval_is_atom(interval->interval, x) ? "yes" : "no") << "\n";
    } else if (const auto* cyclic = std::get_if<CyclicSpec>(&spec.value)) {
        if (!cyclic->alpha.is_rational())
            fail(ErrorCode::UnsupportedOperation, "membership search needs a rational base");
        Rational q = cyclic->alpha.rational_value();
        Rational target = Rational::from_string(opt.element);
        std::optional<unsigned> cap = opt.cap;
        if (!cap && q < Rational(1)) cap = 8;
        FactorizationSet z = cs_factorizations(q, target, cap);
        if (!z.items.empty()) {
            payload["member"] = true;
            text << "member: yes\n";
        } else if (z.complete) {
            payload["member"] = false;
            text << "member: no\n";
        } else {
            payload["member"] = "unknown";
            text << "member: unknown (search truncated at the exponent cap)\n";
            exit_code = 2;
        }
    } else {
        fail(ErrorCode::UnsupportedOperation, "member: unsupported monoid kind");
    }
    emit(opt, payload, text.str());
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of positive monoids: atoms, factorizations, length sets and the "
                 "atomic property chain"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_element) {
        cmd->add_option("spec", opt.spec_path, "monoid spec file (JSON)")->required();
        cmd->add_flag("--json", opt.json, "machine-readable output");
        cmd->add_option("--budget-deg", opt.budget_deg, "witness search: quotient degree bound");
        cmd->add_option("--budget-height", opt.budget_height,
                        "witness search: coefficient height bound");
        cmd->add_option("--sigma-max", opt.sigma_max, "highest power tried for sigma");
        if (with_element) cmd->add_option("--element", opt.element, "target element");
        return cmd;
    };

    auto* classify_cmd = add_common(app.add_subcommand("classify", "full property report"), false);
    auto* atoms_cmd = add_common(app.add_subcommand("atoms", "describe the atom set"), false);
    atoms_cmd->add_option("--limit", opt.limit, "how many atoms to list");
    auto* factorize_cmd =
        add_common(app.add_subcommand("factorize", "enumerate Z(element)"), true);
    factorize_cmd->add_option("--cap", opt.cap, "exponent cap for cyclic enumeration");
    auto* lengths_cmd = add_common(app.add_subcommand("lengths", "length set L(element)"), true);
    lengths_cmd->add_option("--cap", opt.cap, "exponent cap for cyclic enumeration");
    lengths_cmd->add_option("--limit", opt.limit, "prefix size for unit-fraction lengths of 1");
    auto* sigma_cmd = add_common(app.add_subcommand("sigma", "least power expressible from lower "
                                                             "powers"),
                                 false);
    sigma_cmd->add_option("--max", opt.max, "highest power to try");
    add_common(app.add_subcommand("minimal-pair", "sign split of the minimal polynomial"), false);
    add_common(app.add_subcommand("decompose", "unit-fraction canonical decomposition"), true);
    auto* member_cmd = add_common(app.add_subcommand("member", "membership decision"), true);
    member_cmd->add_option("--cap", opt.cap, "exponent cap for cyclic membership");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classify_cmd)) return run_classify(opt);
        if (app.got_subcommand(atoms_cmd)) return run_atoms(opt);
        if (app.got_subcommand(factorize_cmd)) return run_factorize(opt, false);
        if (app.got_subcommand(lengths_cmd)) return run_factorize(opt, true);
        if (app.got_subcommand(sigma_cmd)) return run_sigma(opt);
        if (app.got_subcommand("minimal-pair")) return run_minimal_pair(opt);
        if (app.got_subcommand("decompose")) return run_decompose(opt);
        if (app.got_subcommand("member")) return run_member(opt);
    } catch (const posmon::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
