#include "dimalg/json_io.hpp"

#include <fstream>

namespace dimalg {

using nlohmann::json;

void to_json(json& j, const ExtInt& v) {
    if (v.is_plus_inf())
        j = "inf";
    else if (v.is_minus_inf())
        j = "-inf";
    else
        j = v.finite();
}

void from_json(const json& j, ExtInt& v) {
    if (j.is_number_integer()) {
        v = ExtInt(j.get<std::int64_t>());
        return;
    }
    if (j.is_string()) {
        try {
            v = parse_extint(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        return;
    }
    throw ParseError("extended integer must be a number or \"inf\"/\"-inf\", got " + j.dump());
}

void to_json(json& j, const FiniteSumGroup& g) { j = to_string(g); }

void from_json(const json& j, FiniteSumGroup& g) {
    if (!j.is_string()) throw ParseError("group must be a string literal, got " + j.dump());
    g = parse_group(j.get<std::string>());
}

void to_json(json& j, const GradedGroup& g) {
    json terms = json::object();
    for (const auto& [deg, grp] : g.terms()) terms[std::to_string(deg)] = grp;
    j = json{{"terms", std::move(terms)}};
}

void from_json(const json& j, GradedGroup& g) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_object())
        throw ParseError("graded group must be {\"terms\": {...}}, got " + j.dump());
    std::map<std::int64_t, FiniteSumGroup> terms;
    for (const auto& [key, val] : j["terms"].items()) {
        std::size_t used = 0;
        std::int64_t deg = 0;
        try {
            deg = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size())
            throw ParseError("graded-group degree key must be an integer, got \"" + key + "\"");
        FiniteSumGroup grp = val.get<FiniteSumGroup>();
        if (!grp.is_zero()) terms[deg] = sum(terms[deg], grp);
    }
    g = GradedGroup(std::move(terms));
}

void to_json(json& j, const PrimeTriple& t) {
    j = json{{"loc", t.loc}, {"mod", t.mod}, {"pru", t.pru}};
}

void from_json(const json& j, PrimeTriple& t) {
    if (!j.is_object() || !j.contains("loc") || !j.contains("mod") || !j.contains("pru"))
        throw ParseError("triple must be {\"loc\":., \"mod\":., \"pru\":.}, got " + j.dump());
    t.loc = j["loc"].get<ExtInt>();
    t.mod = j["mod"].get<ExtInt>();
    t.pru = j["pru"].get<ExtInt>();
}

namespace {

json pattern_to_json(const PrimePattern& p, const char* kind) {
    json exc = json::object();
    for (const auto& [prime, t] : p.exc) exc[std::to_string(prime)] = t;
    return json{{"Q", p.q}, {"default", p.def}, {"exceptions", std::move(exc)},
                {"kind", kind}};
}

PrimePattern pattern_from_json(const json& j) {
    if (!j.is_object() || !j.contains("Q") || !j.contains("default"))
        throw ParseError("pattern must carry \"Q\" and \"default\", got " + j.dump());
    PrimePattern p;
    p.q = j["Q"].get<ExtInt>();
    p.def = j["default"].get<PrimeTriple>();
    if (j.contains("exceptions")) {
        if (!j["exceptions"].is_object())
            throw ParseError("\"exceptions\" must be an object, got " + j["exceptions"].dump());
        for (const auto& [key, val] : j["exceptions"].items()) {
            std::size_t used = 0;
            std::int64_t prime = 0;
            try {
                prime = std::stoll(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || !is_prime(prime))
                throw ParseError("exception key must be a prime, got \"" + key + "\"");
            p.exc.emplace(prime, val.get<PrimeTriple>());
        }
    }
    p.normalize();
    return p;
}

std::string kind_of(const json& j) {
    if (!j.is_object() || !j.contains("kind")) return "efun";
    if (!j["kind"].is_string()) throw ParseError("\"kind\" must be a string");
    return j["kind"].get<std::string>();
}

} // namespace

void to_json(json& j, const BocksteinFunction& f) { j = pattern_to_json(f.pattern(), "efun"); }

void from_json(const json& j, BocksteinFunction& f) {
    std::string kind = kind_of(j);
    if (kind != "efun")
        throw ParseError("expected an \"efun\" pattern, found kind \"" + kind + "\"");
    f = BocksteinFunction::from_pattern(pattern_from_json(j));
}

void to_json(json& j, const DPattern& d) { j = pattern_to_json(d.pat, "dfun"); }

void from_json(const json& j, DPattern& d) {
    std::string kind = kind_of(j);
    if (kind != "dfun")
        throw ParseError("expected a \"dfun\" pattern, found kind \"" + kind + "\"");
    d.pat = pattern_from_json(j);
}

void to_json(json& j, const CompactumProfile& x) {
    j = pattern_to_json(x.d().pattern(), "d_X");
}

void from_json(const json& j, CompactumProfile& x) {
    std::string kind = kind_of(j);
    if (kind != "d_X")
        throw ParseError("expected a \"d_X\" pattern, found kind \"" + kind + "\"");
    x = CompactumProfile::from_function(
        BocksteinFunction::from_pattern(pattern_from_json(j)));
}

void to_json(json& j, const BasisTriple& t) {
    j = json{{"loc", t.loc}, {"mod", t.mod}, {"pru", t.pru}};
}

void to_json(json& j, const BocksteinBasisSet& b) {
    json exc = json::object();
    for (const auto& [prime, t] : b.exceptions()) exc[std::to_string(prime)] = t;
    j = json{{"hasQ", b.has_q()}, {"default", b.default_triple()},
             {"exceptions", std::move(exc)}};
}

void to_json(json& j, const MooreSpaceSpec& m) {
    json summands = json::array();
    for (const auto& [g, deg] : m.summands)
        summands.push_back(json{{"group", to_string(g)}, {"degree", deg}});
    j = json{{"summands", std::move(summands)}, {"generic", m.generic_pattern}};
}

void to_json(json& j, const Divergence& d) {
    j = json{{"prime", d.prime ? json(*d.prime) : json("generic")},
             {"group", d.group},
             {"path_a_value", d.path_a_value},
             {"path_b_value", d.path_b_value}};
}

void to_json(json& j, const VerifyReport& r) {
    j = json{{"case", r.case_id},
             {"pass", r.pass},
             {"path_a", r.path_a},
             {"path_b", r.path_b},
             {"first_divergence", r.first_divergence ? json(*r.first_divergence) : json()}};
    if (!r.note.empty()) j["note"] = r.note;
}

json violations_json(const std::vector<AxiomViolation>& vs) {
    json arr = json::array();
    for (const AxiomViolation& v : vs)
        arr.push_back(json{{"prime", v.prime ? json(*v.prime) : json("generic")},
                           {"axiom", v.axiom}});
    return arr;
}

Payload load_payload(const json& j) {
    if (j.is_string()) return j.get<FiniteSumGroup>();
    if (j.is_object() && j.contains("terms")) return j.get<GradedGroup>();
    if (j.is_object() && j.contains("Q")) {
        std::string kind = kind_of(j);
        if (kind == "efun") return BocksteinFunction::from_pattern(pattern_from_json(j));
        if (kind == "dfun") return DPattern{pattern_from_json(j)};
        if (kind == "d_X")
            return CompactumProfile::from_function(
                BocksteinFunction::from_pattern(pattern_from_json(j)));
        throw ParseError("unknown pattern kind \"" + kind + "\"");
    }
    throw ParseError("unrecognized payload shape: " + j.dump());
}

Payload load_payload_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return load_payload(j);
}

} // namespace dimalg
