#pragma once

#include <variant>

#include <json.hpp>

#include "dimalg/abelian.hpp"
#include "dimalg/bockstein.hpp"
#include "dimalg/dimtheory.hpp"
#include "dimalg/graded.hpp"
#include "dimalg/oracle.hpp"

namespace dimalg {

/// JSON forms (nlohmann's std::map-backed objects keep keys sorted, so every
/// dump is canonical):
///   extended integer   number, or "inf" / "-inf"
///   group              string literal, e.g. "Z + Z/9"
///   graded group       {"terms": {"<degree>": "<group literal>"}}
///   triple             {"loc": v, "mod": v, "pru": v}
///   pattern kinds      {"Q": v, "default": triple, "exceptions": {"<p>": triple},
///                       "kind": "efun" | "dfun" | "d_X"}
///                      (a missing "kind" reads as "efun")
void to_json(nlohmann::json& j, const ExtInt& v);
void from_json(const nlohmann::json& j, ExtInt& v);

void to_json(nlohmann::json& j, const FiniteSumGroup& g);
void from_json(const nlohmann::json& j, FiniteSumGroup& g);

void to_json(nlohmann::json& j, const GradedGroup& g);
void from_json(const nlohmann::json& j, GradedGroup& g);

void to_json(nlohmann::json& j, const PrimeTriple& t);
void from_json(const nlohmann::json& j, PrimeTriple& t);

void to_json(nlohmann::json& j, const BocksteinFunction& f);
void from_json(const nlohmann::json& j, BocksteinFunction& f);

void to_json(nlohmann::json& j, const DPattern& d);
void from_json(const nlohmann::json& j, DPattern& d);

void to_json(nlohmann::json& j, const CompactumProfile& x);
void from_json(const nlohmann::json& j, CompactumProfile& x);

void to_json(nlohmann::json& j, const BasisTriple& t);
void to_json(nlohmann::json& j, const BocksteinBasisSet& b);

void to_json(nlohmann::json& j, const MooreSpaceSpec& m);

void to_json(nlohmann::json& j, const Divergence& d);
void to_json(nlohmann::json& j, const VerifyReport& r);

nlohmann::json violations_json(const std::vector<AxiomViolation>& vs);

/// Any value a data file may hold.
using Payload = std::variant<FiniteSumGroup, GradedGroup, BocksteinFunction, DPattern,
                             CompactumProfile>;

/// Dispatches on shape: a string is a group literal; an object with "terms"
/// is a graded group; an object with "Q" is a pattern routed by its "kind".
/// Throws ParseError on unrecognized shapes, ValidationError / DomainError on
/// well-formed but invalid payloads.
Payload load_payload(const nlohmann::json& j);

/// Reads and parses a JSON file into a payload.
Payload load_payload_file(const std::string& path);

} // namespace dimalg
