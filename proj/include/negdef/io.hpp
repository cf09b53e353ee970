#pragma once

#include "negdef/stratified.hpp"
#include "negdef/toric.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace negdef::io {

using nlohmann::json;

// Every number crosses the file boundary as an exact string "p/q" (or "p").
// JSON integers are accepted on input for convenience; floats never are.

json to_json(const Rat& value);
Rat rat_from_json(const json& j);

json to_json(const RatVector& values);
RatVector vector_from_json(const json& j);

json to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

/// {"coeffs": {"<id>": "p/q", ...}}
json to_json(const RDivisor& d);
RDivisor divisor_from_json(const json& j);

/// {"labels": [...], "matrix": [[...], ...]}; labels are optional on input.
json to_json(const CurveSystem& sys);
CurveSystem curve_system_from_json(const json& j);

/// {"values": [...]}
json pairing_to_json(const PairingVector& v);
PairingVector pairing_from_json(const json& j);

/// {"dimension": n, "strata": [{"e": 0, "system": {...}}, ...],
///  "cross": [{"from_e": 1, "to_e": 0, "values": [[...], ...]}]}
/// A cross block whose source stratum has a single divisor may give "values"
/// as a flat vector.
json to_json(const StratifiedSystem& ss);
StratifiedSystem stratified_from_json(const json& j);

/// {"n": 5, "q": 3, "divisor": {"v0": "0", "v1": "-1/2", ...}, "e": {...}}
struct ToricInstance {
    toric::ResolutionFan fan;
    toric::ToricDivisor divisor;
    std::optional<toric::ToricDivisor> e;
};
ToricInstance toric_from_json(const json& j);
json toric_divisor_to_json(const toric::ToricDivisor& d);
toric::ToricDivisor toric_divisor_from_json(const toric::ResolutionFan& fan, const json& j);

json to_json(const toric::ResolutionFan& fan);
json to_json(const toric::Verdict& verdict);
json to_json(const DefinitenessCertificate& cert);

/// Parses text, mapping JSON syntax and type errors to InvalidInput.
json parse(const std::string& text);

}  // namespace negdef::io
