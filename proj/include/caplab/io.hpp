#pragma once

#include <string>

#include <json.hpp>

#include "caplab/capacity.hpp"
#include "caplab/fn.hpp"
#include "caplab/separation.hpp"
#include "caplab/witnesses.hpp"

namespace caplab::io {

using nlohmann::json;

// Capacity file format:
//   { "n": int,
//     "entries": [{"subset": [point indices], "value": number | "inf"}, ...],
//     "rule": {"kind": "counting-dyadic", "N": int}
//           | {"kind": "additive", "weights": [...]}
//           | {"kind": "random", "n": int, "seed": int, "null_set_bias": x} }
// "rule" takes precedence when present; explicit tables must list all 2^n
// subsets. Infinity is serialized as the string "inf".
json capacity_to_json(const Capacity& mu);
Capacity capacity_from_json(const json& j);

// Function file format: { "n": int, "values": [numbers] }
json fn_to_json(const MeasurableFn& f);
MeasurableFn fn_from_json(const json& j);

json params_to_json(const PrenormParams& p);
json witness_to_json(const SphereWitness& w);
json witness_to_json(const BallWitness& w);
json certificate_to_json(const SeparationCertificate& c);
json report_to_json(const PropertyReport& r);

Capacity load_capacity(const std::string& path);
MeasurableFn load_fn(const std::string& path);
void save_json(const json& j, const std::string& path);

// number or the string "inf"
json extreal_to_json(double v);
double extreal_from_json(const json& j);

// 17 significant digits, round-trip exact; used for text rendering
std::string fmt_double(double v);

}  // namespace caplab::io
