#pragma once

#include <string>

#include <json.hpp>

#include "roofcalc/bwb.hpp"
#include "roofcalc/motive.hpp"
#include "roofcalc/roofs.hpp"

namespace roofcalc {

using nlohmann::json;

/// Integers that fit in int64 are emitted as JSON numbers, larger ones as
/// decimal strings.
json to_json(const BigInt& v);
json to_json(const Weight& w);
json to_json(const LPolynomial& f);
json to_json(const CohomologyResult& r);
json to_json(const BundleCohomology& c);
json to_json(const ZeroLocusCohomology& z);
json to_json(const RoofFamily& f);
json to_json(const RoofReport& r);

std::string render_text(const RoofReport& r);
std::string render_text(const ZeroLocusCohomology& z);

} // namespace roofcalc
