#pragma once

#include <json.hpp>

#include "maxminsep/certificates.hpp"

namespace maxminsep {

/// Witness JSON with 1-indexed vertex ids; s and t are null for oct witnesses.
nlohmann::json witness_to_json(const Witness& w);
/// Throws ParseError on missing fields, wrong types or ids below 1.
Witness witness_from_json(const nlohmann::json& j);

}  // namespace maxminsep
