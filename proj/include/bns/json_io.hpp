#pragma once

#include <json.hpp>

#include "bns/character.hpp"
#include "bns/circles.hpp"
#include "bns/classifier.hpp"
#include "bns/witness.hpp"

namespace bns {

using Json = nlohmann::ordered_json;

/// {"n": 4, "weights": {"1-2": "3", ...}}. Every pair must be present; weights
/// are "p", "p/q" strings (JSON integers are accepted too). Unknown or
/// malformed keys raise ParseError naming the key.
Character character_from_json(const Json& j);
Json to_json(const Character& chi);

CircleId circle_from_json(const Json& j);
Json to_json(const CircleId& id);

Json to_json(const Certificate& certificate);
Json to_json(const Classification& classification);
Json to_json(const WitnessPackage& pkg);

}  // namespace bns
