#pragma once

// JSON encodings of the toolkit's values (nlohmann::json, found by ADL).

#include <json.hpp>

#include "dfixed/betti.hpp"
#include "dfixed/dseq.hpp"
#include "dfixed/ideal.hpp"
#include "dfixed/regularity.hpp"
#include "dfixed/socle.hpp"

namespace dfx {

void to_json(nlohmann::json& j, const DSequence& d);
void from_json(const nlohmann::json& j, DSequence& d);

/// {"n": 3, "generators": ["x1^2", ...]}
void to_json(nlohmann::json& j, const MonomialIdeal& ideal);
void from_json(const nlohmann::json& j, MonomialIdeal& ideal);

void to_json(nlohmann::json& j, const IndexPair& pair);
void from_json(const nlohmann::json& j, IndexPair& pair);
void to_json(nlohmann::json& j, const SocleComponent& component);
void from_json(const nlohmann::json& j, SocleComponent& component);
void to_json(nlohmann::json& j, const SocleDimension& dim);
void from_json(const nlohmann::json& j, SocleDimension& dim);
void to_json(nlohmann::json& j, const SocleReport& report);
void from_json(const nlohmann::json& j, SocleReport& report);

void to_json(nlohmann::json& j, const Corner& corner);
void from_json(const nlohmann::json& j, Corner& corner);
void to_json(nlohmann::json& j, const RegularityReport& report);
void from_json(const nlohmann::json& j, RegularityReport& report);

/// Record list [[i, j, beta], ...] plus characteristic and truncation data.
void to_json(nlohmann::json& j, const BettiTable& table);
void from_json(const nlohmann::json& j, BettiTable& table);
void to_json(nlohmann::json& j, const ExtremalEntry& entry);

}  // namespace dfx
