#pragma once

// Structured (JSON) form of the report types.

#include "json.hpp"

#include "lamsol/bounds.hpp"
#include "lamsol/closure.hpp"
#include "lamsol/witness.hpp"

namespace lamsol {

void to_json(nlohmann::json& j, const PrimePower& v);
void from_json(const nlohmann::json& j, PrimePower& v);

void to_json(nlohmann::json& j, const WitnessRecord& v);
void from_json(const nlohmann::json& j, WitnessRecord& v);

void to_json(nlohmann::json& j, const RangeMode& v);
void from_json(const nlohmann::json& j, RangeMode& v);

void to_json(nlohmann::json& j, const RangeReport& v);
void from_json(const nlohmann::json& j, RangeReport& v);

void to_json(nlohmann::json& j, const ChainReport& v);
void from_json(const nlohmann::json& j, ChainReport& v);

void to_json(nlohmann::json& j, const CensusReport& v);
void from_json(const nlohmann::json& j, CensusReport& v);

void to_json(nlohmann::json& j, const ErhReport& v);
void from_json(const nlohmann::json& j, ErhReport& v);

void to_json(nlohmann::json& j, const CEpsResult& v);
void from_json(const nlohmann::json& j, CEpsResult& v);

void to_json(nlohmann::json& j, const ClosureReport& v);
void from_json(const nlohmann::json& j, ClosureReport& v);

}  // namespace lamsol
