// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qvault::netsim {

using Json = nlohmann::ordered_json;

// One scripted wallet action. Serial selection for payments: an explicit
// serial string, "auto" (the wallet spends its oldest note), or mint_index k
// (the note minted by the k-th mint action of this script).
struct ScenarioAction {
    enum class Type { Mint, Pay, IntraPay, OnlinePay } type = Type::Mint;

    int64_t at = 0;
    std::string wallet; // minter or payer
    std::string receiver;
    int64_t value = 0;
    std::string serial = "auto";
    std::optional<int> mint_index;
};

std::string to_string(ScenarioAction::Type type);
ScenarioAction::Type action_type_from_string(const std::string& text);

Json to_json(const ScenarioAction& action);
ScenarioAction action_from_json(const Json& j);

struct ScenarioScript {
    std::vector<ScenarioAction> actions;

    static ScenarioScript from_json(const Json& j);
    Json to_json() const;
};

} // namespace qvault::netsim
