// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/netsim/scenario.hpp"

#include "qvault/common/errors.hpp"

namespace qvault::netsim {

std::string to_string(ScenarioAction::Type type)
{
    switch (type)
    {
    case ScenarioAction::Type::Mint:
        return "mint";
    case ScenarioAction::Type::Pay:
        return "pay";
    case ScenarioAction::Type::IntraPay:
        return "intra-pay";
    default:
        return "online-pay";
    }
}

ScenarioAction::Type action_type_from_string(const std::string& text)
{
    if (text == "mint")
        return ScenarioAction::Type::Mint;
    if (text == "pay")
        return ScenarioAction::Type::Pay;
    if (text == "intra-pay")
        return ScenarioAction::Type::IntraPay;
    if (text == "online-pay")
        return ScenarioAction::Type::OnlinePay;
    throw Error("unknown action type: " + text);
}

Json to_json(const ScenarioAction& action)
{
    Json j;
    j["at"] = action.at;
    j["type"] = to_string(action.type);
    if (action.type == ScenarioAction::Type::Mint)
    {
        j["wallet"] = action.wallet;
        j["value"] = action.value;
        return j;
    }
    j["payer"] = action.wallet;
    j["receiver"] = action.receiver;
    if (action.mint_index)
        j["mint_index"] = *action.mint_index;
    else
        j["serial"] = action.serial;
    return j;
}

ScenarioAction action_from_json(const Json& j)
{
    ScenarioAction action;
    action.at = j.at("at").get<int64_t>();
    action.type = action_type_from_string(j.at("type").get<std::string>());
    if (action.at < 0)
        throw Error("action time must be non-negative");
    if (action.type == ScenarioAction::Type::Mint)
    {
        action.wallet = j.at("wallet").get<std::string>();
        action.value = j.at("value").get<int64_t>();
        return action;
    }
    action.wallet = j.at("payer").get<std::string>();
    action.receiver = j.at("receiver").get<std::string>();
    if (j.contains("mint_index"))
        action.mint_index = j.at("mint_index").get<int>();
    else
        action.serial = j.value("serial", "auto");
    return action;
}

ScenarioScript ScenarioScript::from_json(const Json& j)
{
    ScenarioScript script;
    for (const Json& action : j.at("actions"))
        script.actions.push_back(action_from_json(action));
    return script;
}

Json ScenarioScript::to_json() const
{
    Json list = Json::array();
    for (const ScenarioAction& action : actions)
        list.push_back(netsim::to_json(action));
    Json j;
    j["actions"] = std::move(list);
    return j;
}

} // namespace qvault::netsim
