// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/netsim/config.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qvault/common/errors.hpp"
#include "qvault/common/siphash.hpp"

namespace qvault::netsim {

std::string to_string(NodeRole role)
{
    switch (role)
    {
    case NodeRole::Ia:
        return "ia";
    case NodeRole::Msb:
        return "msb";
    case NodeRole::Wallet:
        return "wallet";
    default:
        return "quantum-wallet";
    }
}

NodeRole role_from_string(const std::string& text)
{
    if (text == "ia")
        return NodeRole::Ia;
    if (text == "msb")
        return NodeRole::Msb;
    if (text == "wallet")
        return NodeRole::Wallet;
    if (text == "quantum-wallet")
        return NodeRole::QuantumWallet;
    throw ConfigError("unknown node role: " + text);
}

namespace {

LinkSpec link_from_json(const Json& j)
{
    LinkSpec link;
    link.a = j.at("a").get<std::string>();
    link.b = j.at("b").get<std::string>();
    link.latency = j.value("latency", 1);
    if (link.latency < 0)
        throw ConfigError("link latency must be non-negative");
    return link;
}

Json link_to_json(const LinkSpec& link)
{
    Json j;
    j["a"] = link.a;
    j["b"] = link.b;
    j["latency"] = link.latency;
    return j;
}

AdversaryRule rule_from_json(const Json& j)
{
    AdversaryRule rule;
    rule.quantum = j.value("quantum", false);
    const std::string action = j.at("action").get<std::string>();
    if (action == "drop")
        rule.action = AdversaryRule::Action::Drop;
    else if (action == "delay")
        rule.action = AdversaryRule::Action::Delay;
    else if (action == "duplicate")
        rule.action = AdversaryRule::Action::Duplicate;
    else
        throw ConfigError("unknown adversary action: " + action);
    if (rule.quantum && rule.action != AdversaryRule::Action::Drop)
        throw ConfigError("quantum adversary rules support drop only");
    rule.delay_ticks = j.value("ticks", 1);
    if (j.contains("match"))
    {
        const Json& m = j.at("match");
        if (m.contains("kind"))
            rule.match_kind = vault::kind_from_string(m.at("kind").get<std::string>());
        if (m.contains("from"))
            rule.match_from = m.at("from").get<std::string>();
        if (m.contains("to"))
            rule.match_to = m.at("to").get<std::string>();
    }
    return rule;
}

Json rule_to_json(const AdversaryRule& rule)
{
    Json match = Json::object();
    if (rule.match_kind)
        match["kind"] = vault::to_string(*rule.match_kind);
    if (rule.match_from)
        match["from"] = *rule.match_from;
    if (rule.match_to)
        match["to"] = *rule.match_to;
    Json j;
    j["match"] = std::move(match);
    switch (rule.action)
    {
    case AdversaryRule::Action::Drop:
        j["action"] = "drop";
        break;
    case AdversaryRule::Action::Delay:
        j["action"] = "delay";
        j["ticks"] = rule.delay_ticks;
        break;
    default:
        j["action"] = "duplicate";
        break;
    }
    if (rule.quantum)
        j["quantum"] = true;
    return j;
}

} // namespace

NetworkConfig NetworkConfig::from_json(const Json& j)
{
    NetworkConfig cfg;
    cfg.seed = j.value("seed", uint64_t{0});
    cfg.qubits = j.value("qubits", 8);
    cfg.timeout_ticks = j.value("timeout_ticks", int64_t{64});
    cfg.allow_quantum_wallets = j.value("allow_quantum_wallets", false);
    for (const Json& node : j.at("nodes"))
    {
        NodeSpec spec;
        spec.id = node.at("id").get<std::string>();
        spec.role = role_from_string(node.at("role").get<std::string>());
        spec.home_msb = node.value("home_msb", "");
        cfg.nodes.push_back(std::move(spec));
    }
    for (const Json& link : j.value("classical_links", Json::array()))
        cfg.classical_links.push_back(link_from_json(link));
    for (const Json& link : j.value("quantum_links", Json::array()))
        cfg.quantum_links.push_back(link_from_json(link));
    for (const Json& rule : j.value("adversary", Json::array()))
        cfg.adversary.push_back(rule_from_json(rule));
    return cfg;
}

Json NetworkConfig::to_json() const
{
    Json nodes_json = Json::array();
    for (const NodeSpec& node : nodes)
    {
        Json n;
        n["id"] = node.id;
        n["role"] = to_string(node.role);
        if (!node.home_msb.empty())
            n["home_msb"] = node.home_msb;
        nodes_json.push_back(std::move(n));
    }
    Json classical = Json::array();
    for (const LinkSpec& link : classical_links)
        classical.push_back(link_to_json(link));
    Json quantum = Json::array();
    for (const LinkSpec& link : quantum_links)
        quantum.push_back(link_to_json(link));
    Json rules = Json::array();
    for (const AdversaryRule& rule : adversary)
        rules.push_back(rule_to_json(rule));

    Json j;
    j["seed"] = seed;
    j["qubits"] = qubits;
    j["timeout_ticks"] = timeout_ticks;
    j["allow_quantum_wallets"] = allow_quantum_wallets;
    j["nodes"] = std::move(nodes_json);
    j["classical_links"] = std::move(classical);
    j["quantum_links"] = std::move(quantum);
    j["adversary"] = std::move(rules);
    return j;
}

void NetworkConfig::validate() const
{
    if (qubits < 4 || qubits > 20 || qubits % 2 != 0)
        throw ConfigError("qubits must be even and between 4 and 20");
    if (timeout_ticks < 1)
        throw ConfigError("timeout_ticks must be positive");
    for (const AdversaryRule& rule : adversary)
        if (rule.quantum && rule.action != AdversaryRule::Action::Drop)
            throw ConfigError("quantum adversary rules support drop only");

    std::map<std::string, NodeRole> roles;
    int ia_count = 0;
    for (const NodeSpec& node : nodes)
    {
        if (node.id.empty())
            throw ConfigError("node with empty id");
        if (!roles.emplace(node.id, node.role).second)
            throw ConfigError("duplicate node id: " + node.id);
        if (node.role == NodeRole::Ia)
            ++ia_count;
        if (node.role == NodeRole::QuantumWallet && !allow_quantum_wallets)
            throw ConfigError("quantum-wallet nodes need allow_quantum_wallets");
    }
    if (ia_count != 1)
        throw ConfigError("exactly one issuing authority required");

    for (const NodeSpec& node : nodes)
    {
        if (node.role != NodeRole::Wallet)
            continue;
        auto home = roles.find(node.home_msb);
        if (home == roles.end() || home->second != NodeRole::Msb)
            throw ConfigError("wallet " + node.id + " must name an existing msb as home_msb");
    }

    auto known = [&](const std::string& id) { return roles.count(id) != 0; };
    for (const LinkSpec& link : classical_links)
    {
        if (!known(link.a) || !known(link.b))
            throw ConfigError("classical link references unknown node");
        if (link.a == link.b)
            throw ConfigError("self links are not allowed");
    }
    for (const LinkSpec& link : quantum_links)
    {
        if (!known(link.a) || !known(link.b))
            throw ConfigError("quantum link references unknown node");
        if (link.a == link.b)
            throw ConfigError("self links are not allowed");
        for (const std::string& end : {link.a, link.b})
        {
            const NodeRole role = roles.at(end);
            if (role != NodeRole::Msb && role != NodeRole::QuantumWallet)
                throw ConfigError("quantum links connect vault-role nodes only");
        }
    }
}

NetworkConfig NetworkConfig::expanded() const
{
    validate();

    NetworkConfig out = *this;
    out.nodes.clear();
    out.classical_links.clear();
    out.quantum_links.clear();

    std::map<std::string, NodeRole> roles;
    for (const NodeSpec& node : nodes)
        roles[node.id] = node.role;

    // rename map for vault-layer endpoints of quantum wallets
    auto vault_of = [&](const std::string& id) {
        return roles.at(id) == NodeRole::QuantumWallet ? id + "#vault" : id;
    };

    for (const NodeSpec& node : nodes)
    {
        if (node.role != NodeRole::QuantumWallet)
        {
            out.nodes.push_back(node);
            continue;
        }
        out.nodes.push_back(NodeSpec{node.id + "#vault", NodeRole::Msb, ""});
        out.nodes.push_back(NodeSpec{node.id, NodeRole::Wallet, node.id + "#vault"});
        out.classical_links.push_back(LinkSpec{node.id, node.id + "#vault", 1});
    }

    for (const LinkSpec& link : classical_links)
    {
        LinkSpec rewired = link;
        // wallet-layer links stay between wallets; anything touching the
        // vault layer moves onto the personal vault
        const bool a_wallet_layer =
            roles.at(link.a) == NodeRole::Wallet || roles.at(link.a) == NodeRole::QuantumWallet;
        const bool b_wallet_layer =
            roles.at(link.b) == NodeRole::Wallet || roles.at(link.b) == NodeRole::QuantumWallet;
        if (!(a_wallet_layer && b_wallet_layer))
        {
            rewired.a = vault_of(link.a);
            rewired.b = vault_of(link.b);
        }
        out.classical_links.push_back(rewired);
    }

    std::set<std::pair<std::string, std::string>> classical_pairs;
    for (const LinkSpec& link : out.classical_links)
    {
        classical_pairs.insert({link.a, link.b});
        classical_pairs.insert({link.b, link.a});
    }

    for (const LinkSpec& link : quantum_links)
    {
        LinkSpec rewired{vault_of(link.a), vault_of(link.b), link.latency};
        // coordination messages need a classical companion path
        if (classical_pairs.count({rewired.a, rewired.b}) == 0)
        {
            out.classical_links.push_back(rewired);
            classical_pairs.insert({rewired.a, rewired.b});
            classical_pairs.insert({rewired.b, rewired.a});
        }
        out.quantum_links.push_back(std::move(rewired));
    }

    out.allow_quantum_wallets = false; // fully resolved
    out.validate();
    return out;
}

std::string NetworkConfig::digest() const
{
    return mac_tag_hex(MacKey{0x636f6e6669672d64ULL, 0x6967657374202020ULL}, to_json().dump());
}

} // namespace qvault::netsim
