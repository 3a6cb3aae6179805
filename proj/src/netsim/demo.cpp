// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/netsim/demo.hpp"

namespace qvault::netsim::demo {

NetworkConfig network(uint64_t seed)
{
    NetworkConfig cfg;
    cfg.seed = seed;
    cfg.qubits = 8;
    cfg.timeout_ticks = 64;

    cfg.nodes.push_back({"ia", NodeRole::Ia, ""});
    cfg.nodes.push_back({"msb-east", NodeRole::Msb, ""});
    cfg.nodes.push_back({"msb-west", NodeRole::Msb, ""});
    cfg.nodes.push_back({"alice", NodeRole::Wallet, "msb-east"});
    cfg.nodes.push_back({"bob", NodeRole::Wallet, "msb-east"});
    cfg.nodes.push_back({"carol", NodeRole::Wallet, "msb-west"});
    cfg.nodes.push_back({"dave", NodeRole::Wallet, "msb-west"});

    cfg.classical_links.push_back({"ia", "msb-east", 1});
    cfg.classical_links.push_back({"ia", "msb-west", 1});
    cfg.classical_links.push_back({"msb-east", "msb-west", 1});
    cfg.classical_links.push_back({"alice", "msb-east", 1});
    cfg.classical_links.push_back({"bob", "msb-east", 1});
    cfg.classical_links.push_back({"carol", "msb-west", 1});
    cfg.classical_links.push_back({"dave", "msb-west", 1});

    const char* wallets[] = {"alice", "bob", "carol", "dave"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            cfg.classical_links.push_back({wallets[i], wallets[j], 1});

    cfg.quantum_links.push_back({"msb-east", "msb-west", 1});
    return cfg;
}

ScenarioScript mint_script()
{
    ScenarioScript script;
    const char* wallets[] = {"alice", "bob", "carol", "dave"};
    const int64_t values[] = {100, 250, 40, 75};
    for (int i = 0; i < 4; ++i)
    {
        ScenarioAction action;
        action.type = ScenarioAction::Type::Mint;
        action.at = i;
        action.wallet = wallets[i];
        action.value = values[i];
        script.actions.push_back(action);
    }
    return script;
}

ScenarioScript transfer_script()
{
    ScenarioScript script = mint_script();

    ScenarioAction inter;
    inter.type = ScenarioAction::Type::Pay;
    inter.at = 20;
    inter.wallet = "alice";
    inter.receiver = "carol";
    inter.mint_index = 0;
    script.actions.push_back(inter);

    ScenarioAction intra;
    intra.type = ScenarioAction::Type::IntraPay;
    intra.at = 30;
    intra.wallet = "bob";
    intra.receiver = "alice";
    intra.mint_index = 1;
    script.actions.push_back(intra);

    ScenarioAction onward;
    onward.type = ScenarioAction::Type::Pay;
    onward.at = 40;
    onward.wallet = "carol";
    onward.receiver = "bob";
    onward.mint_index = 0;
    script.actions.push_back(onward);

    return script;
}

ScenarioScript online_payment_script()
{
    ScenarioScript script = mint_script();

    ScenarioAction online;
    online.type = ScenarioAction::Type::OnlinePay;
    online.at = 20;
    online.wallet = "dave";
    online.receiver = "alice";
    online.mint_index = 3;
    script.actions.push_back(online);

    ScenarioAction spend_new;
    spend_new.type = ScenarioAction::Type::OnlinePay;
    spend_new.at = 40;
    spend_new.wallet = "carol";
    spend_new.receiver = "bob";
    spend_new.mint_index = 2;
    script.actions.push_back(spend_new);

    return script;
}

} // namespace qvault::netsim::demo
