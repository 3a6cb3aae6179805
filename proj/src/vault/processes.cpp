// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/vault/processes.hpp"

#include "qvault/common/errors.hpp"

namespace qvault::vault {

namespace {

Receipt run_action(netsim::Simulation& sim, const netsim::ScenarioAction& action)
{
    const std::string correlation = sim.inject_action(action);
    sim.run_until_quiescent();
    auto receipt = sim.receipt_for(correlation);
    if (!receipt)
        throw Error("process ended without a terminal receipt");
    return *receipt;
}

netsim::ScenarioAction payment(netsim::ScenarioAction::Type type, netsim::Simulation& sim,
                               const std::string& payer, const std::string& receiver,
                               const std::string& serial)
{
    netsim::ScenarioAction action;
    action.type = type;
    action.at = sim.now();
    action.wallet = payer;
    action.receiver = receiver;
    action.serial = serial;
    return action;
}

} // namespace

Receipt process_on_demand_mint(netsim::Simulation& sim, const std::string& wallet, int64_t value)
{
    netsim::ScenarioAction action;
    action.type = netsim::ScenarioAction::Type::Mint;
    action.at = sim.now();
    action.wallet = wallet;
    action.value = value;
    return run_action(sim, action);
}

Receipt process_transfer_inter_msb(netsim::Simulation& sim, const std::string& payer_wallet,
                                   const std::string& receiver_wallet, const std::string& serial)
{
    if (sim.wallet(payer_wallet).home_msb() == sim.wallet(receiver_wallet).home_msb())
        throw Error("inter-msb transfer requires wallets at different vaults");
    return run_action(
        sim, payment(netsim::ScenarioAction::Type::Pay, sim, payer_wallet, receiver_wallet, serial));
}

Receipt process_transfer_intra_msb(netsim::Simulation& sim, const std::string& payer_wallet,
                                   const std::string& receiver_wallet, const std::string& serial)
{
    if (sim.wallet(payer_wallet).home_msb() != sim.wallet(receiver_wallet).home_msb())
        throw Error("intra-msb transfer requires wallets at the same vault");
    return run_action(sim, payment(netsim::ScenarioAction::Type::IntraPay, sim, payer_wallet,
                                   receiver_wallet, serial));
}

Receipt process_online_payment(netsim::Simulation& sim, const std::string& payer_wallet,
                               const std::string& receiver_wallet, const std::string& serial)
{
    return run_action(sim, payment(netsim::ScenarioAction::Type::OnlinePay, sim, payer_wallet,
                                   receiver_wallet, serial));
}

int64_t ia_total_active_value(const netsim::Simulation& sim)
{
    return sim.ia_total_active_value();
}

int64_t msb_total_custody_value(const netsim::Simulation& sim, const std::string& msb)
{
    return sim.msb_total_custody_value(msb);
}

int64_t wallet_balance(const netsim::Simulation& sim, const std::string& wallet)
{
    return sim.wallet_balance(wallet);
}

} // namespace qvault::vault
