// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "qvault/netsim/simulation.hpp"

namespace qvault::vault {

// Drivers for the three settlement processes. Each injects the wallet action
// into a running simulation, drains the event queue, and returns the terminal
// receipt of that process instance.

Receipt process_on_demand_mint(netsim::Simulation& sim, const std::string& wallet, int64_t value);

Receipt process_transfer_inter_msb(netsim::Simulation& sim, const std::string& payer_wallet,
                                   const std::string& receiver_wallet, const std::string& serial);

Receipt process_transfer_intra_msb(netsim::Simulation& sim, const std::string& payer_wallet,
                                   const std::string& receiver_wallet, const std::string& serial);

Receipt process_online_payment(netsim::Simulation& sim, const std::string& payer_wallet,
                               const std::string& receiver_wallet, const std::string& serial);

// pure ledger sums
int64_t ia_total_active_value(const netsim::Simulation& sim);
int64_t msb_total_custody_value(const netsim::Simulation& sim, const std::string& msb);
int64_t wallet_balance(const netsim::Simulation& sim, const std::string& wallet);

} // namespace qvault::vault
