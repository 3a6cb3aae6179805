// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "qvault/netsim/config.hpp"
#include "qvault/netsim/scenario.hpp"

namespace qvault::netsim::demo {

// Reference topology: one issuing authority, two vaults, four wallets
// (alice and bob at msb-east, carol and dave at msb-west), 8-qubit notes.
NetworkConfig network(uint64_t seed = 42);

// named scenarios used by the demo subcommands and the determinism criterion
ScenarioScript mint_script();
ScenarioScript transfer_script();
ScenarioScript online_payment_script();

} // namespace qvault::netsim::demo
