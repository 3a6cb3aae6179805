// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qvault/vault/messages.hpp"

namespace qvault::netsim {

using Json = nlohmann::ordered_json;

enum class NodeRole {
    Ia,
    Msb,
    Wallet,
    QuantumWallet, // test-only: expands into a personal vault plus a wallet
};

std::string to_string(NodeRole role);
NodeRole role_from_string(const std::string& text);

struct NodeSpec {
    std::string id;
    NodeRole role = NodeRole::Wallet;
    std::string home_msb; // wallets only
};

struct LinkSpec {
    std::string a;
    std::string b;
    int latency = 1;
};

// Availability attacks on the network. Classical links admit drop, delay and
// duplicate; quantum links admit drop only.
struct AdversaryRule {
    std::optional<vault::MessageKind> match_kind;
    std::optional<std::string> match_from;
    std::optional<std::string> match_to;
    bool quantum = false;

    enum class Action { Drop, Delay, Duplicate } action = Action::Drop;
    int delay_ticks = 0;
};

struct NetworkConfig {
    uint64_t seed = 0;
    int qubits = 8;
    int64_t timeout_ticks = 64;
    bool allow_quantum_wallets = false;
    std::vector<NodeSpec> nodes;
    std::vector<LinkSpec> classical_links;
    std::vector<LinkSpec> quantum_links;
    std::vector<AdversaryRule> adversary;

    static NetworkConfig from_json(const Json& j);
    Json to_json() const;

    // topology invariants: exactly one issuing authority, every wallet homed
    // at an existing vault, quantum links between vault-role nodes only
    void validate() const;

    // resolves QuantumWallet nodes into a personal single-account vault plus
    // a plain wallet, rewiring vault-layer links onto the vault; also gives
    // every quantum link a classical companion
    NetworkConfig expanded() const;

    std::string digest() const;
};

} // namespace qvault::netsim
