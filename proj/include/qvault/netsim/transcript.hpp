// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qvault/vault/messages.hpp"

namespace qvault::netsim {

using Json = nlohmann::ordered_json;

// Deterministic event log of one run: ordered records (sends, deliveries,
// actions, adversary interventions, ledger deltas, losses, receipts) plus a
// summary with the terminal receipts and ledger snapshots at quiescence.
// Identical (config, seed, script) produce byte-identical transcripts.
struct Transcript {
    std::string config_digest;
    uint64_t seed = 0;
    Json nodes; // id -> role
    std::vector<Json> records;
    std::vector<vault::Receipt> receipts;
    Json ledgers;
    bool quiescent = false;
    int64_t final_tick = 0;

    Json summary() const;

    // one record per line, summary object last
    std::string to_jsonl() const;
    static Transcript from_jsonl(const std::string& text);
};

} // namespace qvault::netsim
