// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "qvault/netsim/config.hpp"
#include "qvault/netsim/scenario.hpp"
#include "qvault/netsim/transcript.hpp"
#include "qvault/vault/entities.hpp"

namespace qvault::netsim {

// Deterministic discrete-event simulation of the three-layer system: one
// issuing authority, quantum vaults connected by quantum links, wallets on
// classical links. Single event loop, single seeded randomness source;
// transcripts are byte-reproducible.
class Simulation {
public:
    static constexpr int64_t kDefaultMaxTicks = 1'000'000;

    explicit Simulation(const NetworkConfig& config);

    // queue a message on the classical network; adversary rules may drop,
    // delay or duplicate it in flight
    void send_classical(vault::ProtocolMessage msg);

    // move a banknote over a quantum link; ownership enters the in-flight
    // event, the sender keeps nothing; the adversary may only drop it
    void send_quantum(vault::ProtocolMessage msg);

    // schedule a wallet action; returns its correlation id
    std::string inject_action(const ScenarioAction& action);

    Transcript run_until_quiescent(int64_t max_ticks = kDefaultMaxTicks);
    Transcript run_scenario(const ScenarioScript& script, int64_t max_ticks = kDefaultMaxTicks);

    // ledger queries
    int64_t ia_total_active_value() const { return ia_->total_active_value(); }
    int64_t msb_total_custody_value(const std::string& msb) const;
    int64_t wallet_balance(const std::string& wallet) const;

    const NetworkConfig& config() const { return cfg_; }
    int64_t now() const { return now_; }
    Rng& rng() { return rng_; }
    qsim::QuantumEngine& engine() { return engine_; }
    money::OracleRegistry& oracles() { return oracles_; }

    const vault::IaEntity& ia() const { return *ia_; }
    vault::MsbEntity& msb(const std::string& id);
    vault::WalletEntity& wallet(const std::string& id);
    std::optional<vault::Receipt> receipt_for(const std::string& correlation) const;

private:
    struct SimEvent {
        enum class Kind { Deliver, Action, Timeout } kind = Kind::Deliver;
        std::optional<vault::ProtocolMessage> message;
        std::string channel; // deliver only
        uint64_t delivery_id = 0;
        std::optional<ScenarioAction> action;
        std::string correlation; // action / timeout
    };

    using QueueKey = std::pair<int64_t, uint64_t>;

    void schedule(int64_t time, SimEvent event);
    void process(QueueKey key, SimEvent event);
    void process_deliver(SimEvent event);
    void process_action(const SimEvent& event);
    void process_timeout(const SimEvent& event);
    void dispatch_output(vault::EntityOutput output);
    void route(vault::ProtocolMessage msg);
    const AdversaryRule* match_rule(const vault::ProtocolMessage& msg, bool quantum) const;
    void record_receipt(const vault::Receipt& receipt);
    Json& append_record(const char* type);
    Transcript finalize(bool quiescent);
    vault::EntityContext context();
    int link_latency(const std::string& a, const std::string& b, bool quantum) const;

    NetworkConfig cfg_;
    qsim::QuantumEngine engine_;
    money::OracleRegistry oracles_;
    Rng rng_;

    std::unique_ptr<vault::IaEntity> ia_;
    std::map<std::string, vault::MsbEntity> msbs_;
    std::map<std::string, vault::WalletEntity> wallets_;
    std::map<std::string, NodeRole> roles_;

    std::map<std::pair<std::string, std::string>, int> classical_links_;
    std::map<std::pair<std::string, std::string>, int> quantum_links_;

    std::map<QueueKey, SimEvent> queue_;
    std::map<std::string, QueueKey> timeout_keys_; // cancellable timeouts
    uint64_t next_event_seq_ = 0;
    uint64_t next_delivery_id_ = 1;
    uint64_t next_record_ = 0;
    int action_count_ = 0;
    int64_t now_ = 0;

    std::vector<Json> records_;
    std::vector<vault::Receipt> receipts_;
    std::map<std::string, vault::Receipt> receipt_index_;
    Json nodes_json_;
};

// builds and validates a simulation from a config (quantum wallets expanded)
Simulation build_simulation(const NetworkConfig& config);

} // namespace qvault::netsim
