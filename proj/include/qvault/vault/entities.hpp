// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qvault/common/rng.hpp"
#include "qvault/money/scheme.hpp"
#include "qvault/vault/messages.hpp"

namespace qvault::vault {

// shared services an entity may use while handling one message
struct EntityContext {
    qsim::QuantumEngine& engine; // protocol mode inside a simulation
    Rng& rng;
    money::OracleRegistry& oracles;
    int64_t now = 0;
};

struct RegistryEvent {
    std::string serial;
    int64_t value = 0;
    money::NoteStatus status = money::NoteStatus::Pending;
};

struct CustodyEvent {
    std::string msb;
    std::string account;
    std::string serial;
    int64_t value = 0;
    bool credit = true;
};

struct LossRecord {
    std::string serial;
    int64_t value = 0;
    std::string cause;
};

// Everything an entity wants the simulation to do after one step: messages to
// route, terminal receipts, and ledger/loss events for the transcript.
struct EntityOutput {
    std::vector<ProtocolMessage> messages;
    std::vector<Receipt> receipts;
    std::vector<LossRecord> losses;
    std::vector<RegistryEvent> registry_events;
    std::vector<CustodyEvent> custody_events;
};

// scenario-level order handed to a wallet
struct WalletCommand {
    enum class Mode {
        Mint,
        Pay,      // transfer; intra vs inter decided by the receiver's vault
        IntraPay, // transfer that must stay inside the home vault
        OnlinePay,
    };

    Mode mode = Mode::Mint;
    std::string correlation_id;
    int64_t value = 0;      // mint amount
    std::string receiver;   // payments
    std::string serial;     // explicit serial or "auto"
};

// ---------------------------------------------------------------------------

// Issuing authority: mints classical banknotes, tracks serial status, settles
// destruction certificates. Never learns wallet or account identifiers.
class IaEntity {
public:
    IaEntity(std::string id, money::SchemeParams params, Rng& rng);

    const std::string& id() const { return id_; }

    EntityOutput handle(ProtocolMessage msg, EntityContext& ctx);

    int64_t total_active_value() const { return sk_.total_active_value(); }
    const money::SchemeSecretKey& keys() const { return sk_; }

    Json ledger_snapshot() const;

private:
    EntityOutput on_mint_request(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_ack(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_destroy_confirm(const ProtocolMessage& msg, EntityContext& ctx);
    ProtocolMessage mint_toward(const std::string& msb, const std::string& correlation,
                                int64_t value, EntityOutput& out, Rng& rng);

    std::string id_;
    money::SchemeSecretKey sk_;
    money::SchemePublicKey pk_;
    std::set<std::string> seen_;
};

// Quantum vault: custodian of wallet banknotes, runs the quantum side of
// minting, transfers and destruction.
class MsbEntity {
public:
    explicit MsbEntity(std::string id);

    const std::string& id() const { return id_; }

    // the issuing authority this vault requests minting from
    void set_ia(std::string ia_id) { ia_id_ = std::move(ia_id); }

    void register_wallet(const std::string& account, const std::string& credential);
    bool has_account(const std::string& account) const { return credentials_.count(account) != 0; }

    EntityOutput handle(ProtocolMessage msg, EntityContext& ctx);

    int64_t total_custody_value() const;
    bool in_custody(const std::string& account, const std::string& serial) const;
    int64_t account_value(const std::string& account) const;
    std::optional<money::BanknotePublicKey> public_key(const std::string& serial) const;

    Json ledger_snapshot() const;

private:
    struct Pending {
        enum class Kind { Mint, TransferOut, OnlineOut, OnlineCredit } kind = Kind::Mint;
        std::string account;
        std::string serial;     // the serial being moved or destroyed
        std::string new_serial; // online settlement: the replacement note
        int64_t value = 0;
        std::string peer_msb;
        std::optional<money::QuantumBanknote> staged;
    };

    EntityOutput on_wallet_mint(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_classical_note(ProtocolMessage msg, EntityContext& ctx);
    EntityOutput on_final_pk(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_wallet_transfer(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_quantum_transfer(ProtocolMessage msg, EntityContext& ctx);
    EntityOutput on_validation_result(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_wallet_destroy(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_peer_cert(const ProtocolMessage& msg, EntityContext& ctx);
    EntityOutput on_ia_error(const ProtocolMessage& msg, EntityContext& ctx);

    bool credential_ok(const std::string& account, const Json& payload) const;
    void credit(EntityOutput& out, const std::string& account, money::QuantumBanknote note,
                const money::BanknotePublicKey& pk);
    money::QuantumBanknote debit(EntityOutput& out, const std::string& account, const std::string& serial);

    std::string id_;
    std::string ia_id_ = "ia";
    std::map<std::string, std::set<std::string>> custody_;          // account -> serials
    std::map<std::string, money::QuantumBanknote> vault_storage_;   // serial -> note
    std::map<std::string, money::BanknotePublicKey> pk_table_;      // serial -> public key
    std::map<std::string, std::string> credentials_;                // account -> token
    std::map<std::string, Pending> pending_;                        // correlation -> process
    std::set<std::string> seen_;
};

// Classical wallet: commands its vault and agrees on payments with peers.
// Holds no quantum state; its book is serials and amounts from receipts.
class WalletEntity {
public:
    WalletEntity(std::string id, std::string home_msb, std::string credential);

    const std::string& id() const { return id_; }
    const std::string& home_msb() const { return home_msb_; }
    const std::string& credential() const { return credential_; }

    EntityOutput on_command(const WalletCommand& command, EntityContext& ctx);
    EntityOutput handle(ProtocolMessage msg, EntityContext& ctx);

    int64_t balance() const;
    bool owns(const std::string& serial) const { return book_.count(serial) != 0; }

    Json ledger_snapshot() const;

private:
    struct Pending {
        WalletCommand::Mode mode = WalletCommand::Mode::Pay;
        std::string receiver;
        std::string serial;
    };

    EntityOutput start_payment(const WalletCommand& command, EntityContext& ctx);
    ProtocolMessage command_to_vault(const std::string& correlation, WalletCommand::Mode mode,
                                     const std::string& serial, const std::string& receiver,
                                     const std::string& receiver_msb) const;

    std::string id_;
    std::string home_msb_;
    std::string credential_;
    std::map<std::string, int64_t> book_; // serial -> value
    std::map<std::string, Pending> pending_;
    std::set<std::string> seen_;
};

} // namespace qvault::vault
