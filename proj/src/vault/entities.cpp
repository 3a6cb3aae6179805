// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/vault/entities.hpp"

#include "qvault/common/errors.hpp"
#include "qvault/qsim/distribution.hpp"

namespace qvault::vault {

namespace {

std::string mode_to_string(WalletCommand::Mode mode)
{
    switch (mode)
    {
    case WalletCommand::Mode::Mint:
        return "mint";
    case WalletCommand::Mode::Pay:
        return "pay";
    case WalletCommand::Mode::IntraPay:
        return "intra-pay";
    default:
        return "online-pay";
    }
}

Receipt make_receipt(const std::string& corr, ReceiptOutcome outcome,
                     std::vector<std::string> serials = {}, std::vector<int64_t> amounts = {},
                     std::string reason = {})
{
    Receipt r;
    r.correlation_id = corr;
    r.outcome = outcome;
    r.serials = std::move(serials);
    r.amounts = std::move(amounts);
    r.reason = std::move(reason);
    return r;
}

} // namespace

// --------------------------------------------------------------------------
// issuing authority

IaEntity::IaEntity(std::string id, money::SchemeParams params, Rng& rng) : id_(std::move(id))
{
    auto [pk, sk] = money::gen(params, rng);
    pk_ = pk;
    sk_ = std::move(sk);
}

EntityOutput IaEntity::handle(ProtocolMessage msg, EntityContext& ctx)
{
    const std::string dedup = msg.from + "|" + to_string(msg.kind) + "|" + msg.correlation_id;
    if (!seen_.insert(dedup).second)
        return {};

    try
    {
        switch (msg.kind)
        {
        case MessageKind::MintRequest:
            return on_mint_request(msg, ctx);
        case MessageKind::AckCipher:
            return on_ack(msg, ctx);
        case MessageKind::DestroyConfirmRequest:
            return on_destroy_confirm(msg, ctx);
        default:
            return {};
        }
    }
    catch (const qvault::Error& e)
    {
        EntityOutput out;
        out.messages.push_back(make_message(MessageKind::Error, id_, msg.from, msg.correlation_id,
                                            Json{{"reason", e.what()}}));
        return out;
    }
}

ProtocolMessage IaEntity::mint_toward(const std::string& msb, const std::string& correlation,
                                      int64_t value, EntityOutput& out, Rng& rng)
{
    auto [record, instruction] = money::bank_mint(sk_, value, rng);
    out.registry_events.push_back({record.serial, record.value, money::NoteStatus::Pending});

    Json payload;
    payload["serial"] = record.serial;
    payload["value"] = record.value;
    payload["basis"] = "sealed";
    payload["rank"] = instruction.basis.rank();

    ProtocolMessage msg =
        make_message(MessageKind::ClassicalNote, id_, msb, correlation, std::move(payload));
    msg.instruction = std::move(instruction);
    return msg;
}

EntityOutput IaEntity::on_mint_request(const ProtocolMessage& msg, EntityContext& ctx)
{
    const int64_t value = msg.payload.at("value").get<int64_t>();
    const std::string msb = msg.payload.at("msb").get<std::string>();

    EntityOutput out;
    if (value <= 0)
    {
        out.messages.push_back(make_message(MessageKind::Error, id_, msg.from, msg.correlation_id,
                                            Json{{"reason", "invalid-value"}}));
        return out;
    }
    out.messages.push_back(mint_toward(msb, msg.correlation_id, value, out, ctx.rng));
    return out;
}

EntityOutput IaEntity::on_ack(const ProtocolMessage& msg, EntityContext& ctx)
{
    EntityOutput out;
    const auto ack = money::ack_from_json(msg.payload);
    auto pk = money::finalize_mint(sk_, ack, ctx.oracles);
    out.registry_events.push_back({pk.serial, pk.value, money::NoteStatus::Active});
    out.messages.push_back(
        make_message(MessageKind::FinalPk, id_, msg.from, msg.correlation_id, money::to_json(pk)));
    return out;
}

EntityOutput IaEntity::on_destroy_confirm(const ProtocolMessage& msg, EntityContext& ctx)
{
    EntityOutput out;
    const std::string serial = msg.payload.at("serial").get<std::string>();
    const std::string witness = msg.payload.at("witness").get<std::string>();
    const int64_t value = msg.payload.at("value").get<int64_t>();

    money::DestructionCert cert;
    cert.serial = serial;
    cert.qubits = static_cast<int>(witness.size());
    cert.witness = qsim::bits_from_string(witness);

    const auto result = money::cv(sk_, cert);
    if (!result.ok)
    {
        out.messages.push_back(make_message(
            MessageKind::Error, id_, msg.from, msg.correlation_id,
            Json{{"reason", "cert-" + money::to_string(result.reason)}, {"serial", serial}}));
        return out;
    }
    if (sk_.note(serial).value != value)
    {
        out.messages.push_back(make_message(MessageKind::Error, id_, msg.from, msg.correlation_id,
                                            Json{{"reason", "value-mismatch"}, {"serial", serial}}));
        return out;
    }

    money::settle_destroyed(sk_, serial);
    out.registry_events.push_back({serial, value, money::NoteStatus::Destroyed});
    out.messages.push_back(mint_toward(msg.from, msg.correlation_id, value, out, ctx.rng));
    return out;
}

Json IaEntity::ledger_snapshot() const
{
    Json registry = Json::object();
    for (const auto& [serial, note] : sk_.registry())
        registry[serial] = Json{{"status", money::to_string(note.status)}, {"value", note.value}};
    Json j;
    j["active_value"] = total_active_value();
    j["registry"] = std::move(registry);
    return j;
}

// --------------------------------------------------------------------------
// money services business / quantum vault

MsbEntity::MsbEntity(std::string id) : id_(std::move(id)) {}

void MsbEntity::register_wallet(const std::string& account, const std::string& credential)
{
    credentials_[account] = credential;
    custody_.emplace(account, std::set<std::string>{});
}

bool MsbEntity::credential_ok(const std::string& account, const Json& payload) const
{
    auto it = credentials_.find(account);
    return it != credentials_.end() && payload.contains("credential") &&
           payload.at("credential").get<std::string>() == it->second;
}

void MsbEntity::credit(EntityOutput& out, const std::string& account, money::QuantumBanknote note,
                       const money::BanknotePublicKey& pk)
{
    const std::string serial = note.serial;
    const int64_t value = note.value;
    if (vault_storage_.count(serial) != 0)
        throw Error("vault already stores serial " + serial);
    custody_[account].insert(serial);
    vault_storage_.emplace(serial, std::move(note));
    pk_table_.insert_or_assign(serial, pk);
    out.custody_events.push_back({id_, account, serial, value, true});
}

money::QuantumBanknote MsbEntity::debit(EntityOutput& out, const std::string& account,
                                        const std::string& serial)
{
    auto node = vault_storage_.extract(serial);
    if (node.empty())
        throw Error("vault storage out of sync for serial " + serial);
    custody_[account].erase(serial);
    out.custody_events.push_back({id_, account, serial, node.mapped().value, false});
    return std::move(node.mapped());
}

EntityOutput MsbEntity::handle(ProtocolMessage msg, EntityContext& ctx)
{
    const std::string dedup = msg.from + "|" + to_string(msg.kind) + "|" + msg.correlation_id;
    if (!seen_.insert(dedup).second)
        return {};

    try
    {
        switch (msg.kind)
        {
        case MessageKind::MintRequest:
            return on_wallet_mint(msg, ctx);
        case MessageKind::ClassicalNote:
            return on_classical_note(std::move(msg), ctx);
        case MessageKind::FinalPk:
            return on_final_pk(msg, ctx);
        case MessageKind::QNoteTransfer:
            return msg.is_quantum() ? on_quantum_transfer(std::move(msg), ctx)
                                    : on_wallet_transfer(msg, ctx);
        case MessageKind::ValidationResult:
            return on_validation_result(msg, ctx);
        case MessageKind::DestroyCert:
            return msg.payload.contains("witness") ? on_peer_cert(msg, ctx)
                                                   : on_wallet_destroy(msg, ctx);
        case MessageKind::Error:
            return on_ia_error(msg, ctx);
        default:
            return {};
        }
    }
    catch (const qvault::Error& e)
    {
        EntityOutput out;
        out.receipts.push_back(
            make_receipt(msg.correlation_id, ReceiptOutcome::Error, {}, {}, e.what()));
        return out;
    }
}

EntityOutput MsbEntity::on_wallet_mint(const ProtocolMessage& msg, EntityContext&)
{
    EntityOutput out;
    const std::string account = msg.from;
    if (!credential_ok(account, msg.payload))
    {
        out.messages.push_back(make_message(MessageKind::Error, id_, account, msg.correlation_id,
                                            Json{{"reason", "authentication-failure"}}));
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {}, {},
                                            "authentication-failure"));
        return out;
    }
    const int64_t value = msg.payload.at("value").get<int64_t>();

    Pending pending;
    pending.kind = Pending::Kind::Mint;
    pending.account = account;
    pending.value = value;
    pending_[msg.correlation_id] = std::move(pending);

    out.messages.push_back(make_message(MessageKind::MintRequest, id_, ia_id_, msg.correlation_id,
                                        Json{{"value", value}, {"msb", id_}}));
    return out;
}

EntityOutput MsbEntity::on_classical_note(ProtocolMessage msg, EntityContext& ctx)
{
    EntityOutput out;
    auto it = pending_.find(msg.correlation_id);
    if (it == pending_.end() || !msg.instruction.has_value())
        return out;
    Pending& pending = it->second;

    auto [note, ack] = money::rec_mint(std::move(*msg.instruction), ctx.engine, id_);
    msg.instruction.reset(); // basis description gone after preparation

    if (pending.kind == Pending::Kind::OnlineCredit)
        pending.new_serial = note.serial;
    else
        pending.serial = note.serial;
    pending.staged = std::move(note);

    out.messages.push_back(
        make_message(MessageKind::AckCipher, id_, msg.from, msg.correlation_id, money::to_json(ack)));
    return out;
}

EntityOutput MsbEntity::on_final_pk(const ProtocolMessage& msg, EntityContext& ctx)
{
    EntityOutput out;
    auto it = pending_.find(msg.correlation_id);
    if (it == pending_.end())
        return out;
    Pending& pending = it->second;
    if (!pending.staged.has_value())
        return out;

    auto pk = money::pk_from_json(msg.payload, ctx.oracles);
    if (pk.serial != pending.staged->serial)
        throw Error("final public key does not match the staged banknote");

    money::QuantumBanknote note = std::move(*pending.staged);
    const int64_t value = note.value;
    credit(out, pending.account, std::move(note), pk);

    if (pending.kind == Pending::Kind::OnlineCredit)
    {
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Completed,
                                            {pending.serial, pk.serial}, {value}));
        out.messages.push_back(make_message(MessageKind::MintGrant, id_, pending.account,
                                            msg.correlation_id,
                                            Json{{"serial", pk.serial}, {"value", value}}));
        if (pending.peer_msb != id_)
            out.messages.push_back(make_message(
                MessageKind::ValidationResult, id_, pending.peer_msb, msg.correlation_id,
                Json{{"serial", pending.serial}, {"valid", true}, {"reason", "settled"}}));
    }
    else
    {
        out.receipts.push_back(
            make_receipt(msg.correlation_id, ReceiptOutcome::Completed, {pk.serial}, {value}));
        out.messages.push_back(make_message(MessageKind::MintGrant, id_, pending.account,
                                            msg.correlation_id,
                                            Json{{"serial", pk.serial}, {"value", value}}));
    }
    pending_.erase(it);
    return out;
}

EntityOutput MsbEntity::on_wallet_transfer(const ProtocolMessage& msg, EntityContext&)
{
    EntityOutput out;
    const std::string account = msg.from;
    if (!credential_ok(account, msg.payload))
    {
        out.messages.push_back(make_message(MessageKind::Error, id_, account, msg.correlation_id,
                                            Json{{"reason", "authentication-failure"}}));
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {}, {},
                                            "authentication-failure"));
        return out;
    }
    const std::string serial = msg.payload.at("serial").get<std::string>();
    const std::string receiver = msg.payload.at("receiver_wallet").get<std::string>();
    const std::string receiver_msb = msg.payload.at("receiver_msb").get<std::string>();

    auto held = custody_.find(account);
    if (held == custody_.end() || held->second.count(serial) == 0)
    {
        out.messages.push_back(make_message(MessageKind::Error, id_, account, msg.correlation_id,
                                            Json{{"reason", "not-in-custody"}, {"serial", serial}}));
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {serial}, {},
                                            "not-in-custody"));
        return out;
    }

    if (receiver_msb == id_)
    {
        // intra-vault transfer: ledger move only, no quantum operation
        if (credentials_.count(receiver) == 0)
        {
            out.messages.push_back(make_message(MessageKind::Error, id_, account, msg.correlation_id,
                                                Json{{"reason", "unknown-account"}}));
            out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {serial},
                                                {}, "unknown-account"));
            return out;
        }
        const int64_t value = vault_storage_.at(serial).value;
        if (receiver == account)
        {
            out.receipts.push_back(
                make_receipt(msg.correlation_id, ReceiptOutcome::Completed, {serial}, {value}));
            out.messages.push_back(make_message(
                MessageKind::ValidationResult, id_, account, msg.correlation_id,
                Json{{"serial", serial}, {"value", value}, {"valid", true}, {"direction", "self"}}));
            return out;
        }
        custody_[account].erase(serial);
        custody_[receiver].insert(serial);
        out.custody_events.push_back({id_, account, serial, value, false});
        out.custody_events.push_back({id_, receiver, serial, value, true});
        out.receipts.push_back(
            make_receipt(msg.correlation_id, ReceiptOutcome::Completed, {serial}, {value}));
        out.messages.push_back(make_message(
            MessageKind::ValidationResult, id_, account, msg.correlation_id,
            Json{{"serial", serial}, {"value", value}, {"valid", true}, {"direction", "debit"}}));
        out.messages.push_back(make_message(
            MessageKind::ValidationResult, id_, receiver, msg.correlation_id,
            Json{{"serial", serial}, {"value", value}, {"valid", true}, {"direction", "credit"}}));
        return out;
    }

    // inter-vault transfer: the banknote and its public key move over the
    // quantum link; nothing about it stays behind
    money::QuantumBanknote note = debit(out, account, serial);
    auto pk_node = pk_table_.extract(serial);
    if (pk_node.empty())
        throw Error("missing public key for serial " + serial);

    Pending pending;
    pending.kind = Pending::Kind::TransferOut;
    pending.account = account;
    pending.serial = serial;
    pending.value = note.value;
    pending.peer_msb = receiver_msb;
    pending_[msg.correlation_id] = std::move(pending);

    ProtocolMessage transfer = make_message(
        MessageKind::QNoteTransfer, id_, receiver_msb, msg.correlation_id,
        Json{{"serial", serial}, {"value", note.value}, {"receiver_account", receiver}});
    transfer.quantum = QuantumPayload{std::move(note), std::move(pk_node.mapped()), receiver};
    out.messages.push_back(std::move(transfer));
    return out;
}

EntityOutput MsbEntity::on_quantum_transfer(ProtocolMessage msg, EntityContext& ctx)
{
    EntityOutput out;
    QuantumPayload payload = std::move(*msg.quantum);
    msg.quantum.reset();
    const std::string serial = payload.note.serial;
    const int64_t value = payload.note.value;
    const std::string receiver = payload.receiver_account;

    if (credentials_.count(receiver) == 0)
    {
        out.losses.push_back({serial, value, "discarded-unknown-account"});
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {serial},
                                            {value}, "unknown-account"));
        out.messages.push_back(make_message(
            MessageKind::ValidationResult, id_, msg.from, msg.correlation_id,
            Json{{"serial", serial}, {"valid", false}, {"reason", "unknown-account"}}));
        return out;
    }

    auto [valid, note] = money::qv(payload.pk, std::move(payload.note), ctx.engine, ctx.rng);
    if (!valid)
    {
        // invalid notes are discarded on the spot; the payer side only hears
        // about the destruction
        out.losses.push_back({serial, value, "discarded-invalid"});
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::RejectedInvalidNote,
                                            {serial}, {value}, "invalid-note"));
        out.messages.push_back(make_message(
            MessageKind::ValidationResult, id_, msg.from, msg.correlation_id,
            Json{{"serial", serial}, {"valid", false}, {"reason", "invalid-note"}}));
        return out;
    }

    credit(out, receiver, std::move(note), payload.pk);
    out.receipts.push_back(
        make_receipt(msg.correlation_id, ReceiptOutcome::Completed, {serial}, {value}));
    out.messages.push_back(
        make_message(MessageKind::ValidationResult, id_, msg.from, msg.correlation_id,
                     Json{{"serial", serial}, {"valid", true}, {"reason", ""}}));
    out.messages.push_back(make_message(
        MessageKind::ValidationResult, id_, receiver, msg.correlation_id,
        Json{{"serial", serial}, {"value", value}, {"valid", true}, {"direction", "credit"}}));
    return out;
}

EntityOutput MsbEntity::on_validation_result(const ProtocolMessage& msg, EntityContext&)
{
    EntityOutput out;
    auto it = pending_.find(msg.correlation_id);
    if (it == pending_.end())
        return out;
    const Pending& pending = it->second;
    if (pending.kind != Pending::Kind::TransferOut && pending.kind != Pending::Kind::OnlineOut)
        return out;

    Json notify;
    notify["serial"] = pending.serial;
    notify["value"] = pending.value;
    notify["valid"] = msg.payload.at("valid").get<bool>();
    notify["direction"] = "debit";
    notify["reason"] = msg.payload.value("reason", "");
    out.messages.push_back(make_message(MessageKind::ValidationResult, id_, pending.account,
                                        msg.correlation_id, std::move(notify)));
    pending_.erase(it);
    return out;
}

EntityOutput MsbEntity::on_wallet_destroy(const ProtocolMessage& msg, EntityContext& ctx)
{
    EntityOutput out;
    const std::string account = msg.from;
    if (!credential_ok(account, msg.payload))
    {
        out.messages.push_back(make_message(MessageKind::Error, id_, account, msg.correlation_id,
                                            Json{{"reason", "authentication-failure"}}));
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {}, {},
                                            "authentication-failure"));
        return out;
    }
    const std::string serial = msg.payload.at("serial").get<std::string>();
    const std::string receiver = msg.payload.at("receiver_wallet").get<std::string>();
    const std::string receiver_msb = msg.payload.at("receiver_msb").get<std::string>();

    auto held = custody_.find(account);
    if (held == custody_.end() || held->second.count(serial) == 0)
    {
        out.messages.push_back(make_message(MessageKind::Error, id_, account, msg.correlation_id,
                                            Json{{"reason", "not-in-custody"}, {"serial", serial}}));
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {serial}, {},
                                            "not-in-custody"));
        return out;
    }

    // the banknote is physically deleted here; only the certificate travels on
    money::QuantumBanknote note = debit(out, account, serial);
    auto pk_node = pk_table_.extract(serial);
    if (pk_node.empty())
        throw Error("missing public key for serial " + serial);
    const int64_t value = note.value;
    const auto cert = money::gen_cert(pk_node.mapped(), std::move(note), ctx.engine, ctx.rng);

    Json cert_payload;
    cert_payload["serial"] = serial;
    cert_payload["witness"] = qsim::bits_to_string(cert.witness, cert.qubits);
    cert_payload["value"] = value;
    cert_payload["receiver_account"] = receiver;

    if (receiver_msb == id_)
    {
        // both parties vault here: go straight to destruction confirmation
        Pending pending;
        pending.kind = Pending::Kind::OnlineCredit;
        pending.account = receiver;
        pending.serial = serial;
        pending.value = value;
        pending.peer_msb = id_;
        pending_[msg.correlation_id] = std::move(pending);
        out.messages.push_back(
            make_message(MessageKind::DestroyConfirmRequest, id_, ia_id_, msg.correlation_id,
                         Json{{"serial", serial},
                              {"witness", qsim::bits_to_string(cert.witness, cert.qubits)},
                              {"value", value},
                              {"msb", id_}}));
        return out;
    }

    Pending pending;
    pending.kind = Pending::Kind::OnlineOut;
    pending.account = account;
    pending.serial = serial;
    pending.value = value;
    pending.peer_msb = receiver_msb;
    pending_[msg.correlation_id] = std::move(pending);

    out.messages.push_back(make_message(MessageKind::DestroyCert, id_, receiver_msb,
                                        msg.correlation_id, std::move(cert_payload)));
    return out;
}

EntityOutput MsbEntity::on_peer_cert(const ProtocolMessage& msg, EntityContext&)
{
    EntityOutput out;
    const std::string serial = msg.payload.at("serial").get<std::string>();
    const std::string witness = msg.payload.at("witness").get<std::string>();
    const int64_t value = msg.payload.at("value").get<int64_t>();
    const std::string receiver = msg.payload.at("receiver_account").get<std::string>();

    if (credentials_.count(receiver) == 0)
    {
        out.losses.push_back({serial, value, "cert-abandoned"});
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error, {serial},
                                            {value}, "unknown-account"));
        out.messages.push_back(make_message(
            MessageKind::ValidationResult, id_, msg.from, msg.correlation_id,
            Json{{"serial", serial}, {"valid", false}, {"reason", "unknown-account"}}));
        return out;
    }

    Pending pending;
    pending.kind = Pending::Kind::OnlineCredit;
    pending.account = receiver;
    pending.serial = serial;
    pending.value = value;
    pending.peer_msb = msg.from;
    pending_[msg.correlation_id] = std::move(pending);

    out.messages.push_back(make_message(
        MessageKind::DestroyConfirmRequest, id_, ia_id_, msg.correlation_id,
        Json{{"serial", serial}, {"witness", witness}, {"value", value}, {"msb", id_}}));
    return out;
}

EntityOutput MsbEntity::on_ia_error(const ProtocolMessage& msg, EntityContext&)
{
    EntityOutput out;
    auto it = pending_.find(msg.correlation_id);
    if (it == pending_.end())
        return out;
    Pending pending = std::move(it->second);
    pending_.erase(it);
    const std::string reason = msg.payload.value("reason", "error");

    switch (pending.kind)
    {
    case Pending::Kind::Mint:
        out.receipts.push_back(
            make_receipt(msg.correlation_id, ReceiptOutcome::Error, {}, {}, reason));
        out.messages.push_back(make_message(MessageKind::Error, id_, pending.account,
                                            msg.correlation_id, Json{{"reason", reason}}));
        return out;
    case Pending::Kind::OnlineCredit:
        // the old note is already destroyed; record the stranded value
        out.losses.push_back({pending.serial, pending.value, "cert-rejected"});
        out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::RejectedCert,
                                            {pending.serial}, {pending.value}, reason));
        if (pending.peer_msb != id_)
            out.messages.push_back(make_message(
                MessageKind::ValidationResult, id_, pending.peer_msb, msg.correlation_id,
                Json{{"serial", pending.serial}, {"valid", false}, {"reason", reason}}));
        else
            out.messages.push_back(make_message(
                MessageKind::ValidationResult, id_, pending.account, msg.correlation_id,
                Json{{"serial", pending.serial},
                     {"value", pending.value},
                     {"valid", false},
                     {"direction", "debit"},
                     {"reason", reason}}));
        return out;
    default:
        out.receipts.push_back(
            make_receipt(msg.correlation_id, ReceiptOutcome::Error, {pending.serial}, {}, reason));
        return out;
    }
}

int64_t MsbEntity::total_custody_value() const
{
    int64_t total = 0;
    for (const auto& [account, serials] : custody_)
        for (const auto& serial : serials)
            total += vault_storage_.at(serial).value;
    return total;
}

bool MsbEntity::in_custody(const std::string& account, const std::string& serial) const
{
    auto it = custody_.find(account);
    return it != custody_.end() && it->second.count(serial) != 0;
}

int64_t MsbEntity::account_value(const std::string& account) const
{
    auto it = custody_.find(account);
    if (it == custody_.end())
        return 0;
    int64_t total = 0;
    for (const auto& serial : it->second)
        total += vault_storage_.at(serial).value;
    return total;
}

std::optional<money::BanknotePublicKey> MsbEntity::public_key(const std::string& serial) const
{
    auto it = pk_table_.find(serial);
    if (it == pk_table_.end())
        return std::nullopt;
    return it->second;
}

Json MsbEntity::ledger_snapshot() const
{
    Json accounts = Json::object();
    for (const auto& [account, serials] : custody_)
        accounts[account] = std::vector<std::string>(serials.begin(), serials.end());
    Json j;
    j["custody_value"] = total_custody_value();
    j["accounts"] = std::move(accounts);
    return j;
}

// --------------------------------------------------------------------------
// wallet

WalletEntity::WalletEntity(std::string id, std::string home_msb, std::string credential)
    : id_(std::move(id)), home_msb_(std::move(home_msb)), credential_(std::move(credential))
{
}

int64_t WalletEntity::balance() const
{
    int64_t total = 0;
    for (const auto& [serial, value] : book_)
        total += value;
    return total;
}

ProtocolMessage WalletEntity::command_to_vault(const std::string& correlation,
                                               WalletCommand::Mode mode, const std::string& serial,
                                               const std::string& receiver,
                                               const std::string& receiver_msb) const
{
    Json payload;
    payload["serial"] = serial;
    payload["receiver_wallet"] = receiver;
    payload["receiver_msb"] = receiver_msb;
    payload["credential"] = credential_;
    const MessageKind kind = mode == WalletCommand::Mode::OnlinePay ? MessageKind::DestroyCert
                                                                    : MessageKind::QNoteTransfer;
    return make_message(kind, id_, home_msb_, correlation, std::move(payload));
}

EntityOutput WalletEntity::on_command(const WalletCommand& command, EntityContext&)
{
    EntityOutput out;
    if (command.mode == WalletCommand::Mode::Mint)
    {
        if (command.value <= 0)
        {
            out.receipts.push_back(make_receipt(command.correlation_id, ReceiptOutcome::Error, {},
                                                {}, "invalid-value"));
            return out;
        }
        pending_[command.correlation_id] = Pending{command.mode, "", ""};
        out.messages.push_back(
            make_message(MessageKind::MintRequest, id_, home_msb_, command.correlation_id,
                         Json{{"value", command.value}, {"credential", credential_}}));
        return out;
    }

    // payment flavors
    std::string serial = command.serial;
    if (serial.empty() || serial == "auto")
    {
        if (book_.empty())
        {
            out.receipts.push_back(
                make_receipt(command.correlation_id, ReceiptOutcome::Error, {}, {}, "no-funds"));
            return out;
        }
        serial = book_.begin()->first;
    }
    const int64_t value = book_.count(serial) ? book_.at(serial) : 0;

    if (command.receiver == id_)
    {
        // self-payment needs no agreement
        out.messages.push_back(
            command_to_vault(command.correlation_id, command.mode, serial, id_, home_msb_));
        return out;
    }

    pending_[command.correlation_id] = Pending{command.mode, command.receiver, serial};
    Json offer;
    offer["phase"] = "offer";
    offer["mode"] = mode_to_string(command.mode);
    offer["serial"] = serial;
    offer["value"] = value;
    offer["payer"] = id_;
    out.messages.push_back(make_message(MessageKind::PayAgree, id_, command.receiver,
                                        command.correlation_id, std::move(offer)));
    return out;
}

EntityOutput WalletEntity::handle(ProtocolMessage msg, EntityContext&)
{
    const std::string dedup = msg.from + "|" + to_string(msg.kind) + "|" + msg.correlation_id +
                              "|" + msg.payload.value("phase", "");
    if (!seen_.insert(dedup).second)
        return {};

    EntityOutput out;
    switch (msg.kind)
    {
    case MessageKind::PayAgree: {
        const std::string phase = msg.payload.value("phase", "");
        if (phase == "offer")
        {
            Json accept;
            accept["phase"] = "accept";
            accept["msb"] = home_msb_;
            accept["account"] = id_;
            out.messages.push_back(make_message(MessageKind::PayAgree, id_, msg.from,
                                                msg.correlation_id, std::move(accept)));
            return out;
        }
        auto it = pending_.find(msg.correlation_id);
        if (it == pending_.end())
            return out;
        const Pending pending = it->second;
        pending_.erase(it);
        const std::string receiver_msb = msg.payload.at("msb").get<std::string>();
        if (pending.mode == WalletCommand::Mode::IntraPay && receiver_msb != home_msb_)
        {
            out.receipts.push_back(make_receipt(msg.correlation_id, ReceiptOutcome::Error,
                                                {pending.serial}, {}, "not-intra"));
            return out;
        }
        out.messages.push_back(command_to_vault(msg.correlation_id, pending.mode, pending.serial,
                                                pending.receiver, receiver_msb));
        return out;
    }
    case MessageKind::MintGrant: {
        book_[msg.payload.at("serial").get<std::string>()] = msg.payload.at("value").get<int64_t>();
        pending_.erase(msg.correlation_id);
        return out;
    }
    case MessageKind::ValidationResult: {
        const std::string direction = msg.payload.value("direction", "");
        const std::string serial = msg.payload.value("serial", "");
        if (direction == "credit" && msg.payload.at("valid").get<bool>())
            book_[serial] = msg.payload.at("value").get<int64_t>();
        else if (direction == "debit")
            book_.erase(serial); // gone whether the transfer landed or the note was lost
        pending_.erase(msg.correlation_id);
        return out;
    }
    case MessageKind::Error: {
        pending_.erase(msg.correlation_id);
        return out;
    }
    default:
        return out;
    }
}

Json WalletEntity::ledger_snapshot() const
{
    Json book = Json::object();
    for (const auto& [serial, value] : book_)
        book[serial] = value;
    Json j;
    j["balance"] = balance();
    j["book"] = std::move(book);
    return j;
}

} // namespace qvault::vault
