// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qvault/money/scheme.hpp"

namespace qvault::vault {

using Json = nlohmann::ordered_json;

// One kind per labeled protocol step. Wallet commands reuse the kind of the
// step they initiate (a transfer request travels as QNoteTransfer, an online
// payment request as DestroyCert); the payload distinguishes the phase.
enum class MessageKind {
    MintRequest,
    ClassicalNote,
    AckCipher,
    FinalPk,
    PayAgree,
    QNoteTransfer,
    ValidationResult,
    DestroyCert,
    DestroyConfirmRequest,
    MintGrant,
    Error,
};

std::string to_string(MessageKind kind);
MessageKind kind_from_string(const std::string& text);

// quantum payload: the banknote itself plus its public key, moved as a unit
struct QuantumPayload {
    money::QuantumBanknote note;
    money::BanknotePublicKey pk;
    std::string receiver_account;
};

// A message between entities. Move-only: a quantum payload (and a sealed mint
// instruction) cannot be duplicated by construction; the adversary duplicate
// hook has to go through clone_classical, which refuses quantum cargo.
struct ProtocolMessage {
    MessageKind kind = MessageKind::Error;
    std::string from;
    std::string to;
    std::string correlation_id;
    Json payload; // transcript-visible classical content

    // sealed classical secret accompanying ClassicalNote; consumed by rec_mint
    std::optional<money::MintInstruction> instruction;

    std::optional<QuantumPayload> quantum;

    ProtocolMessage() = default;
    ProtocolMessage(ProtocolMessage&&) = default;
    ProtocolMessage& operator=(ProtocolMessage&&) = default;
    ProtocolMessage(const ProtocolMessage&) = delete;
    ProtocolMessage& operator=(const ProtocolMessage&) = delete;

    bool is_quantum() const { return quantum.has_value(); }

    // copy for the adversary duplicate rule; throws on quantum cargo
    ProtocolMessage clone_classical() const;

    // what transcripts show: payload plus quantum markers, never amplitudes
    Json transcript_view() const;
};

ProtocolMessage make_message(MessageKind kind, std::string from, std::string to,
                             std::string correlation_id, Json payload);

enum class ReceiptOutcome {
    Completed,
    RejectedInvalidNote,
    RejectedCert,
    Timeout,
    Error,
};

std::string to_string(ReceiptOutcome outcome);
ReceiptOutcome outcome_from_string(const std::string& text);

// Terminal summary of one process instance.
struct Receipt {
    std::string correlation_id;
    ReceiptOutcome outcome = ReceiptOutcome::Error;
    std::vector<std::string> serials;
    std::vector<int64_t> amounts;
    std::string reason;
};

Json to_json(const Receipt& receipt);
Receipt receipt_from_json(const Json& j);

} // namespace qvault::vault
