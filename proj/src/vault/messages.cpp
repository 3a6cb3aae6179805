// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/vault/messages.hpp"

#include "qvault/common/errors.hpp"

namespace qvault::vault {

std::string to_string(MessageKind kind)
{
    switch (kind)
    {
    case MessageKind::MintRequest:
        return "MintRequest";
    case MessageKind::ClassicalNote:
        return "ClassicalNote";
    case MessageKind::AckCipher:
        return "AckCipher";
    case MessageKind::FinalPk:
        return "FinalPk";
    case MessageKind::PayAgree:
        return "PayAgree";
    case MessageKind::QNoteTransfer:
        return "QNoteTransfer";
    case MessageKind::ValidationResult:
        return "ValidationResult";
    case MessageKind::DestroyCert:
        return "DestroyCert";
    case MessageKind::DestroyConfirmRequest:
        return "DestroyConfirmRequest";
    case MessageKind::MintGrant:
        return "MintGrant";
    default:
        return "Error";
    }
}

MessageKind kind_from_string(const std::string& text)
{
    for (int k = 0; k <= static_cast<int>(MessageKind::Error); ++k)
        if (to_string(static_cast<MessageKind>(k)) == text)
            return static_cast<MessageKind>(k);
    throw Error("unknown message kind: " + text);
}

ProtocolMessage make_message(MessageKind kind, std::string from, std::string to,
                             std::string correlation_id, Json payload)
{
    ProtocolMessage msg;
    msg.kind = kind;
    msg.from = std::move(from);
    msg.to = std::move(to);
    msg.correlation_id = std::move(correlation_id);
    msg.payload = std::move(payload);
    return msg;
}

ProtocolMessage ProtocolMessage::clone_classical() const
{
    if (quantum.has_value())
        throw Error("quantum payloads cannot be duplicated");
    ProtocolMessage copy;
    copy.kind = kind;
    copy.from = from;
    copy.to = to;
    copy.correlation_id = correlation_id;
    copy.payload = payload;
    copy.instruction = instruction;
    return copy;
}

Json ProtocolMessage::transcript_view() const
{
    Json view;
    view["kind"] = to_string(kind);
    view["payload"] = payload;
    if (quantum.has_value())
    {
        view["quantum"] = true;
        view["serial"] = quantum->note.serial;
        view["handle"] = quantum->note.state.id();
    }
    return view;
}

std::string to_string(ReceiptOutcome outcome)
{
    switch (outcome)
    {
    case ReceiptOutcome::Completed:
        return "Completed";
    case ReceiptOutcome::RejectedInvalidNote:
        return "RejectedInvalidNote";
    case ReceiptOutcome::RejectedCert:
        return "RejectedCert";
    case ReceiptOutcome::Timeout:
        return "Timeout";
    default:
        return "Error";
    }
}

ReceiptOutcome outcome_from_string(const std::string& text)
{
    for (int k = 0; k <= static_cast<int>(ReceiptOutcome::Error); ++k)
        if (to_string(static_cast<ReceiptOutcome>(k)) == text)
            return static_cast<ReceiptOutcome>(k);
    throw Error("unknown receipt outcome: " + text);
}

Json to_json(const Receipt& receipt)
{
    Json j;
    j["correlation"] = receipt.correlation_id;
    j["outcome"] = to_string(receipt.outcome);
    j["serials"] = receipt.serials;
    j["amounts"] = receipt.amounts;
    j["reason"] = receipt.reason;
    return j;
}

Receipt receipt_from_json(const Json& j)
{
    Receipt r;
    r.correlation_id = j.at("correlation").get<std::string>();
    r.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    r.serials = j.at("serials").get<std::vector<std::string>>();
    r.amounts = j.at("amounts").get<std::vector<int64_t>>();
    r.reason = j.at("reason").get<std::string>();
    return r;
}

} // namespace qvault::vault
