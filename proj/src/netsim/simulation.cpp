// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/netsim/simulation.hpp"

#include "qvault/common/errors.hpp"

namespace qvault::netsim {

using vault::EntityContext;
using vault::EntityOutput;
using vault::MessageKind;
using vault::ProtocolMessage;
using vault::Receipt;
using vault::ReceiptOutcome;

Simulation::Simulation(const NetworkConfig& config)
    : cfg_(config.expanded()),
      engine_(qsim::QuantumEngine::Mode::Protocol),
      rng_(cfg_.seed)
{
    std::string ia_id;
    for (const NodeSpec& node : cfg_.nodes)
    {
        roles_[node.id] = node.role;
        if (node.role == NodeRole::Ia)
            ia_id = node.id;
    }

    nodes_json_ = Json::object();
    for (const NodeSpec& node : cfg_.nodes)
        nodes_json_[node.id] = to_string(node.role);

    ia_ = std::make_unique<vault::IaEntity>(ia_id, money::SchemeParams{cfg_.qubits}, rng_);

    for (const NodeSpec& node : cfg_.nodes)
        if (node.role == NodeRole::Msb)
        {
            vault::MsbEntity msb(node.id);
            msb.set_ia(ia_id);
            msbs_.emplace(node.id, std::move(msb));
        }

    for (const NodeSpec& node : cfg_.nodes)
        if (node.role == NodeRole::Wallet)
        {
            const std::string credential = "tok-" + hex_u64(rng_.next_u64());
            wallets_.emplace(node.id, vault::WalletEntity(node.id, node.home_msb, credential));
            msbs_.at(node.home_msb).register_wallet(node.id, credential);
        }

    for (const LinkSpec& link : cfg_.classical_links)
    {
        classical_links_[{link.a, link.b}] = link.latency;
        classical_links_[{link.b, link.a}] = link.latency;
    }
    for (const LinkSpec& link : cfg_.quantum_links)
    {
        quantum_links_[{link.a, link.b}] = link.latency;
        quantum_links_[{link.b, link.a}] = link.latency;
    }
}

Simulation build_simulation(const NetworkConfig& config)
{
    return Simulation(config);
}

vault::MsbEntity& Simulation::msb(const std::string& id)
{
    auto it = msbs_.find(id);
    if (it == msbs_.end())
        throw Error("unknown msb: " + id);
    return it->second;
}

vault::WalletEntity& Simulation::wallet(const std::string& id)
{
    auto it = wallets_.find(id);
    if (it == wallets_.end())
        throw Error("unknown wallet: " + id);
    return it->second;
}

int64_t Simulation::msb_total_custody_value(const std::string& id) const
{
    return msbs_.at(id).total_custody_value();
}

int64_t Simulation::wallet_balance(const std::string& id) const
{
    return wallets_.at(id).balance();
}

std::optional<Receipt> Simulation::receipt_for(const std::string& correlation) const
{
    auto it = receipt_index_.find(correlation);
    if (it == receipt_index_.end())
        return std::nullopt;
    return it->second;
}

EntityContext Simulation::context()
{
    return EntityContext{engine_, rng_, oracles_, now_};
}

Json& Simulation::append_record(const char* type)
{
    Json record;
    record["rec"] = next_record_++;
    record["time"] = now_;
    record["type"] = type;
    records_.push_back(std::move(record));
    return records_.back();
}

void Simulation::schedule(int64_t time, SimEvent event)
{
    queue_.emplace(QueueKey{time, next_event_seq_++}, std::move(event));
}

int Simulation::link_latency(const std::string& a, const std::string& b, bool quantum) const
{
    const auto& table = quantum ? quantum_links_ : classical_links_;
    auto it = table.find({a, b});
    if (it == table.end())
        throw ConfigError(std::string(quantum ? "quantum" : "classical") + " link missing: " + a +
                          " <-> " + b);
    return it->second;
}

const AdversaryRule* Simulation::match_rule(const ProtocolMessage& msg, bool quantum) const
{
    for (const AdversaryRule& rule : cfg_.adversary)
    {
        if (rule.quantum != quantum)
            continue;
        if (rule.match_kind && *rule.match_kind != msg.kind)
            continue;
        if (rule.match_from && *rule.match_from != msg.from)
            continue;
        if (rule.match_to && *rule.match_to != msg.to)
            continue;
        return &rule;
    }
    return nullptr;
}

void Simulation::send_classical(ProtocolMessage msg)
{
    if (msg.is_quantum())
        throw Error("send_classical: message carries a quantum payload");
    route(std::move(msg));
}

void Simulation::send_quantum(ProtocolMessage msg)
{
    if (!msg.is_quantum())
        throw Error("send_quantum: message has no quantum payload");
    route(std::move(msg));
}

void Simulation::route(ProtocolMessage msg)
{
    const bool quantum = msg.is_quantum();
    const int latency = link_latency(msg.from, msg.to, quantum);
    const AdversaryRule* rule = match_rule(msg, quantum);

    Json view = msg.transcript_view();
    std::vector<uint64_t> deliveries;

    if (rule == nullptr)
    {
        const uint64_t id = next_delivery_id_++;
        deliveries.push_back(id);
        SimEvent event;
        event.kind = SimEvent::Kind::Deliver;
        event.channel = quantum ? "quantum" : "classical";
        event.delivery_id = id;
        event.message = std::move(msg);
        Json& send = append_record("send");
        send["channel"] = event.channel;
        send["from"] = event.message->from;
        send["to"] = event.message->to;
        send["kind"] = vault::to_string(event.message->kind);
        send["corr"] = event.message->correlation_id;
        send["msg"] = std::move(view);
        send["deliveries"] = deliveries;
        schedule(now_ + latency, std::move(event));
        return;
    }

    // an adversary intervention is an event of its own in the log
    auto log_adversary = [&](const char* action) -> Json& {
        Json& rec = append_record("adversary");
        rec["action"] = action;
        rec["channel"] = quantum ? "quantum" : "classical";
        rec["kind"] = vault::to_string(msg.kind);
        rec["from"] = msg.from;
        rec["to"] = msg.to;
        rec["corr"] = msg.correlation_id;
        if (msg.payload.contains("serial"))
            rec["serial"] = msg.payload.at("serial");
        if (msg.payload.contains("value"))
            rec["value"] = msg.payload.at("value");
        return rec;
    };

    switch (rule->action)
    {
    case AdversaryRule::Action::Drop: {
        log_adversary("drop");
        if (quantum)
        {
            const auto& note = msg.quantum->note;
            Json& loss = append_record("loss");
            loss["serial"] = note.serial;
            loss["value"] = note.value;
            loss["cause"] = "dropped";
        }
        Json& send = append_record("send");
        send["channel"] = quantum ? "quantum" : "classical";
        send["from"] = msg.from;
        send["to"] = msg.to;
        send["kind"] = vault::to_string(msg.kind);
        send["corr"] = msg.correlation_id;
        send["msg"] = std::move(view);
        send["deliveries"] = deliveries; // empty: the message never arrives
        return;
    }
    case AdversaryRule::Action::Delay: {
        Json& rec = log_adversary("delay");
        rec["ticks"] = rule->delay_ticks;
        const uint64_t id = next_delivery_id_++;
        deliveries.push_back(id);
        SimEvent event;
        event.kind = SimEvent::Kind::Deliver;
        event.channel = quantum ? "quantum" : "classical";
        event.delivery_id = id;
        event.message = std::move(msg);
        Json& send = append_record("send");
        send["channel"] = event.channel;
        send["from"] = event.message->from;
        send["to"] = event.message->to;
        send["kind"] = vault::to_string(event.message->kind);
        send["corr"] = event.message->correlation_id;
        send["msg"] = std::move(view);
        send["deliveries"] = deliveries;
        schedule(now_ + latency + rule->delay_ticks, std::move(event));
        return;
    }
    case AdversaryRule::Action::Duplicate: {
        log_adversary("duplicate");
        const std::string from = msg.from;
        const std::string to = msg.to;
        const std::string kind = vault::to_string(msg.kind);
        const std::string corr = msg.correlation_id;
        ProtocolMessage copy = msg.clone_classical();
        for (ProtocolMessage* m : {&msg, &copy})
        {
            const uint64_t id = next_delivery_id_++;
            deliveries.push_back(id);
            SimEvent event;
            event.kind = SimEvent::Kind::Deliver;
            event.channel = "classical";
            event.delivery_id = id;
            event.message = std::move(*m);
            schedule(now_ + latency, std::move(event));
        }
        Json& send = append_record("send");
        send["channel"] = "classical";
        send["from"] = from;
        send["to"] = to;
        send["kind"] = kind;
        send["corr"] = corr;
        send["msg"] = std::move(view);
        send["deliveries"] = deliveries;
        return;
    }
    }
}

void Simulation::process_deliver(SimEvent event)
{
    ProtocolMessage msg = std::move(*event.message);
    Json& rec = append_record("deliver");
    rec["channel"] = event.channel;
    rec["delivery"] = event.delivery_id;
    rec["from"] = msg.from;
    rec["to"] = msg.to;
    rec["kind"] = vault::to_string(msg.kind);
    rec["corr"] = msg.correlation_id;
    rec["msg"] = msg.transcript_view();

    const std::string to = msg.to;
    auto role = roles_.find(to);
    if (role == roles_.end())
        throw Error("delivery to unknown node: " + to);

    EntityContext ctx = context();
    EntityOutput output;
    switch (role->second)
    {
    case NodeRole::Ia:
        output = ia_->handle(std::move(msg), ctx);
        break;
    case NodeRole::Msb:
        output = msbs_.at(to).handle(std::move(msg), ctx);
        break;
    default:
        output = wallets_.at(to).handle(std::move(msg), ctx);
        break;
    }
    dispatch_output(std::move(output));
}

void Simulation::process_action(const SimEvent& event)
{
    const ScenarioAction& action = *event.action;
    Json& rec = append_record("action");
    rec["corr"] = event.correlation;
    rec["action"] = to_json(action);

    vault::WalletCommand command;
    command.correlation_id = event.correlation;
    switch (action.type)
    {
    case ScenarioAction::Type::Mint:
        command.mode = vault::WalletCommand::Mode::Mint;
        command.value = action.value;
        break;
    case ScenarioAction::Type::Pay:
        command.mode = vault::WalletCommand::Mode::Pay;
        break;
    case ScenarioAction::Type::IntraPay:
        command.mode = vault::WalletCommand::Mode::IntraPay;
        break;
    default:
        command.mode = vault::WalletCommand::Mode::OnlinePay;
        break;
    }

    if (action.type != ScenarioAction::Type::Mint)
    {
        command.receiver = action.receiver;
        command.serial = action.serial;
        if (action.mint_index)
        {
            // the serial minted by the k-th mint action of this script
            const std::string mint_corr = "act-" + std::to_string(*action.mint_index);
            auto receipt = receipt_for(mint_corr);
            if (!receipt || receipt->outcome != ReceiptOutcome::Completed || receipt->serials.empty())
            {
                record_receipt(Receipt{event.correlation, ReceiptOutcome::Error, {}, {},
                                       "unresolved-serial"});
                return;
            }
            command.serial = receipt->serials.front();
        }
    }

    EntityContext ctx = context();
    dispatch_output(wallets_.at(action.wallet).on_command(command, ctx));
}

void Simulation::process_timeout(const SimEvent& event)
{
    timeout_keys_.erase(event.correlation);
    if (receipt_index_.count(event.correlation) != 0)
        return; // already terminal; nothing to report
    Json& rec = append_record("timeout");
    rec["corr"] = event.correlation;
    record_receipt(Receipt{event.correlation, ReceiptOutcome::Timeout, {}, {}, "deadline-expired"});
}

void Simulation::record_receipt(const Receipt& receipt)
{
    if (!receipt_index_.emplace(receipt.correlation_id, receipt).second)
        return; // one terminal receipt per process instance; first wins
    receipts_.push_back(receipt);

    Json& rec = append_record("receipt");
    rec["corr"] = receipt.correlation_id;
    rec["outcome"] = vault::to_string(receipt.outcome);
    rec["serials"] = receipt.serials;
    rec["amounts"] = receipt.amounts;
    rec["reason"] = receipt.reason;

    auto pending_timeout = timeout_keys_.find(receipt.correlation_id);
    if (pending_timeout != timeout_keys_.end())
    {
        queue_.erase(pending_timeout->second);
        timeout_keys_.erase(pending_timeout);
    }
}

void Simulation::dispatch_output(EntityOutput output)
{
    for (const vault::RegistryEvent& event : output.registry_events)
    {
        Json& rec = append_record("registry");
        rec["serial"] = event.serial;
        rec["value"] = event.value;
        rec["status"] = money::to_string(event.status);
    }
    for (const vault::CustodyEvent& event : output.custody_events)
    {
        Json& rec = append_record("custody");
        rec["msb"] = event.msb;
        rec["account"] = event.account;
        rec["serial"] = event.serial;
        rec["value"] = event.value;
        rec["op"] = event.credit ? "credit" : "debit";
    }
    for (const vault::LossRecord& loss : output.losses)
    {
        Json& rec = append_record("loss");
        rec["serial"] = loss.serial;
        rec["value"] = loss.value;
        rec["cause"] = loss.cause;
    }
    for (const Receipt& receipt : output.receipts)
        record_receipt(receipt);
    for (ProtocolMessage& msg : output.messages)
        route(std::move(msg));
}

std::string Simulation::inject_action(const ScenarioAction& action)
{
    auto node = roles_.find(action.wallet);
    if (node == roles_.end() || node->second != NodeRole::Wallet)
        throw Error("action references unknown wallet: " + action.wallet);
    if (action.type != ScenarioAction::Type::Mint)
    {
        auto receiver = roles_.find(action.receiver);
        if (receiver == roles_.end() || receiver->second != NodeRole::Wallet)
            throw Error("action references unknown receiver: " + action.receiver);
    }

    const std::string correlation = "act-" + std::to_string(action_count_++);
    SimEvent event;
    event.kind = SimEvent::Kind::Action;
    event.action = action;
    event.correlation = correlation;
    schedule(action.at, std::move(event));

    SimEvent timeout;
    timeout.kind = SimEvent::Kind::Timeout;
    timeout.correlation = correlation;
    const QueueKey key{action.at + cfg_.timeout_ticks, next_event_seq_};
    schedule(action.at + cfg_.timeout_ticks, std::move(timeout));
    timeout_keys_[correlation] = key;
    return correlation;
}

void Simulation::process(QueueKey key, SimEvent event)
{
    now_ = key.first;
    switch (event.kind)
    {
    case SimEvent::Kind::Deliver:
        process_deliver(std::move(event));
        break;
    case SimEvent::Kind::Action:
        process_action(event);
        break;
    default:
        process_timeout(event);
        break;
    }
}

Transcript Simulation::run_until_quiescent(int64_t max_ticks)
{
    if (max_ticks < 1)
        throw Error("run_until_quiescent: max_ticks must be positive");
    while (!queue_.empty())
    {
        auto it = queue_.begin();
        if (it->first.first > max_ticks)
            return finalize(false);
        QueueKey key = it->first;
        SimEvent event = std::move(it->second);
        queue_.erase(it);
        process(key, std::move(event));
    }
    return finalize(true);
}

Transcript Simulation::run_scenario(const ScenarioScript& script, int64_t max_ticks)
{
    for (const ScenarioAction& action : script.actions)
        inject_action(action);
    return run_until_quiescent(max_ticks);
}

Transcript Simulation::finalize(bool quiescent)
{
    Json ia_snapshot = ia_->ledger_snapshot();
    Json msbs = Json::object();
    for (const auto& [id, entity] : msbs_)
        msbs[id] = entity.ledger_snapshot();
    Json wallets = Json::object();
    for (const auto& [id, entity] : wallets_)
        wallets[id] = entity.ledger_snapshot();

    Json ledgers;
    ledgers["ia"] = std::move(ia_snapshot);
    ledgers["msbs"] = std::move(msbs);
    ledgers["wallets"] = std::move(wallets);

    Transcript t;
    t.config_digest = cfg_.digest();
    t.seed = cfg_.seed;
    t.nodes = nodes_json_;
    t.records = records_;
    t.receipts = receipts_;
    t.ledgers = std::move(ledgers);
    t.quiescent = quiescent;
    t.final_tick = now_;
    return t;
}

} // namespace qvault::netsim
