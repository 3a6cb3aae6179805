// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <type_traits>

#include "qvault/common/errors.hpp"
#include "qvault/netsim/checks.hpp"
#include "qvault/netsim/demo.hpp"
#include "qvault/netsim/simulation.hpp"
#include "qvault/vault/processes.hpp"

using namespace qvault;
using namespace qvault::netsim;
using vault::MessageKind;
using vault::ProtocolMessage;
using vault::ReceiptOutcome;

static_assert(!std::is_copy_constructible_v<ProtocolMessage>, "messages must not be copyable");
static_assert(std::is_move_constructible_v<ProtocolMessage>, "messages move");

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("topology validation")
{
    auto ok = demo::network(1);
    CHECK_NOTHROW(ok.validate());

    auto two_ia = ok;
    two_ia.nodes.push_back({"ia2", NodeRole::Ia, ""});
    CHECK_THROWS_AS(two_ia.validate(), ConfigError);

    auto no_ia = ok;
    no_ia.nodes.erase(no_ia.nodes.begin());
    CHECK_THROWS_AS(no_ia.validate(), ConfigError);

    auto bad_home = ok;
    bad_home.nodes.push_back({"eve", NodeRole::Wallet, "nowhere"});
    CHECK_THROWS_AS(bad_home.validate(), ConfigError);

    auto wallet_quantum = ok;
    wallet_quantum.quantum_links.push_back({"alice", "msb-east", 1});
    CHECK_THROWS_AS(wallet_quantum.validate(), ConfigError);

    auto odd_qubits = ok;
    odd_qubits.qubits = 7;
    CHECK_THROWS_AS(odd_qubits.validate(), ConfigError);

    auto quantum_wallet_without_flag = ok;
    quantum_wallet_without_flag.nodes.push_back({"qw", NodeRole::QuantumWallet, ""});
    CHECK_THROWS_AS(quantum_wallet_without_flag.validate(), ConfigError);

    auto dup = ok;
    dup.nodes.push_back({"alice", NodeRole::Wallet, "msb-east"});
    CHECK_THROWS_AS(dup.validate(), ConfigError);
}

TEST_CASE("config json round trip")
{
    auto cfg = demo::network(9);
    auto parsed = NetworkConfig::from_json(cfg.to_json());
    CHECK(parsed.to_json() == cfg.to_json());
    CHECK(parsed.digest() == cfg.digest());
}

TEST_CASE("shipped demo files match the built-in demos")
{
    const std::string root = QVAULT_SOURCE_DIR;
    CHECK(Json::parse(read_file(root + "/configs/demo_network.json")) ==
          demo::network(42).to_json());
    CHECK(Json::parse(read_file(root + "/configs/demo_mint.json")) == demo::mint_script().to_json());
    CHECK(Json::parse(read_file(root + "/configs/demo_transfer.json")) ==
          demo::transfer_script().to_json());
    CHECK(Json::parse(read_file(root + "/configs/demo_online_payment.json")) ==
          demo::online_payment_script().to_json());
}

TEST_CASE("scenario scripts parse and reject malformed actions")
{
    auto script = ScenarioScript::from_json(demo::transfer_script().to_json());
    CHECK(script.actions.size() == demo::transfer_script().actions.size());

    CHECK_THROWS_AS(ScenarioScript::from_json(Json::parse(R"({"actions":[{"at":-1,
        "type":"mint","wallet":"alice","value":5}]})")),
                    Error);
    CHECK_THROWS_AS(ScenarioScript::from_json(Json::parse(R"({"actions":[{"at":0,
        "type":"steal","wallet":"alice","value":5}]})")),
                    Error);

    auto sim = build_simulation(demo::network(3));
    ScenarioAction unknown;
    unknown.type = ScenarioAction::Type::Mint;
    unknown.wallet = "mallory";
    unknown.value = 5;
    CHECK_THROWS_AS(sim.inject_action(unknown), Error);
}

TEST_CASE("identical configuration, seed and script give byte-identical transcripts")
{
    std::string reference;
    for (int run = 0; run < 3; ++run)
    {
        auto sim = build_simulation(demo::network(42));
        auto t = sim.run_scenario(demo::transfer_script());
        const std::string bytes = t.to_jsonl();
        if (run == 0)
            reference = bytes;
        else
            CHECK(bytes == reference);
    }

    auto other = build_simulation(demo::network(43));
    CHECK(other.run_scenario(demo::transfer_script()).to_jsonl() != reference);
}

TEST_CASE("empty scenario is quiescent at tick zero")
{
    auto sim = build_simulation(demo::network(4));
    auto t = sim.run_until_quiescent();
    CHECK(t.quiescent);
    CHECK(t.final_tick == 0);
    CHECK(t.records.empty());
    CHECK(t.receipts.empty());
}

TEST_CASE("a tiny tick budget flags the transcript as non-quiescent")
{
    auto sim = build_simulation(demo::network(5));
    ScenarioAction mint;
    mint.type = ScenarioAction::Type::Mint;
    mint.at = 10;
    mint.wallet = "alice";
    mint.value = 5;
    sim.inject_action(mint);
    auto t = sim.run_until_quiescent(3);
    CHECK(!t.quiescent);
    CHECK_THROWS_AS(sim.run_until_quiescent(0), Error);
}

TEST_CASE("duplicated requests are absorbed by receiver-side deduplication")
{
    auto cfg = demo::network(6);
    AdversaryRule duplicate;
    duplicate.match_kind = MessageKind::MintRequest;
    duplicate.match_from = "alice";
    duplicate.action = AdversaryRule::Action::Duplicate;
    cfg.adversary.push_back(duplicate);

    auto sim = build_simulation(cfg);
    auto receipt = vault::process_on_demand_mint(sim, "alice", 100);
    CHECK(receipt.outcome == ReceiptOutcome::Completed);
    CHECK(vault::ia_total_active_value(sim) == 100);
    CHECK(vault::msb_total_custody_value(sim, "msb-east") == 100);

    auto t = sim.run_until_quiescent();
    int mint_request_deliveries = 0;
    for (const auto& record : t.records)
        if (record.at("type").get<std::string>() == "deliver" &&
            record.value("kind", "") == "MintRequest" && record.value("to", "") == "msb-east")
            ++mint_request_deliveries;
    CHECK(mint_request_deliveries == 2);
    for (const auto& check : run_invariant_checks(t))
    {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}

TEST_CASE("delayed messages still settle, just later")
{
    auto plain = build_simulation(demo::network(7));
    auto baseline = vault::process_on_demand_mint(plain, "alice", 10);
    const int64_t plain_tick = plain.now();
    REQUIRE(baseline.outcome == ReceiptOutcome::Completed);

    auto cfg = demo::network(7);
    AdversaryRule delay;
    delay.match_kind = MessageKind::AckCipher;
    delay.action = AdversaryRule::Action::Delay;
    delay.delay_ticks = 9;
    cfg.adversary.push_back(delay);
    auto sim = build_simulation(cfg);
    auto receipt = vault::process_on_demand_mint(sim, "alice", 10);
    CHECK(receipt.outcome == ReceiptOutcome::Completed);
    CHECK(sim.now() >= plain_tick + 9);
}

TEST_CASE("dropped quantum payloads are destroyed, logged and accounted")
{
    auto cfg = demo::network(8);
    AdversaryRule drop;
    drop.quantum = true;
    drop.action = AdversaryRule::Action::Drop;
    cfg.adversary.push_back(drop);

    auto sim = build_simulation(cfg);
    auto mint = vault::process_on_demand_mint(sim, "alice", 100);
    auto transfer = vault::process_transfer_inter_msb(sim, "alice", "carol", mint.serials[0]);
    CHECK(transfer.outcome == ReceiptOutcome::Timeout);

    auto t = sim.run_until_quiescent();
    bool loss_logged = false;
    for (const auto& record : t.records)
        if (record.at("type").get<std::string>() == "loss" &&
            record.at("cause").get<std::string>() == "dropped")
            loss_logged = true;
    CHECK(loss_logged);

    auto fold = fold_ledgers(t);
    CHECK(fold.ia_active == 100);
    CHECK(fold.custody == 0);
    CHECK(fold.explained_losses == 100);
    for (const auto& check : run_invariant_checks(t))
    {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}

TEST_CASE("quantum messages cannot be duplicated")
{
    auto cfg = demo::network(9);
    AdversaryRule bad;
    bad.quantum = true;
    bad.action = AdversaryRule::Action::Duplicate;
    cfg.adversary.push_back(bad);
    CHECK_THROWS_AS(build_simulation(cfg), ConfigError);

    // and the message type itself refuses to clone quantum cargo
    auto sim = build_simulation(demo::network(9));
    auto mint = vault::process_on_demand_mint(sim, "alice", 10);
    ProtocolMessage msg = vault::make_message(MessageKind::QNoteTransfer, "msb-east", "msb-west",
                                              "x-1", Json{{"serial", mint.serials[0]}});
    auto pk = sim.msb("msb-east").public_key(mint.serials[0]);
    msg.quantum = vault::QuantumPayload{
        money::QuantumBanknote{mint.serials[0], 10, sim.engine().prepare_basis_state(8, 0)}, *pk,
        "carol"};
    CHECK_THROWS_AS(msg.clone_classical(), Error);
}

TEST_CASE("send primitives validate links and payload shape")
{
    auto sim = build_simulation(demo::network(10));
    // alice and ia share no classical link
    CHECK_THROWS_AS(sim.send_classical(vault::make_message(MessageKind::Error, "alice", "ia", "c-1",
                                                           Json{{"reason", "x"}})),
                    ConfigError);
    CHECK_THROWS_AS(sim.send_quantum(vault::make_message(MessageKind::QNoteTransfer, "msb-east",
                                                         "msb-west", "c-2", Json::object())),
                    Error);
}

TEST_CASE("transcripts round-trip through the jsonl encoding")
{
    auto sim = build_simulation(demo::network(11));
    auto t = sim.run_scenario(demo::online_payment_script());

    const std::string bytes = t.to_jsonl();
    auto parsed = Transcript::from_jsonl(bytes);
    CHECK(parsed.to_jsonl() == bytes);
    CHECK(parsed.records.size() == t.records.size());
    CHECK(parsed.receipts.size() == t.receipts.size());
    CHECK(parsed.ledgers == t.ledgers);

    // the fold over the parsed stream reproduces the live ledger totals
    auto fold = fold_ledgers(parsed);
    CHECK(fold.ia_active == sim.ia_total_active_value());
    CHECK(fold.custody == sim.msb_total_custody_value("msb-east") +
                              sim.msb_total_custody_value("msb-west"));

    CHECK_THROWS_AS(Transcript::from_jsonl("{\"type\":\"x\"}\n"), Error);
}

TEST_CASE("quantum wallets run the same processes through personal vaults")
{
    NetworkConfig cfg;
    cfg.seed = 21;
    cfg.qubits = 8;
    cfg.allow_quantum_wallets = true;
    cfg.nodes.push_back({"ia", NodeRole::Ia, ""});
    cfg.nodes.push_back({"peggy", NodeRole::QuantumWallet, ""});
    cfg.nodes.push_back({"victor", NodeRole::QuantumWallet, ""});
    cfg.classical_links.push_back({"ia", "peggy", 1});
    cfg.classical_links.push_back({"ia", "victor", 1});
    cfg.classical_links.push_back({"peggy", "victor", 1});
    cfg.quantum_links.push_back({"peggy", "victor", 1});

    auto expanded = cfg.expanded();
    bool has_vault = false;
    for (const auto& node : expanded.nodes)
        if (node.id == "peggy#vault" && node.role == NodeRole::Msb)
            has_vault = true;
    CHECK(has_vault);

    auto sim = build_simulation(cfg);
    auto mint = vault::process_on_demand_mint(sim, "peggy", 100);
    REQUIRE(mint.outcome == ReceiptOutcome::Completed);
    CHECK(sim.msb_total_custody_value("peggy#vault") == 100);

    auto transfer = vault::process_transfer_inter_msb(sim, "peggy", "victor", mint.serials[0]);
    CHECK(transfer.outcome == ReceiptOutcome::Completed);
    CHECK(sim.msb_total_custody_value("peggy#vault") == 0);
    CHECK(sim.msb_total_custody_value("victor#vault") == 100);
    CHECK(vault::wallet_balance(sim, "victor") == 100);

    auto t = sim.run_until_quiescent();
    for (const auto& check : run_invariant_checks(t))
    {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}

TEST_CASE("scripted scenario with a double spend detects it and conserves value")
{
    auto sim = build_simulation(demo::network(12));
    ScenarioScript script = demo::mint_script();

    ScenarioAction pay;
    pay.type = ScenarioAction::Type::Pay;
    pay.at = 20;
    pay.wallet = "alice";
    pay.receiver = "carol";
    pay.mint_index = 0;
    script.actions.push_back(pay);

    ScenarioAction replayed = pay;
    replayed.at = 40;
    script.actions.push_back(replayed);

    auto t = sim.run_scenario(script);
    int completed = 0, failed = 0;
    for (const auto& receipt : t.receipts)
    {
        if (receipt.outcome == ReceiptOutcome::Completed)
            ++completed;
        if (receipt.outcome == ReceiptOutcome::Error && receipt.reason == "not-in-custody")
            ++failed;
    }
    CHECK(completed == 5); // four mints and the first transfer
    CHECK(failed == 1);
    for (const auto& check : run_invariant_checks(t))
    {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
}
