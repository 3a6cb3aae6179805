// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "qvault/attacks/experiment.hpp"
#include "qvault/attacks/optimizer.hpp"
#include "qvault/common/errors.hpp"
#include "qvault/money/wiesner.hpp"
#include "qvault/netsim/checks.hpp"
#include "qvault/netsim/demo.hpp"
#include "qvault/netsim/simulation.hpp"

namespace qvault::acceptance {

using attacks::attack_keep_and_fabricate;
using attacks::attack_measure_random_basis;
using money::QuantumBanknote;
using netsim::ScenarioAction;
using netsim::ScenarioScript;
using qsim::Basis;
using qsim::QuantumEngine;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int digits = 4)
{
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << v;
    return out.str();
}

// gen -> bank_mint -> rec_mint -> finalize_mint, as one honest pipeline
struct Pipeline {
    money::SchemeSecretKey sk;
    money::OracleRegistry oracles;
    money::BanknotePublicKey pk;
    money::QuantumBanknote note;
};

Pipeline honest_pipeline(int qubits, int64_t value, QuantumEngine& engine, Rng& rng)
{
    auto [scheme_pk, sk] = money::gen(money::SchemeParams{qubits}, rng);
    (void)scheme_pk;
    auto [record, instruction] = money::bank_mint(sk, value, rng);
    (void)record;
    auto [note, ack] = money::rec_mint(std::move(instruction), engine, "vault-acc");
    money::OracleRegistry oracles;
    auto pk = money::finalize_mint(sk, ack, oracles);
    return Pipeline{std::move(sk), std::move(oracles), std::move(pk), std::move(note)};
}

Outcome criterion_optimal_bound(uint64_t seed)
{
    auto cloner = attacks::optimize_cloner(400, 1e-6);
    const bool in_band = cloner.achieved >= 0.7495 && cloner.achieved <= 0.7510;

    auto report = attacks::run_counterfeit_experiment(cloner.channel, 1, 100000, seed);
    const bool mc_close = std::abs(report.estimated_rate - 0.75) <= 0.005;

    const double exact4 = attacks::exact_success(cloner.channel, 4);
    const bool fourth = std::abs(exact4 - 0.31640625) <= 2e-3;

    return {in_band && mc_close && fourth,
            "achieved=" + fmt(cloner.achieved, 5) + " mc=" + fmt(report.estimated_rate, 5) +
                " exact4=" + fmt(exact4, 5)};
}

Outcome criterion_attack_hierarchy(uint64_t seed)
{
    const auto fab = attack_keep_and_fabricate();
    const auto mrb = attack_measure_random_basis();
    const double p_fab = attacks::per_qubit_success(fab);
    const double p_mrb = attacks::per_qubit_success(mrb);
    bool ok = std::abs(p_fab - 0.5) <= 1e-9 && std::abs(p_mrb - 0.625) <= 1e-9;

    for (const auto* attack : {&fab, &mrb})
    {
        auto report = attacks::run_counterfeit_experiment(*attack, 1, 100000, seed + 1);
        if (std::abs(report.estimated_rate - report.exact_rate) > 5 * report.stderr_rate)
            ok = false;
    }
    return {ok, "fabricate=" + fmt(p_fab, 7) + " random-basis=" + fmt(p_mrb, 7)};
}

Outcome criterion_wiesner(uint64_t seed)
{
    QuantumEngine engine(QuantumEngine::Mode::Protocol);
    Rng rng(seed + 2);
    money::WiesnerBank bank(16);
    int passed = 0;
    const int rounds = 10000;
    for (int i = 0; i < rounds; ++i)
    {
        auto note = bank.mint(engine, rng);
        auto [ok, rest] = bank.verify(note.serial, std::move(note.state), engine, rng);
        (void)rest;
        passed += ok;
    }
    return {passed == rounds, std::to_string(passed) + "/" + std::to_string(rounds) + " at n=16"};
}

Outcome criterion_uncertainty(uint64_t seed)
{
    QuantumEngine engine(QuantumEngine::Mode::Omniscient);
    Rng rng(seed + 3);
    double worst = 10.0;
    for (int i = 0; i < 10000; ++i)
    {
        std::vector<qsim::Amplitude> amps(2);
        double norm = 0;
        for (auto& a : amps)
        {
            a = qsim::Amplitude(rng.gaussian(), rng.gaussian());
            norm += std::norm(a);
        }
        for (auto& a : amps)
            a /= std::sqrt(norm);
        auto h = engine.prepare_amplitudes(amps);
        const double sum =
            shannon_entropy(engine.outcome_distribution(h, {Basis::Computational})) +
            shannon_entropy(engine.outcome_distribution(h, {Basis::Diagonal}));
        worst = std::min(worst, sum);
    }
    bool ok = worst >= 1.0 - 1e-9;

    double worst_equality = 0.0;
    for (int bit = 0; bit < 2; ++bit)
        for (Basis b : {Basis::Computational, Basis::Diagonal})
        {
            auto h = engine.prepare_bb84({bit}, {b});
            const double sum =
                shannon_entropy(engine.outcome_distribution(h, {Basis::Computational})) +
                shannon_entropy(engine.outcome_distribution(h, {Basis::Diagonal}));
            worst_equality = std::max(worst_equality, std::abs(sum - 1.0));
        }
    ok = ok && worst_equality <= 1e-9;
    return {ok, "min=" + fmt(worst, 9) + " basis-gap=" + fmt(worst_equality, 12)};
}

Outcome criterion_public_key(uint64_t seed)
{
    QuantumEngine engine(QuantumEngine::Mode::Protocol);
    Rng rng(seed + 4);
    int passed = 0;
    const int rounds = 1000;
    for (int i = 0; i < rounds; ++i)
    {
        auto pipeline = honest_pipeline(8, 1 + static_cast<int64_t>(rng.below(1000)), engine, rng);
        auto [ok, note] = money::qv(pipeline.pk, std::move(pipeline.note), engine, rng);
        (void)note;
        passed += ok;
    }
    return {passed == rounds, std::to_string(passed) + "/" + std::to_string(rounds) + " at n=8"};
}

Outcome criterion_sabotage(uint64_t seed)
{
    QuantumEngine engine(QuantumEngine::Mode::Protocol);
    Rng rng(seed + 5);
    const int notes = 100;
    const int rounds = 100;
    for (int i = 0; i < notes; ++i)
    {
        auto pipeline = honest_pipeline(8, 10, engine, rng);
        auto [first, note] = money::qv(pipeline.pk, std::move(pipeline.note), engine, rng);
        if (!first)
            return {false, "initial verification failed"};
        for (int round = 0; round < rounds; ++round)
        {
            auto [again, next] = money::qv(pipeline.pk, std::move(note), engine, rng);
            if (!again)
                return {false, "re-verification " + std::to_string(round) + " failed"};
            note = std::move(next);
        }
    }
    return {true, std::to_string(notes) + " notes x " + std::to_string(rounds) + " re-verifications"};
}

Outcome criterion_mutual_exclusivity(uint64_t seed)
{
    QuantumEngine engine(QuantumEngine::Mode::Protocol);
    Rng rng(seed + 6);
    const int rounds = 1000;
    int consumed_errors = 0;
    int replay_rejected = 0;
    for (int i = 0; i < rounds; ++i)
    {
        auto pipeline = honest_pipeline(8, 10, engine, rng);
        auto cert = money::gen_cert(pipeline.pk, std::move(pipeline.note), engine, rng);

        try
        {
            engine.hadamard_all(std::move(pipeline.note.state));
        }
        catch (const ConsumedStateError&)
        {
            ++consumed_errors;
        }

        const auto first = money::cv(pipeline.sk, cert);
        if (first.ok)
            money::settle_destroyed(pipeline.sk, cert.serial);
        const auto replay = money::cv(pipeline.sk, cert);
        if (!first.ok || (!replay.ok && replay.reason == money::CvResult::Reason::Spent))
            ++replay_rejected;
    }
    return {consumed_errors == rounds && replay_rejected == rounds,
            "consumed=" + std::to_string(consumed_errors) + "/1000 replay-rejected=" +
                std::to_string(replay_rejected) + "/1000"};
}

Outcome criterion_forgery(uint64_t seed)
{
    QuantumEngine engine(QuantumEngine::Mode::Protocol);
    Rng rng(seed + 7);
    auto pipeline = honest_pipeline(8, 10, engine, rng);

    const int trials = 10000;
    int accepted = 0;
    for (int i = 0; i < trials; ++i)
    {
        auto uniform = engine.hadamard_all(engine.prepare_basis_state(8, 0));
        QuantumBanknote forged{pipeline.pk.serial, 10, std::move(uniform)};
        auto [ok, rest] = money::qv(pipeline.pk, std::move(forged), engine, rng);
        (void)rest;
        accepted += ok;
    }
    const double rate = static_cast<double>(accepted) / trials;
    const double p = 1.0 / 16.0;
    const double band = 5.0 * std::sqrt(p * (1 - p) / trials);
    bool ok = std::abs(rate - p) <= band;

    // basis states outside the subspace must always be rejected
    int outside_rejected = 0;
    int outside_total = 0;
    for (uint32_t w = 0; outside_total < 100 && w < 256; ++w)
    {
        if (pipeline.pk.oracle_a->contains(w))
            continue;
        ++outside_total;
        QuantumBanknote forged{pipeline.pk.serial, 10, engine.prepare_basis_state(8, w)};
        auto [valid, rest] = money::qv(pipeline.pk, std::move(forged), engine, rng);
        (void)rest;
        outside_rejected += !valid;
    }
    ok = ok && outside_rejected == outside_total;
    return {ok, "uniform-rate=" + fmt(rate, 4) + " (band " + fmt(p - band, 4) + ".." +
                    fmt(p + band, 4) + ") outside-rejected=" + std::to_string(outside_rejected) +
                    "/" + std::to_string(outside_total)};
}

Outcome criterion_conservation(uint64_t seed)
{
    const int scenarios = 100;
    for (int i = 0; i < scenarios; ++i)
    {
        Rng scenario_rng = Rng(seed).fork(9000 + static_cast<uint64_t>(i));
        const bool pure_transfer = i % 4 == 0;
        auto script = random_scenario(scenario_rng, 200, pure_transfer);

        auto cfg = netsim::demo::network(seed * 1000 + static_cast<uint64_t>(i));
        auto sim = netsim::build_simulation(cfg);
        auto transcript = sim.run_scenario(script);

        if (!transcript.quiescent)
            return {false, "scenario " + std::to_string(i) + " did not quiesce"};

        auto checks = netsim::run_invariant_checks(transcript);
        for (const auto& check : checks)
            if (!check.pass)
                return {false, "scenario " + std::to_string(i) + ": " + check.name + " " +
                                   check.detail};

        bool rejected = false;
        for (const auto& receipt : transcript.receipts)
            if (receipt.outcome == vault::ReceiptOutcome::RejectedCert ||
                receipt.outcome == vault::ReceiptOutcome::RejectedInvalidNote)
                rejected = true;
        auto fold = netsim::fold_ledgers(transcript);
        if (!rejected && (fold.explained_losses != 0 || fold.ia_active != fold.custody))
            return {false, "scenario " + std::to_string(i) + ": strict conservation violated"};

        if (pure_transfer)
        {
            for (const auto& record : transcript.records)
            {
                const std::string type = record.at("type").get<std::string>();
                if (type != "send" && type != "deliver")
                    continue;
                if (record.value("to", "") == "ia" && record.at("time").get<int64_t>() >= 500)
                    return {false, "scenario " + std::to_string(i) +
                                       ": issuer contacted during pure transfers"};
            }
        }
    }
    return {true, std::to_string(scenarios) + " fuzz scenarios, conservation and custody held"};
}

Outcome criterion_determinism(uint64_t seed)
{
    const ScenarioScript scripts[] = {netsim::demo::mint_script(), netsim::demo::transfer_script(),
                                      netsim::demo::online_payment_script()};
    const char* names[] = {"mint", "transfer", "online-payment"};
    for (int s = 0; s < 3; ++s)
    {
        std::string reference;
        for (int run = 0; run < 10; ++run)
        {
            auto sim = netsim::build_simulation(netsim::demo::network(seed));
            const std::string bytes = sim.run_scenario(scripts[s]).to_jsonl();
            if (run == 0)
                reference = bytes;
            else if (bytes != reference)
                return {false, std::string(names[s]) + " diverged on run " + std::to_string(run)};
        }
    }
    return {true, "3 scenarios x 10 runs byte-identical"};
}

} // namespace

ScenarioScript random_scenario(Rng& rng, int max_actions, bool pure_transfer)
{
    const std::vector<std::string> wallets = {"alice", "bob", "carol", "dave"};
    ScenarioScript script;

    const int total = 40 + static_cast<int>(rng.below(static_cast<uint64_t>(max_actions - 39)));
    const int mints = 4 + static_cast<int>(rng.below(9));

    for (int i = 0; i < mints && static_cast<int>(script.actions.size()) < total; ++i)
    {
        ScenarioAction mint;
        mint.type = ScenarioAction::Type::Mint;
        mint.at = static_cast<int64_t>(rng.below(10));
        mint.wallet = wallets[rng.below(wallets.size())];
        mint.value = 1 + static_cast<int64_t>(rng.below(100));
        script.actions.push_back(mint);
    }

    const int64_t base = pure_transfer ? 1000 : 30;
    int64_t at = base;
    while (static_cast<int>(script.actions.size()) < total)
    {
        ScenarioAction action;
        const uint64_t flavor = rng.below(pure_transfer ? 2 : 3);
        action.type = flavor == 0   ? ScenarioAction::Type::Pay
                      : flavor == 1 ? ScenarioAction::Type::IntraPay
                                    : ScenarioAction::Type::OnlinePay;
        action.at = at;
        at += 1 + static_cast<int64_t>(rng.below(8));
        action.wallet = wallets[rng.below(wallets.size())];
        if (action.type == ScenarioAction::Type::IntraPay)
        {
            // stay inside the payer's vault
            action.receiver = action.wallet == "alice"   ? "bob"
                              : action.wallet == "bob"   ? "alice"
                              : action.wallet == "carol" ? "dave"
                                                         : "carol";
        }
        else
        {
            action.receiver = wallets[rng.below(wallets.size())];
        }

        const uint64_t pick = rng.below(10);
        if (pick < 5)
            action.serial = "auto";
        else if (pick < 9)
            action.mint_index = static_cast<int>(rng.below(static_cast<uint64_t>(mints)));
        else
            action.serial = "sn-bogus";
        script.actions.push_back(action);
    }
    return script;
}

std::vector<CriterionResult> run_all(uint64_t seed)
{
    struct Entry {
        const char* name;
        std::function<Outcome(uint64_t)> run;
    };
    const Entry entries[] = {
        {"optimal-counterfeiting-bound", criterion_optimal_bound},
        {"attack-hierarchy", criterion_attack_hierarchy},
        {"wiesner-correctness", criterion_wiesner},
        {"uncertainty-relation", criterion_uncertainty},
        {"public-key-correctness", criterion_public_key},
        {"sabotage-resistance", criterion_sabotage},
        {"mutual-exclusivity", criterion_mutual_exclusivity},
        {"forgery-rejection", criterion_forgery},
        {"conservation-ledger-safety", criterion_conservation},
        {"determinism", criterion_determinism},
    };

    std::vector<CriterionResult> results;
    int index = 1;
    for (const Entry& entry : entries)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = entry.run(seed);
        const auto stop = std::chrono::steady_clock::now();
        CriterionResult result;
        result.index = index++;
        result.name = entry.name;
        result.pass = outcome.pass;
        result.detail = std::move(outcome.detail);
        result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
        results.push_back(std::move(result));
    }
    return results;
}

bool all_pass(const std::vector<CriterionResult>& results)
{
    for (const CriterionResult& result : results)
        if (!result.pass)
            return false;
    return true;
}

void print_table(std::ostream& out, const std::vector<CriterionResult>& results)
{
    for (const CriterionResult& result : results)
    {
        out << (result.pass ? "PASS" : "FAIL") << "  " << result.index << ". " << result.name
            << " (" << fmt(result.millis, 0) << " ms)";
        if (!result.detail.empty())
            out << "  " << result.detail;
        out << "\n";
    }
}

} // namespace qvault::acceptance
