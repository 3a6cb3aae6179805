// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Command-line front end: scenario execution, counterfeiting experiments and
// the acceptance suite.
//
// Exit codes: 0 success, 1 invariant or criterion failure, 2 malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "qvault/acceptance.hpp"
#include "qvault/attacks/experiment.hpp"
#include "qvault/attacks/optimizer.hpp"
#include "qvault/common/errors.hpp"
#include "qvault/netsim/checks.hpp"
#include "qvault/netsim/demo.hpp"
#include "qvault/netsim/simulation.hpp"

namespace {

using qvault::netsim::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in.good())
        throw qvault::Error("cannot read " + path);
    Json j;
    in >> j;
    return j;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out.good())
        throw qvault::Error("cannot write " + path);
    out << content;
}

// prints receipts, ledger totals, the conservation fold and every invariant
// check; returns true when all checks hold
bool print_summary(const qvault::netsim::Transcript& transcript)
{
    std::cout << "seed: " << transcript.seed << "\n";
    std::cout << "quiescent: " << (transcript.quiescent ? "yes" : "no")
              << "  final tick: " << transcript.final_tick
              << "  records: " << transcript.records.size() << "\n";

    std::cout << "receipts:\n";
    for (const auto& receipt : transcript.receipts)
    {
        std::cout << "  " << receipt.correlation_id << "  "
                  << qvault::vault::to_string(receipt.outcome);
        if (!receipt.serials.empty())
        {
            std::cout << "  serials=[";
            for (size_t i = 0; i < receipt.serials.size(); ++i)
                std::cout << (i ? "," : "") << receipt.serials[i];
            std::cout << "]";
        }
        if (!receipt.amounts.empty())
        {
            std::cout << " amounts=[";
            for (size_t i = 0; i < receipt.amounts.size(); ++i)
                std::cout << (i ? "," : "") << receipt.amounts[i];
            std::cout << "]";
        }
        if (!receipt.reason.empty())
            std::cout << "  (" << receipt.reason << ")";
        std::cout << "\n";
    }

    const auto fold = qvault::netsim::fold_ledgers(transcript);
    std::cout << "ledgers: ia_active=" << fold.ia_active << " custody=" << fold.custody
              << " explained_losses=" << fold.explained_losses << "\n";
    for (const auto& [id, snapshot] : transcript.ledgers.at("msbs").items())
        std::cout << "  " << id << ": " << snapshot.at("custody_value").get<int64_t>() << "\n";

    bool ok = true;
    std::cout << "checks:\n";
    for (const auto& check : qvault::netsim::run_invariant_checks(transcript))
    {
        std::cout << "  " << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.detail.empty())
            std::cout << "  " << check.detail;
        std::cout << "\n";
        ok = ok && check.pass;
    }
    std::cout << (ok ? "result: OK" : "result: INVARIANT VIOLATION") << "\n";
    return ok;
}

int run_with(const qvault::netsim::NetworkConfig& config, const qvault::netsim::ScenarioScript& script,
             const std::string& out_path)
{
    auto sim = qvault::netsim::build_simulation(config);
    auto transcript = sim.run_scenario(script);
    if (!out_path.empty())
    {
        write_file(out_path, transcript.to_jsonl());
        std::cout << "transcript written to " << out_path << "\n";
    }
    return print_summary(transcript) ? kExitOk : kExitViolation;
}

int cmd_run_scenario(const std::string& config_path, const std::string& script_path,
                     std::optional<uint64_t> seed, const std::string& out_path)
{
    auto config = qvault::netsim::NetworkConfig::from_json(load_json(config_path));
    if (seed)
        config.seed = *seed;
    auto script = qvault::netsim::ScenarioScript::from_json(load_json(script_path));
    return run_with(config, script, out_path);
}

int cmd_demo(const std::string& which, uint64_t seed, const std::string& out_path)
{
    auto config = qvault::netsim::demo::network(seed);
    qvault::netsim::ScenarioScript script;
    if (which == "mint")
        script = qvault::netsim::demo::mint_script();
    else if (which == "pay")
        script = qvault::netsim::demo::transfer_script();
    else
        script = qvault::netsim::demo::online_payment_script();
    return run_with(config, script, out_path);
}

int cmd_counterfeit(const std::string& attack_name, int qubits, int64_t trials, uint64_t seed,
                    const std::string& out_path)
{
    std::optional<qvault::attacks::AttackChannel> attack;
    if (attack_name == "fabricate")
        attack = qvault::attacks::attack_keep_and_fabricate();
    else if (attack_name == "random-basis")
        attack = qvault::attacks::attack_measure_random_basis();
    else
    {
        auto result = qvault::attacks::optimize_cloner(400, 1e-6);
        std::cout << "optimizer: per-qubit objective " << result.achieved << " after "
                  << result.objective_trace.size() << " accepted iterates"
                  << (result.converged ? "" : " (budget exhausted)") << "\n";
        attack = std::move(result.channel);
    }

    std::cout << "seed: " << seed << "\n";
    auto report = qvault::attacks::run_counterfeit_experiment(*attack, qubits, trials, seed);
    const double reference = std::pow(0.75, qubits);
    std::cout << "attack:       " << report.attack << "\n"
              << "qubits:       " << report.qubits << "\n"
              << "trials:       " << report.trials << "\n"
              << "estimated:    " << report.estimated_rate << " +- " << report.stderr_rate << "\n"
              << "exact:        " << report.exact_rate << "\n"
              << "(3/4)^n ref:  " << reference << "\n";
    if (!out_path.empty())
    {
        write_file(out_path, qvault::attacks::to_json(report).dump(2) + "\n");
        std::cout << "report written to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_verify_acceptance(uint64_t seed)
{
    std::cout << "seed: " << seed << "\n";
    const auto results = qvault::acceptance::run_all(seed);
    qvault::acceptance::print_table(std::cout, results);
    const bool ok = qvault::acceptance::all_pass(results);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return ok ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qvault: quantum-vault digital currency simulator"};
    app.require_subcommand(1);

    // run-scenario
    std::string config_path, script_path, out_path;
    std::optional<uint64_t> seed_override;
    auto* run = app.add_subcommand("run-scenario", "execute a scripted scenario from JSON files");
    run->add_option("--config", config_path, "network configuration (JSON)")->required();
    run->add_option("--script", script_path, "scenario script (JSON)")->required();
    run->add_option("--seed", seed_override, "override the configured seed");
    run->add_option("--out", out_path, "write the transcript (JSON lines) here");

    // demos
    uint64_t demo_seed = 42;
    std::string demo_out;
    auto* mint_demo = app.add_subcommand("mint-demo", "on-demand minting on the demo network");
    auto* pay_demo = app.add_subcommand("pay-demo", "banknote transfers on the demo network");
    auto* online_demo =
        app.add_subcommand("online-pay-demo", "online payments on the demo network");
    for (auto* demo : {mint_demo, pay_demo, online_demo})
    {
        demo->add_option("--seed", demo_seed, "simulation seed");
        demo->add_option("--out", demo_out, "write the transcript (JSON lines) here");
    }

    // counterfeit-experiment
    std::string attack_name = "optimal";
    int qubits = 1;
    int64_t trials = 100000;
    uint64_t experiment_seed = 42;
    std::string experiment_out;
    auto* experiment =
        app.add_subcommand("counterfeit-experiment", "Monte Carlo counterfeiting run");
    experiment->add_option("--attack", attack_name, "fabricate | random-basis | optimal")
        ->check(CLI::IsMember({"fabricate", "random-basis", "optimal"}));
    experiment->add_option("--qubits", qubits, "banknote size")->check(CLI::Range(1, 20));
    experiment->add_option("--trials", trials, "Monte Carlo trials")
        ->check(CLI::Range(int64_t{1}, int64_t{100000000}));
    experiment->add_option("--seed", experiment_seed, "experiment seed");
    experiment->add_option("--out", experiment_out, "write the report (JSON) here");

    // verify-acceptance
    uint64_t acceptance_seed = 42;
    auto* verify = app.add_subcommand("verify-acceptance", "run the acceptance criteria");
    verify->add_option("--seed", acceptance_seed, "suite seed");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kExitBadInput;
    }

    try
    {
        if (run->parsed())
            return cmd_run_scenario(config_path, script_path, seed_override, out_path);
        if (mint_demo->parsed())
            return cmd_demo("mint", demo_seed, demo_out);
        if (pay_demo->parsed())
            return cmd_demo("pay", demo_seed, demo_out);
        if (online_demo->parsed())
            return cmd_demo("online", demo_seed, demo_out);
        if (experiment->parsed())
            return cmd_counterfeit(attack_name, qubits, trials, experiment_seed, experiment_out);
        if (verify->parsed())
            return cmd_verify_acceptance(acceptance_seed);
    }
    catch (const nlohmann::json::exception& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    }
    catch (const qvault::ConfigError& e)
    {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    }
    catch (const qvault::Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
