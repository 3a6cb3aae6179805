// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/attacks/experiment.hpp"

#include <array>
#include <cmath>

#include "qvault/common/errors.hpp"
#include "qvault/common/rng.hpp"

namespace qvault::attacks {

using qsim::Basis;
using qsim::CVec;

nlohmann::ordered_json to_json(const ExperimentReport& report)
{
    nlohmann::ordered_json j;
    j["attack"] = report.attack;
    j["qubits"] = report.qubits;
    j["trials"] = report.trials;
    j["successes"] = report.successes;
    j["estimated_rate"] = report.estimated_rate;
    j["exact_rate"] = report.exact_rate;
    j["stderr"] = report.stderr_rate;
    j["seed"] = report.seed;
    return j;
}

ExperimentReport
run_counterfeit_experiment(const AttackChannel& attack, int qubits, int64_t trials, uint64_t seed)
{
    if (qubits < 1)
        throw Error("run_counterfeit_experiment: need at least one qubit");
    if (trials < 1)
        throw Error("run_counterfeit_experiment: need at least one trial");
    if (attack.channel.in_dim() != 2 || attack.channel.out_dim() != 4)
        throw DimensionError("run_counterfeit_experiment: expected a one-to-two qubit channel");

    // Verification measures both output qubits in the recorded basis; the
    // joint outcome distribution per conjugate-coding state is fixed by the
    // channel, so compute the four 4-point distributions once.
    std::array<std::vector<double>, 4> outcome_probs;
    {
        int index = 0;
        for (Basis b : {Basis::Computational, Basis::Diagonal})
            for (int bit = 0; bit < 2; ++bit)
            {
                const auto sigma = apply_channel(bb84_states()[static_cast<size_t>(index)], attack.channel);
                std::vector<double> probs(4);
                for (uint32_t joint = 0; joint < 4; ++joint)
                {
                    const CVec target = qsim::product_basis_vector({b, b}, joint);
                    probs[joint] = std::max(0.0, (target.adjoint() * sigma.matrix() * target)(0, 0).real());
                }
                outcome_probs[static_cast<size_t>(index)] = std::move(probs);
                ++index;
            }
    }

    const Rng master(seed);
    int64_t successes = 0;
    for (int64_t t = 0; t < trials; ++t)
    {
        Rng rng = master.fork(static_cast<uint64_t>(t));
        bool both_pass = true;
        for (int q = 0; q < qubits; ++q)
        {
            const int basis = rng.bit();
            const int bit = rng.bit();
            const auto& probs = outcome_probs[static_cast<size_t>(basis * 2 + bit)];
            const uint32_t joint = static_cast<uint32_t>(rng.sample(probs));
            const int copy1 = static_cast<int>((joint >> 1) & 1u);
            const int copy2 = static_cast<int>(joint & 1u);
            if (copy1 != bit || copy2 != bit)
            {
                both_pass = false;
                // keep drawing so the stream layout per trial is fixed
            }
        }
        successes += both_pass;
    }

    ExperimentReport report;
    report.attack = attack.name;
    report.qubits = qubits;
    report.trials = trials;
    report.successes = successes;
    report.estimated_rate = static_cast<double>(successes) / static_cast<double>(trials);
    report.exact_rate = exact_success(attack, qubits);
    report.stderr_rate = std::sqrt(
        std::max(report.estimated_rate * (1.0 - report.estimated_rate), 1e-12) /
        static_cast<double>(trials));
    report.seed = seed;
    return report;
}

} // namespace qvault::attacks
