// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "qvault/attacks/channels.hpp"

namespace qvault::attacks {

struct ExperimentReport {
    std::string attack;
    int qubits = 0;
    int64_t trials = 0;
    int64_t successes = 0;
    double estimated_rate = 0.0;
    double exact_rate = 0.0;
    double stderr_rate = 0.0;
    uint64_t seed = 0;
};

nlohmann::ordered_json to_json(const ExperimentReport& report);

// Monte Carlo counterfeiting run: mint a fresh private-key note per trial,
// push every qubit through the attack map, then sample the bank's
// verification of both copies against its records. Trials fork their own
// randomness streams from the seed, so any execution order gives the same
// counts.
ExperimentReport
run_counterfeit_experiment(const AttackChannel& attack, int qubits, int64_t trials, uint64_t seed);

} // namespace qvault::attacks
