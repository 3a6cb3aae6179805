// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <vector>

#include "qvault/qsim/density.hpp"

namespace qvault::attacks {

// A per-qubit counterfeiting map: one authentic qubit in, two candidate
// qubits out, applied i.i.d. across the note.
struct AttackChannel {
    qsim::KrausChannel channel;
    std::string name;
};

// keep the original and bolt on a fresh |0>
AttackChannel attack_keep_and_fabricate();

// guess a basis uniformly, measure, hand both parties the observed state
AttackChannel attack_measure_random_basis();

// the four single-qubit conjugate-coding states as density matrices,
// index = basis * 2 + bit
const std::vector<qsim::DensityMatrix>& bb84_states();

// average probability that both output qubits pass verification against a
// uniformly random conjugate-coding state
double per_qubit_success(const AttackChannel& attack);

// success against an n-qubit note; the attack acts independently per qubit,
// so this is per_qubit_success^n. n = 0 gives the empty product 1.
double exact_success(const AttackChannel& attack, int qubits);

} // namespace qvault::attacks
