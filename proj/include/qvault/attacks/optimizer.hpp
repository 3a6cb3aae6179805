// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <vector>

#include "qvault/attacks/channels.hpp"

namespace qvault::attacks {

// Choi-matrix helpers for 1 qubit in, 2 qubits out (8x8, ordered in (x) out).
qsim::CMat choi_of_channel(const qsim::KrausChannel& channel);
qsim::KrausChannel channel_of_choi(const qsim::CMat& choi);
qsim::CMat partial_trace_out(const qsim::CMat& choi);

// nearest matrix that is PSD and trace-preserving, by alternating projections
qsim::CMat project_cptp(qsim::CMat choi, double eps, int max_rounds = 20000);

struct ClonerResult {
    AttackChannel channel;
    double achieved = 0.0; // per-qubit double-pass probability of the result
    bool converged = false;
    std::vector<double> objective_trace; // objective at every accepted iterate
    qsim::CMat choi;
};

// Recovers the best per-qubit cloning map by projected gradient ascent over
// CPTP channels: the double-pass objective is linear in the Choi matrix, so
// each step is a gradient move followed by re-projection onto {PSD} and the
// partial-trace constraint. Starts from keep-and-fabricate.
ClonerResult optimize_cloner(int iterations, double tolerance);

} // namespace qvault::attacks
