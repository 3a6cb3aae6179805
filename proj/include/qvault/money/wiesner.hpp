// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvault/common/rng.hpp"
#include "qvault/qsim/engine.hpp"

namespace qvault::money {

// Private-key banknote: n conjugate-coded qubits whose classical description
// only the bank knows.
struct WiesnerNote {
    std::string serial;
    qsim::StateHandle state;
};

// The bank side of the private-key scheme. Records of (bits, bases) stay in
// here; notes and verification results are the only things that leave.
class WiesnerBank {
public:
    explicit WiesnerBank(int qubits);

    int qubits() const { return qubits_; }
    size_t issued() const { return records_.size(); }
    bool knows(const std::string& serial) const { return records_.count(serial) != 0; }

    WiesnerNote mint(qsim::QuantumEngine& engine, Rng& rng);

    // mint with caller-chosen encoding; lets tests and experiments target
    // specific records while the bank still tracks them
    WiesnerNote mint_recorded(qsim::QuantumEngine& engine, std::vector<int> bits,
                              std::vector<qsim::Basis> bases, Rng& rng);

    // per-qubit measurement in the recorded encoding basis, compared with
    // the recorded bits; returns the post-measurement state
    std::pair<bool, qsim::StateHandle>
    verify(const std::string& serial, qsim::StateHandle state, qsim::QuantumEngine& engine, Rng& rng);

private:
    struct Record {
        std::vector<int> bits;
        std::vector<qsim::Basis> bases;
    };

    int qubits_;
    std::map<std::string, Record> records_;
};

} // namespace qvault::money
