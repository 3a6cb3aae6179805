// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qvault::qsim {

// Exact Born-rule outcome distribution of a register measured in a product
// basis. labels[i] is the bit word of outcome i; for a full distribution
// labels[i] == i.
struct OutcomeDistribution {
    int qubits = 0;
    std::vector<double> probs;
    std::vector<uint32_t> labels;
};

// -sum p log2 p with 0 log 0 == 0
double shannon_entropy(const OutcomeDistribution& dist);
double shannon_entropy(const std::vector<double>& probs);

// bit word <-> bitstring text, qubit 0 leftmost
std::string bits_to_string(uint32_t word, int qubits);
uint32_t bits_from_string(std::string_view text);

} // namespace qvault::qsim
