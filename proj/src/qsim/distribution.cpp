// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/qsim/distribution.hpp"

#include <cmath>

#include "qvault/common/errors.hpp"

namespace qvault::qsim {

double shannon_entropy(const std::vector<double>& probs)
{
    double h = 0.0;
    for (double p : probs)
    {
        if (p < -1e-12)
            throw Error("shannon_entropy: negative probability");
        if (p > 1e-300)
            h -= p * std::log2(p);
    }
    return h;
}

double shannon_entropy(const OutcomeDistribution& dist)
{
    return shannon_entropy(dist.probs);
}

std::string bits_to_string(uint32_t word, int qubits)
{
    std::string out(static_cast<size_t>(qubits), '0');
    for (int i = 0; i < qubits; ++i)
        if ((word >> (qubits - 1 - i)) & 1u)
            out[static_cast<size_t>(i)] = '1';
    return out;
}

uint32_t bits_from_string(std::string_view text)
{
    uint32_t word = 0;
    for (char c : text)
    {
        if (c != '0' && c != '1')
            throw Error("bits_from_string: expected a 0/1 string");
        word = (word << 1) | static_cast<uint32_t>(c == '1');
    }
    return word;
}

} // namespace qvault::qsim
