// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qvault::qsim {

using Amplitude = std::complex<double>;

// The two mutually unbiased single-qubit bases. Computational holds |0>, |1>;
// Diagonal holds |+> = (|0>+|1>)/sqrt(2) and |-> = (|0>-|1>)/sqrt(2).
// Outcome convention throughout: |+> reads as 0, |-> reads as 1.
enum class Basis : uint8_t {
    Computational,
    Diagonal,
};

// amplitudes of the outcome-th state of basis b
std::array<Amplitude, 2> basis_state(Basis b, int outcome);

std::vector<Basis> uniform_bases(int qubits, Basis b);

std::string to_string(Basis b);

} // namespace qvault::qsim
