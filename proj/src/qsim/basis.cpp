// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/qsim/basis.hpp"

#include <cmath>

#include "qvault/common/errors.hpp"

namespace qvault::qsim {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

std::array<Amplitude, 2> basis_state(Basis b, int outcome)
{
    if (outcome != 0 && outcome != 1)
        throw Error("basis_state: outcome must be 0 or 1");
    if (b == Basis::Computational)
        return outcome == 0 ? std::array<Amplitude, 2>{1.0, 0.0} : std::array<Amplitude, 2>{0.0, 1.0};
    return outcome == 0 ? std::array<Amplitude, 2>{kInvSqrt2, kInvSqrt2}
                        : std::array<Amplitude, 2>{kInvSqrt2, -kInvSqrt2};
}

std::vector<Basis> uniform_bases(int qubits, Basis b)
{
    return std::vector<Basis>(static_cast<size_t>(qubits), b);
}

std::string to_string(Basis b)
{
    return b == Basis::Computational ? "computational" : "diagonal";
}

} // namespace qvault::qsim
