// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/attacks/channels.hpp"

#include <cmath>

#include "qvault/common/errors.hpp"

namespace qvault::attacks {

using qsim::Basis;
using qsim::CMat;
using qsim::CVec;

namespace {

CVec single_state(Basis b, int bit)
{
    auto amps = qsim::basis_state(b, bit);
    CVec v(2);
    v(0) = amps[0];
    v(1) = amps[1];
    return v;
}

CVec doubled_state(Basis b, int bit)
{
    const CVec one = single_state(b, bit);
    CVec two(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            two(i * 2 + j) = one(i) * one(j);
    return two;
}

} // namespace

const std::vector<qsim::DensityMatrix>& bb84_states()
{
    static const std::vector<qsim::DensityMatrix> states = [] {
        std::vector<qsim::DensityMatrix> out;
        for (Basis b : {Basis::Computational, Basis::Diagonal})
            for (int bit = 0; bit < 2; ++bit)
                out.push_back(qsim::DensityMatrix::from_pure(single_state(b, bit)));
        return out;
    }();
    return states;
}

AttackChannel attack_keep_and_fabricate()
{
    // K|i> = |i>|0>
    CMat k = CMat::Zero(4, 2);
    k(0, 0) = 1.0;
    k(2, 1) = 1.0;
    return AttackChannel{qsim::KrausChannel({k}), "keep-and-fabricate"};
}

AttackChannel attack_measure_random_basis()
{
    // mixture over basis guess and observed outcome; each operator sends the
    // observed state to two copies of itself
    std::vector<CMat> ops;
    for (Basis b : {Basis::Computational, Basis::Diagonal})
        for (int bit = 0; bit < 2; ++bit)
        {
            const CVec in = single_state(b, bit);
            const CVec out = doubled_state(b, bit);
            CMat k = (1.0 / std::sqrt(2.0)) * out * in.adjoint();
            ops.push_back(std::move(k));
        }
    return AttackChannel{qsim::KrausChannel(std::move(ops)), "measure-random-basis"};
}

double per_qubit_success(const AttackChannel& attack)
{
    if (attack.channel.in_dim() != 2 || attack.channel.out_dim() != 4)
        throw DimensionError("per_qubit_success: expected a one-to-two qubit channel");

    double total = 0.0;
    int index = 0;
    for (Basis b : {Basis::Computational, Basis::Diagonal})
        for (int bit = 0; bit < 2; ++bit)
        {
            const auto out = apply_channel(bb84_states()[static_cast<size_t>(index++)], attack.channel);
            const CVec target = doubled_state(b, bit);
            total += (target.adjoint() * out.matrix() * target)(0, 0).real();
        }
    return total / 4.0;
}

double exact_success(const AttackChannel& attack, int qubits)
{
    if (qubits < 0)
        throw Error("exact_success: negative qubit count");
    return std::pow(per_qubit_success(attack), qubits);
}

} // namespace qvault::attacks
