// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/qsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qvault/common/errors.hpp"
#include "qvault/common/tolerances.hpp"

namespace qvault::qsim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// in-place H on one qubit; shift counts from the least significant index bit
void hadamard_at(std::vector<Amplitude>& amps, int shift)
{
    const size_t step = size_t{1} << shift;
    const size_t size = amps.size();
    for (size_t base = 0; base < size; base += 2 * step)
    {
        for (size_t off = 0; off < step; ++off)
        {
            const size_t i0 = base + off;
            const size_t i1 = i0 + step;
            const Amplitude a0 = amps[i0];
            const Amplitude a1 = amps[i1];
            amps[i0] = (a0 + a1) * kInvSqrt2;
            amps[i1] = (a0 - a1) * kInvSqrt2;
        }
    }
}

double norm_squared(const std::vector<Amplitude>& amps)
{
    double s = 0.0;
    for (const Amplitude& a : amps)
        s += std::norm(a);
    return s;
}

} // namespace

QuantumEngine::QuantumEngine(Mode mode, int max_qubits) : mode_(mode), max_qubits_(max_qubits)
{
    if (max_qubits < 1 || max_qubits > 26)
        throw Error("QuantumEngine: max_qubits out of range");
}

void QuantumEngine::check_live(const StateHandle& handle) const
{
    if (!handle.live())
        throw ConsumedStateError("operation on a consumed state handle");
}

void QuantumEngine::require_omniscient(const char* op) const
{
    if (mode_ != Mode::Omniscient)
        throw OmniscientAccessError(std::string(op) + " requires an omniscient-mode engine");
}

std::vector<Amplitude> QuantumEngine::take(StateHandle& handle)
{
    check_live(handle);
    handle.live_ = false;
    return std::move(handle.amps_);
}

StateHandle QuantumEngine::wrap(int qubits, std::vector<Amplitude> amps)
{
    return StateHandle(next_id_++, qubits, std::move(amps));
}

StateHandle QuantumEngine::prepare_bb84(const std::vector<int>& bits, const std::vector<Basis>& bases)
{
    if (bits.size() != bases.size())
        throw DimensionError("prepare_bb84: bits/bases length mismatch");
    const int n = static_cast<int>(bits.size());
    if (n < 1)
        throw DimensionError("prepare_bb84: need at least one qubit");
    if (n > max_qubits_)
        throw DimensionError("prepare_bb84: register larger than engine maximum");

    // build the product state in place, doubling from the back
    std::vector<Amplitude> amps(size_t{1} << n);
    amps[0] = 1.0;
    size_t filled = 1;
    for (int q = 0; q < n; ++q)
    {
        const auto single = basis_state(bases[static_cast<size_t>(q)], bits[static_cast<size_t>(q)]);
        for (size_t j = filled; j-- > 0;)
        {
            const Amplitude a = amps[j];
            amps[2 * j] = a * single[0];
            amps[2 * j + 1] = a * single[1];
        }
        filled *= 2;
    }
    return wrap(n, std::move(amps));
}

StateHandle QuantumEngine::prepare_basis_state(int qubits, uint32_t word)
{
    if (qubits < 1 || qubits > max_qubits_)
        throw DimensionError("prepare_basis_state: qubit count out of range");
    if (word >= (uint32_t{1} << qubits))
        throw DimensionError("prepare_basis_state: word wider than register");
    std::vector<Amplitude> amps(size_t{1} << qubits, 0.0);
    amps[word] = 1.0;
    return wrap(qubits, std::move(amps));
}

StateHandle QuantumEngine::prepare_superposition(int qubits, const std::vector<uint32_t>& members)
{
    if (qubits < 1 || qubits > max_qubits_)
        throw DimensionError("prepare_superposition: qubit count out of range");
    if (members.empty())
        throw DimensionError("prepare_superposition: empty member set");
    std::set<uint32_t> distinct(members.begin(), members.end());
    if (distinct.size() != members.size())
        throw DimensionError("prepare_superposition: duplicate members");
    std::vector<Amplitude> amps(size_t{1} << qubits, 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(members.size()));
    for (uint32_t w : members)
    {
        if (w >= (uint32_t{1} << qubits))
            throw DimensionError("prepare_superposition: member wider than register");
        amps[w] = a;
    }
    return wrap(qubits, std::move(amps));
}

StateHandle QuantumEngine::prepare_amplitudes(std::vector<Amplitude> amps)
{
    size_t size = amps.size();
    if (size < 2 || (size & (size - 1)) != 0)
        throw DimensionError("prepare_amplitudes: length must be a power of two >= 2");
    int n = 0;
    while ((size_t{1} << n) < size)
        ++n;
    if (n > max_qubits_)
        throw DimensionError("prepare_amplitudes: register larger than engine maximum");
    if (std::abs(norm_squared(amps) - 1.0) > tol::kNorm)
        throw Error("prepare_amplitudes: register not normalized");
    return wrap(n, std::move(amps));
}

std::vector<int> QuantumEngine::measure_all(StateHandle handle, const std::vector<Basis>& bases, Rng& rng)
{
    const int n = handle.qubits();
    if (static_cast<int>(bases.size()) != n)
        throw DimensionError("measure_all: bases length mismatch");
    std::vector<Amplitude> amps = take(handle);

    for (int q = 0; q < n; ++q)
        if (bases[static_cast<size_t>(q)] == Basis::Diagonal)
            hadamard_at(amps, n - 1 - q);

    const double total = norm_squared(amps);
    const double u = rng.uniform() * total;
    double acc = 0.0;
    uint32_t word = static_cast<uint32_t>(amps.size() - 1);
    for (size_t i = 0; i < amps.size(); ++i)
    {
        acc += std::norm(amps[i]);
        if (u < acc)
        {
            word = static_cast<uint32_t>(i);
            break;
        }
    }

    std::vector<int> outcome(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q)
        outcome[static_cast<size_t>(q)] = static_cast<int>((word >> (n - 1 - q)) & 1u);
    return outcome;
}

std::pair<int, StateHandle> QuantumEngine::measure_qubit(StateHandle handle, int index, Basis basis, Rng& rng)
{
    const int n = handle.qubits();
    if (index < 0 || index >= n)
        throw DimensionError("measure_qubit: qubit index out of range");
    std::vector<Amplitude> amps = take(handle);

    const int shift = n - 1 - index;
    const size_t step = size_t{1} << shift;
    const size_t size = amps.size();

    if (basis == Basis::Computational)
    {
        // live registers hold unit norm, so one half determines both branches
        double p0 = 0.0;
        for (size_t base = 0; base < size; base += 2 * step)
            for (size_t off = 0; off < step; ++off)
                p0 += std::norm(amps[base + off]);

        const int outcome = rng.uniform() < p0 ? 0 : 1;
        const double branch = outcome == 0 ? p0 : 1.0 - p0;
        const double scale = 1.0 / std::sqrt(branch);
        for (size_t base = 0; base < size; base += 2 * step)
            for (size_t off = 0; off < step; ++off)
            {
                const size_t keep = base + off + (outcome == 0 ? 0 : step);
                const size_t kill = base + off + (outcome == 0 ? step : 0);
                amps[keep] *= scale;
                amps[kill] = 0.0;
            }
        return {outcome, wrap(n, std::move(amps))};
    }

    // diagonal basis, fused: project onto (|0> +- |1>)/sqrt(2) pairwise
    // without rotating the whole register twice
    double p0 = 0.0;
    for (size_t base = 0; base < size; base += 2 * step)
        for (size_t off = 0; off < step; ++off)
        {
            const size_t i0 = base + off;
            p0 += 0.5 * std::norm(amps[i0] + amps[i0 + step]);
        }

    const int outcome = rng.uniform() < p0 ? 0 : 1;
    const double branch = outcome == 0 ? p0 : 1.0 - p0;
    const double sign = outcome == 0 ? 1.0 : -1.0;
    const double scale = 0.5 / std::sqrt(branch);
    for (size_t base = 0; base < size; base += 2 * step)
        for (size_t off = 0; off < step; ++off)
        {
            const size_t i0 = base + off;
            const Amplitude projected = (amps[i0] + sign * amps[i0 + step]) * scale;
            amps[i0] = projected;
            amps[i0 + step] = sign * projected;
        }
    return {outcome, wrap(n, std::move(amps))};
}

StateHandle QuantumEngine::hadamard_all(StateHandle handle)
{
    const int n = handle.qubits();
    std::vector<Amplitude> amps = take(handle);
    for (int q = 0; q < n; ++q)
        hadamard_at(amps, q);
    return wrap(n, std::move(amps));
}

std::pair<bool, StateHandle>
QuantumEngine::project_predicate(StateHandle handle, const std::function<bool(uint32_t)>& pred, Rng& rng)
{
    const int n = handle.qubits();
    std::vector<Amplitude> amps = take(handle);

    double p = 0.0;
    for (size_t i = 0; i < amps.size(); ++i)
        if (pred(static_cast<uint32_t>(i)))
            p += std::norm(amps[i]);

    const bool accepted = rng.uniform() < p;
    const double branch = accepted ? p : 1.0 - p;
    const double scale = 1.0 / std::sqrt(branch);
    for (size_t i = 0; i < amps.size(); ++i)
    {
        if (pred(static_cast<uint32_t>(i)) == accepted)
            amps[i] *= scale;
        else
            amps[i] = 0.0;
    }
    return {accepted, wrap(n, std::move(amps))};
}

OutcomeDistribution QuantumEngine::outcome_distribution(const StateHandle& handle,
                                                        const std::vector<Basis>& bases) const
{
    require_omniscient("outcome_distribution");
    check_live(handle);
    const int n = handle.qubits();
    if (static_cast<int>(bases.size()) != n)
        throw DimensionError("outcome_distribution: bases length mismatch");

    std::vector<Amplitude> amps = handle.amps_;
    for (int q = 0; q < n; ++q)
        if (bases[static_cast<size_t>(q)] == Basis::Diagonal)
            hadamard_at(amps, n - 1 - q);

    OutcomeDistribution dist;
    dist.qubits = n;
    dist.probs.resize(amps.size());
    dist.labels.resize(amps.size());
    for (size_t i = 0; i < amps.size(); ++i)
    {
        dist.probs[i] = std::norm(amps[i]);
        dist.labels[i] = static_cast<uint32_t>(i);
    }
    return dist;
}

std::vector<Amplitude> QuantumEngine::amplitudes(const StateHandle& handle) const
{
    require_omniscient("amplitudes");
    check_live(handle);
    return handle.amps_;
}

} // namespace qvault::qsim
