// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/money/wiesner.hpp"

#include "qvault/common/errors.hpp"
#include "qvault/common/siphash.hpp"

namespace qvault::money {

WiesnerBank::WiesnerBank(int qubits) : qubits_(qubits)
{
    if (qubits < 1 || qubits > qsim::QuantumEngine::kDefaultMaxQubits)
        throw Error("WiesnerBank: qubit count out of range");
}

WiesnerNote WiesnerBank::mint(qsim::QuantumEngine& engine, Rng& rng)
{
    std::vector<int> bits(static_cast<size_t>(qubits_));
    std::vector<qsim::Basis> bases(static_cast<size_t>(qubits_));
    for (int q = 0; q < qubits_; ++q)
    {
        bits[static_cast<size_t>(q)] = rng.bit();
        bases[static_cast<size_t>(q)] = rng.bit() ? qsim::Basis::Diagonal : qsim::Basis::Computational;
    }
    return mint_recorded(engine, std::move(bits), std::move(bases), rng);
}

WiesnerNote WiesnerBank::mint_recorded(qsim::QuantumEngine& engine, std::vector<int> bits,
                                       std::vector<qsim::Basis> bases, Rng& rng)
{
    if (static_cast<int>(bits.size()) != qubits_ || static_cast<int>(bases.size()) != qubits_)
        throw DimensionError("WiesnerBank: encoding length mismatch");

    std::string serial = "wn-" + hex_u64(rng.next_u64());
    while (records_.count(serial) != 0)
        serial = "wn-" + hex_u64(rng.next_u64());

    auto state = engine.prepare_bb84(bits, bases);
    records_.emplace(serial, Record{std::move(bits), std::move(bases)});
    return WiesnerNote{std::move(serial), std::move(state)};
}

std::pair<bool, qsim::StateHandle>
WiesnerBank::verify(const std::string& serial, qsim::StateHandle state, qsim::QuantumEngine& engine, Rng& rng)
{
    auto it = records_.find(serial);
    if (it == records_.end())
        throw RegistryError("WiesnerBank: unknown serial " + serial);
    const Record& rec = it->second;
    if (state.qubits() != qubits_)
        throw DimensionError("WiesnerBank: register size mismatch");

    bool valid = true;
    for (int q = 0; q < qubits_; ++q)
    {
        auto [bit, rest] = engine.measure_qubit(std::move(state), q, rec.bases[static_cast<size_t>(q)], rng);
        state = std::move(rest);
        valid = valid && bit == rec.bits[static_cast<size_t>(q)];
    }
    return {valid, std::move(state)};
}

} // namespace qvault::money
