// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qvault/common/rng.hpp"
#include "qvault/qsim/basis.hpp"
#include "qvault/qsim/distribution.hpp"
#include "qvault/qsim/state_handle.hpp"

namespace qvault::qsim {

// Linear pure-state engine.
//
// Index convention: qubit 0 is the most significant bit of the amplitude
// index, so a basis word w names amplitude amps[w] directly.
//
// The engine runs in one of two modes. Protocol mode is what protocol
// entities get: preparation, measurement and projection only. Omniscient mode
// additionally allows non-disturbing inspection (outcome_distribution,
// amplitudes) and exists so tests can compute exact oracles; it is selected
// by an explicit constructor argument and never by ambient configuration.
class QuantumEngine {
public:
    enum class Mode {
        Protocol,
        Omniscient,
    };

    static constexpr int kDefaultMaxQubits = 20;

    explicit QuantumEngine(Mode mode = Mode::Protocol, int max_qubits = kDefaultMaxQubits);

    Mode mode() const { return mode_; }
    int max_qubits() const { return max_qubits_; }
    bool omniscient() const { return mode_ == Mode::Omniscient; }

    // product state encode(bits[i], bases[i]) over all qubits
    StateHandle prepare_bb84(const std::vector<int>& bits, const std::vector<Basis>& bases);

    StateHandle prepare_basis_state(int qubits, uint32_t word);

    // uniform superposition over the given distinct basis words
    StateHandle prepare_superposition(int qubits, const std::vector<uint32_t>& members);

    // arbitrary normalized register (power-of-two length)
    StateHandle prepare_amplitudes(std::vector<Amplitude> amps);

    // Born-rule sample of the whole register in a per-qubit product basis;
    // consumes the handle and returns one outcome bit per qubit.
    std::vector<int> measure_all(StateHandle handle, const std::vector<Basis>& bases, Rng& rng);

    // Born-rule sample of one qubit; the returned handle carries the
    // renormalized post-measurement register, the input is consumed.
    std::pair<int, StateHandle> measure_qubit(StateHandle handle, int index, Basis basis, Rng& rng);

    // H on every qubit; involution
    StateHandle hadamard_all(StateHandle handle);

    // Binary projective measurement {P, 1-P} where P keeps the basis states
    // whose word satisfies pred. Returns the sampled branch and the
    // renormalized post-measurement register.
    std::pair<bool, StateHandle>
    project_predicate(StateHandle handle, const std::function<bool(uint32_t)>& pred, Rng& rng);

    // --- omniscient-only, non-disturbing ---

    OutcomeDistribution outcome_distribution(const StateHandle& handle,
                                             const std::vector<Basis>& bases) const;

    std::vector<Amplitude> amplitudes(const StateHandle& handle) const;

private:
    std::vector<Amplitude> take(StateHandle& handle);
    StateHandle wrap(int qubits, std::vector<Amplitude> amps);
    void check_live(const StateHandle& handle) const;
    void require_omniscient(const char* op) const;

    Mode mode_;
    int max_qubits_;
    uint64_t next_id_ = 1;
};

} // namespace qvault::qsim
