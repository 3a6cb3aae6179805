// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qvault/qsim/basis.hpp"

namespace qvault::qsim {

class QuantumEngine;

// Owned, consume-on-use reference to a simulated quantum register.
//
// A handle is move-only: there is no way to end up with two live handles over
// the same logical state. Operations that destroy or transform the state take
// the handle by value and leave the argument consumed; any further engine
// operation on a consumed handle throws ConsumedStateError.
class StateHandle {
public:
    StateHandle(const StateHandle&) = delete;
    StateHandle& operator=(const StateHandle&) = delete;

    StateHandle(StateHandle&& other) noexcept
        : id_(other.id_), qubits_(other.qubits_), live_(other.live_), amps_(std::move(other.amps_))
    {
        other.live_ = false;
        other.amps_.clear();
    }

    StateHandle& operator=(StateHandle&& other) noexcept
    {
        if (this != &other)
        {
            id_ = other.id_;
            qubits_ = other.qubits_;
            live_ = other.live_;
            amps_ = std::move(other.amps_);
            other.live_ = false;
            other.amps_.clear();
        }
        return *this;
    }

    int qubits() const { return qubits_; }
    bool live() const { return live_; }

    // stable identifier of this particular live register, used by transcripts
    // to show that no handle is ever delivered twice
    uint64_t id() const { return id_; }

private:
    friend class QuantumEngine;

    StateHandle(uint64_t id, int qubits, std::vector<Amplitude> amps)
        : id_(id), qubits_(qubits), live_(true), amps_(std::move(amps))
    {
    }

    uint64_t id_ = 0;
    int qubits_ = 0;
    bool live_ = false;
    std::vector<Amplitude> amps_;
};

} // namespace qvault::qsim
