// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qvault/common/rng.hpp"
#include "qvault/common/siphash.hpp"
#include "qvault/money/subspace.hpp"
#include "qvault/qsim/engine.hpp"

namespace qvault::money {

using Json = nlohmann::ordered_json;

struct SchemeParams {
    int qubits = 8; // security parameter; even, 4 .. engine max
};

void validate_params(const SchemeParams& params);

enum class NoteStatus {
    Pending,
    Active,
    Destroyed,
};

std::string to_string(NoteStatus s);

// Issuer-side record of one banknote. `secret` and `ack_secret` never leave
// the issuing authority.
struct ClassicalBanknote {
    std::string serial;
    int64_t value = 0;
    NoteStatus status = NoteStatus::Pending;
    Subspace secret;
    std::string tag;
    std::string ack_secret;
};

Json to_json(const ClassicalBanknote& note);
ClassicalBanknote banknote_from_json(const Json& j);

// Sealed membership predicate: answers "is this word in the hidden subspace"
// and exposes nothing else. Only the registry can construct one.
class MembershipOracle {
public:
    bool contains(uint32_t word) const { return space_.contains(word); }
    uint64_t capability() const { return capability_; }
    int qubits() const { return space_.n(); }

private:
    friend class OracleRegistry;
    MembershipOracle(uint64_t capability, Subspace space)
        : capability_(capability), space_(std::move(space))
    {
    }

    uint64_t capability_ = 0;
    Subspace space_;
};

using OracleRef = std::shared_ptr<const MembershipOracle>;

// Issues capability handles for sealed predicates. Serialized public keys
// carry only capability ids, resolvable against the registry that made them.
class OracleRegistry {
public:
    OracleRef seal(const Subspace& space);
    OracleRef resolve(uint64_t capability) const;

private:
    uint64_t next_ = 1;
    std::map<uint64_t, OracleRef> table_;
};

struct BanknotePublicKey {
    std::string serial;
    int64_t value = 0;
    OracleRef oracle_a;
    OracleRef oracle_adual;
    std::string ia_tag;
};

Json to_json(const BanknotePublicKey& pk);
BanknotePublicKey pk_from_json(const Json& j, const OracleRegistry& oracles);

// The quantum face of a unit of funds. Move-only through its StateHandle;
// there is never more than one live instance per serial.
struct QuantumBanknote {
    std::string serial;
    int64_t value = 0;
    qsim::StateHandle state;
};

struct DestructionCert {
    std::string serial;
    int qubits = 0;
    uint32_t witness = 0;
};

Json to_json(const DestructionCert& cert);
DestructionCert cert_from_json(const Json& j);

// One-shot minting order sent from the issuer to a vault. Consumed by
// rec_mint; the basis description exists nowhere after preparation.
struct MintInstruction {
    std::string serial;
    int64_t value = 0;
    Subspace basis;
    std::string ack_secret;
    std::string digest;
};

struct AckCipher {
    std::string serial;
    std::string vault_id;
    std::string tag;
};

Json to_json(const AckCipher& ack);
AckCipher ack_from_json(const Json& j);

struct SchemePublicKey {
    std::string scheme_id;
};

// Authentication key plus the serial registry. Default-constructed keys are
// empty shells; real ones come out of gen.
class SchemeSecretKey {
public:
    SchemeSecretKey() = default;

    const std::string& scheme_id() const { return scheme_id_; }
    const SchemeParams& params() const { return params_; }

    bool has(const std::string& serial) const { return registry_.count(serial) != 0; }
    const ClassicalBanknote& note(const std::string& serial) const;
    NoteStatus status(const std::string& serial) const { return note(serial).status; }
    int64_t total_active_value() const;
    const std::map<std::string, ClassicalBanknote>& registry() const { return registry_; }

private:
    friend std::pair<SchemePublicKey, SchemeSecretKey> gen(const SchemeParams&, Rng&);
    friend std::pair<ClassicalBanknote, MintInstruction> bank_mint(SchemeSecretKey&, int64_t, Rng&);
    friend BanknotePublicKey finalize_mint(SchemeSecretKey&, const AckCipher&, OracleRegistry&);
    friend void settle_destroyed(SchemeSecretKey&, const std::string&);

    MacKey mac_;
    std::string scheme_id_;
    SchemeParams params_;
    std::map<std::string, ClassicalBanknote> registry_;
};

struct CvResult {
    enum class Reason {
        Ok,
        UnknownSerial,
        NotActive,
        Spent,
        ZeroWitness,
        NotInDual,
    };

    bool ok = false;
    Reason reason = Reason::NotInDual;
};

std::string to_string(CvResult::Reason r);

// --- scheme operations ---

std::pair<SchemePublicKey, SchemeSecretKey> gen(const SchemeParams& params, Rng& rng);

// registers a Pending banknote and produces the order for the minting vault
std::pair<ClassicalBanknote, MintInstruction> bank_mint(SchemeSecretKey& sk, int64_t value, Rng& rng);

// integrity digest an instruction must carry to be accepted by rec_mint
std::string instruction_digest(const MintInstruction& instruction);

// prepares |A> = uniform superposition over the hidden subspace and answers
// with an authenticated acknowledgment bound to (serial, vault)
std::pair<QuantumBanknote, AckCipher>
rec_mint(MintInstruction instruction, qsim::QuantumEngine& engine, const std::string& vault_id);

// verifies the acknowledgment, flips Pending -> Active, and emits the
// per-banknote public key with sealed oracles for A and its dual
BanknotePublicKey finalize_mint(SchemeSecretKey& sk, const AckCipher& ack, OracleRegistry& oracles);

// public quantum verification: project onto A, Fourier-transform, project
// onto the dual, transform back. Precondition failures throw before the note
// is touched; otherwise the input state is consumed and the post-measurement
// note returned.
std::pair<bool, QuantumBanknote>
qv(const BanknotePublicKey& pk, QuantumBanknote&& note, qsim::QuantumEngine& engine, Rng& rng);

// destroys the banknote by a full diagonal-basis readout; the witness of an
// honest note is a uniform element of the dual subspace
DestructionCert
gen_cert(const BanknotePublicKey& pk, QuantumBanknote&& note, qsim::QuantumEngine& engine, Rng& rng);

// certificate check: serial Active, witness nonzero and orthogonal to A.
// Side-effect free; settlement flips the registry separately.
CvResult cv(const SchemeSecretKey& sk, const DestructionCert& cert);

void settle_destroyed(SchemeSecretKey& sk, const std::string& serial);

} // namespace qvault::money
