// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/money/scheme.hpp"

#include "qvault/common/errors.hpp"
#include "qvault/qsim/distribution.hpp"

namespace qvault::money {

namespace {

MacKey key_from_secret(const std::string& secret)
{
    return MacKey{siphash24(MacKey{0x7176617565737431ULL, 0x6b65793030303031ULL}, secret),
                  siphash24(MacKey{0x7176617565737432ULL, 0x6b65793030303032ULL}, secret)};
}

std::string ack_tag(const std::string& ack_secret, const std::string& serial, const std::string& vault_id)
{
    return mac_tag_hex(key_from_secret(ack_secret), serial + "|" + vault_id);
}

} // namespace

std::string instruction_digest(const MintInstruction& instr)
{
    std::string msg = instr.serial + "|" + std::to_string(instr.value);
    for (uint32_t row : instr.basis.rows())
        msg += "|" + qsim::bits_to_string(row, instr.basis.n());
    return mac_tag_hex(key_from_secret(instr.ack_secret), msg);
}

void validate_params(const SchemeParams& params)
{
    if (params.qubits < 4 || params.qubits > qsim::QuantumEngine::kDefaultMaxQubits)
        throw Error("SchemeParams: qubit count out of range");
    if (params.qubits % 2 != 0)
        throw Error("SchemeParams: qubit count must be even");
}

std::string to_string(NoteStatus s)
{
    switch (s)
    {
    case NoteStatus::Pending:
        return "pending";
    case NoteStatus::Active:
        return "active";
    default:
        return "destroyed";
    }
}

std::string to_string(CvResult::Reason r)
{
    switch (r)
    {
    case CvResult::Reason::Ok:
        return "ok";
    case CvResult::Reason::UnknownSerial:
        return "unknown-serial";
    case CvResult::Reason::NotActive:
        return "not-active";
    case CvResult::Reason::Spent:
        return "spent";
    case CvResult::Reason::ZeroWitness:
        return "zero-witness";
    default:
        return "not-in-dual";
    }
}

Json to_json(const ClassicalBanknote& note)
{
    Json rows = Json::array();
    for (uint32_t r : note.secret.rows())
        rows.push_back(qsim::bits_to_string(r, note.secret.n()));
    Json j;
    j["serial"] = note.serial;
    j["value"] = note.value;
    j["status"] = to_string(note.status);
    j["secret"] = std::move(rows);
    j["tag"] = note.tag;
    return j;
}

ClassicalBanknote banknote_from_json(const Json& j)
{
    ClassicalBanknote note;
    note.serial = j.at("serial").get<std::string>();
    note.value = j.at("value").get<int64_t>();
    const std::string status = j.at("status").get<std::string>();
    note.status = status == "pending"  ? NoteStatus::Pending
                  : status == "active" ? NoteStatus::Active
                                       : NoteStatus::Destroyed;
    std::vector<uint32_t> rows;
    int n = 0;
    for (const auto& row : j.at("secret"))
    {
        const std::string text = row.get<std::string>();
        n = static_cast<int>(text.size());
        rows.push_back(qsim::bits_from_string(text));
    }
    if (!rows.empty())
        note.secret = Subspace::from_rows(n, rows);
    note.tag = j.at("tag").get<std::string>();
    return note;
}

OracleRef OracleRegistry::seal(const Subspace& space)
{
    auto oracle = OracleRef(new MembershipOracle(next_++, space));
    table_[oracle->capability()] = oracle;
    return oracle;
}

OracleRef OracleRegistry::resolve(uint64_t capability) const
{
    auto it = table_.find(capability);
    if (it == table_.end())
        throw Error("OracleRegistry: unknown capability");
    return it->second;
}

Json to_json(const BanknotePublicKey& pk)
{
    Json j;
    j["serial"] = pk.serial;
    j["value"] = pk.value;
    j["oracle_a"] = pk.oracle_a ? pk.oracle_a->capability() : 0;
    j["oracle_adual"] = pk.oracle_adual ? pk.oracle_adual->capability() : 0;
    j["ia_tag"] = pk.ia_tag;
    return j;
}

BanknotePublicKey pk_from_json(const Json& j, const OracleRegistry& oracles)
{
    BanknotePublicKey pk;
    pk.serial = j.at("serial").get<std::string>();
    pk.value = j.at("value").get<int64_t>();
    pk.oracle_a = oracles.resolve(j.at("oracle_a").get<uint64_t>());
    pk.oracle_adual = oracles.resolve(j.at("oracle_adual").get<uint64_t>());
    pk.ia_tag = j.at("ia_tag").get<std::string>();
    return pk;
}

Json to_json(const DestructionCert& cert)
{
    Json j;
    j["serial"] = cert.serial;
    j["witness"] = qsim::bits_to_string(cert.witness, cert.qubits);
    return j;
}

DestructionCert cert_from_json(const Json& j)
{
    DestructionCert cert;
    cert.serial = j.at("serial").get<std::string>();
    const std::string witness = j.at("witness").get<std::string>();
    cert.qubits = static_cast<int>(witness.size());
    cert.witness = qsim::bits_from_string(witness);
    return cert;
}

Json to_json(const AckCipher& ack)
{
    Json j;
    j["serial"] = ack.serial;
    j["vault"] = ack.vault_id;
    j["tag"] = ack.tag;
    return j;
}

AckCipher ack_from_json(const Json& j)
{
    return AckCipher{j.at("serial").get<std::string>(), j.at("vault").get<std::string>(),
                     j.at("tag").get<std::string>()};
}

const ClassicalBanknote& SchemeSecretKey::note(const std::string& serial) const
{
    auto it = registry_.find(serial);
    if (it == registry_.end())
        throw RegistryError("unknown serial " + serial);
    return it->second;
}

int64_t SchemeSecretKey::total_active_value() const
{
    int64_t total = 0;
    for (const auto& [serial, note] : registry_)
        if (note.status == NoteStatus::Active)
            total += note.value;
    return total;
}

std::pair<SchemePublicKey, SchemeSecretKey> gen(const SchemeParams& params, Rng& rng)
{
    validate_params(params);
    SchemeSecretKey sk;
    sk.params_ = params;
    sk.mac_ = MacKey{rng.next_u64(), rng.next_u64()};
    sk.scheme_id_ = "scheme-" + hex_u64(rng.next_u64());
    return {SchemePublicKey{sk.scheme_id_}, std::move(sk)};
}

std::pair<ClassicalBanknote, MintInstruction> bank_mint(SchemeSecretKey& sk, int64_t value, Rng& rng)
{
    if (value <= 0)
        throw Error("bank_mint: value must be positive");

    std::string serial = "sn-" + hex_u64(rng.next_u64());
    while (sk.registry_.count(serial) != 0)
        serial = "sn-" + hex_u64(rng.next_u64());

    const int n = sk.params_.qubits;
    ClassicalBanknote note;
    note.serial = serial;
    note.value = value;
    note.status = NoteStatus::Pending;
    note.secret = Subspace::random(n, n / 2, rng);
    note.tag = mac_tag_hex(sk.mac_, "note|" + serial + "|" + std::to_string(value));
    note.ack_secret = "ck-" + hex_u64(rng.next_u64()) + hex_u64(rng.next_u64());

    MintInstruction instr;
    instr.serial = serial;
    instr.value = value;
    instr.basis = note.secret;
    instr.ack_secret = note.ack_secret;
    instr.digest = instruction_digest(instr);

    sk.registry_.emplace(serial, note);
    return {std::move(note), std::move(instr)};
}

std::pair<QuantumBanknote, AckCipher>
rec_mint(MintInstruction instruction, qsim::QuantumEngine& engine, const std::string& vault_id)
{
    if (instruction.digest != instruction_digest(instruction))
        throw AuthenticationError("rec_mint: tampered mint instruction");
    const int n = instruction.basis.n();
    if (n < 4 || n % 2 != 0 || instruction.basis.rank() != n / 2)
        throw Error("rec_mint: malformed basis (rank must be n/2)");

    auto state = engine.prepare_superposition(n, instruction.basis.enumerate());
    AckCipher ack{instruction.serial, vault_id,
                  ack_tag(instruction.ack_secret, instruction.serial, vault_id)};
    QuantumBanknote note{instruction.serial, instruction.value, std::move(state)};
    return {std::move(note), std::move(ack)};
}

BanknotePublicKey finalize_mint(SchemeSecretKey& sk, const AckCipher& ack, OracleRegistry& oracles)
{
    auto it = sk.registry_.find(ack.serial);
    if (it == sk.registry_.end())
        throw RegistryError("finalize_mint: unknown serial " + ack.serial);
    ClassicalBanknote& note = it->second;
    if (note.status != NoteStatus::Pending)
        throw RegistryError("finalize_mint: serial already finalized (replay)");
    if (ack.tag != ack_tag(note.ack_secret, ack.serial, ack.vault_id))
        throw AuthenticationError("finalize_mint: acknowledgment does not authenticate");

    note.status = NoteStatus::Active;

    BanknotePublicKey pk;
    pk.serial = note.serial;
    pk.value = note.value;
    pk.oracle_a = oracles.seal(note.secret);
    pk.oracle_adual = oracles.seal(note.secret.dual());
    pk.ia_tag = note.tag;
    return pk;
}

std::pair<bool, QuantumBanknote>
qv(const BanknotePublicKey& pk, QuantumBanknote&& note, qsim::QuantumEngine& engine, Rng& rng)
{
    if (pk.serial != note.serial)
        throw Error("qv: serial mismatch");
    if (!note.state.live())
        throw ConsumedStateError("qv: banknote state already consumed");
    const OracleRef a = pk.oracle_a;
    const OracleRef adual = pk.oracle_adual;

    QuantumBanknote out{note.serial, note.value, std::move(note.state)};
    auto [in_a, h1] = engine.project_predicate(
        std::move(out.state), [a](uint32_t w) { return a->contains(w); }, rng);
    if (!in_a)
    {
        out.state = std::move(h1);
        return {false, std::move(out)};
    }

    auto h2 = engine.hadamard_all(std::move(h1));
    auto [in_dual, h3] = engine.project_predicate(
        std::move(h2), [adual](uint32_t w) { return adual->contains(w); }, rng);
    out.state = engine.hadamard_all(std::move(h3));
    return {in_dual, std::move(out)};
}

DestructionCert
gen_cert(const BanknotePublicKey& pk, QuantumBanknote&& note, qsim::QuantumEngine& engine, Rng& rng)
{
    if (pk.serial != note.serial)
        throw Error("gen_cert: serial mismatch");
    if (!note.state.live())
        throw ConsumedStateError("gen_cert: banknote state already consumed");
    const int n = note.state.qubits();
    const auto bits =
        engine.measure_all(std::move(note.state), qsim::uniform_bases(n, qsim::Basis::Diagonal), rng);
    uint32_t witness = 0;
    for (int q = 0; q < n; ++q)
        witness |= static_cast<uint32_t>(bits[static_cast<size_t>(q)]) << (n - 1 - q);
    return DestructionCert{pk.serial, n, witness};
}

CvResult cv(const SchemeSecretKey& sk, const DestructionCert& cert)
{
    auto it = sk.registry().find(cert.serial);
    if (it == sk.registry().end())
        return {false, CvResult::Reason::UnknownSerial};
    const ClassicalBanknote& note = it->second;
    if (note.status == NoteStatus::Destroyed)
        return {false, CvResult::Reason::Spent};
    if (note.status != NoteStatus::Active)
        return {false, CvResult::Reason::NotActive};
    if (cert.qubits != note.secret.n())
        return {false, CvResult::Reason::NotInDual};
    if (cert.witness == 0)
        return {false, CvResult::Reason::ZeroWitness};
    for (uint32_t row : note.secret.rows())
        if (dot2(cert.witness, row) != 0)
            return {false, CvResult::Reason::NotInDual};
    return {true, CvResult::Reason::Ok};
}

void settle_destroyed(SchemeSecretKey& sk, const std::string& serial)
{
    auto it = sk.registry_.find(serial);
    if (it == sk.registry_.end())
        throw RegistryError("settle_destroyed: unknown serial " + serial);
    if (it->second.status != NoteStatus::Active)
        throw RegistryError("settle_destroyed: serial is not active");
    it->second.status = NoteStatus::Destroyed;
}

} // namespace qvault::money
