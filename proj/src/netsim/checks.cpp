// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/netsim/checks.hpp"

#include <map>
#include <set>

namespace qvault::netsim {

namespace {

std::string json_str(const Json& j, const char* key)
{
    return j.contains(key) ? j.at(key).get<std::string>() : std::string{};
}

} // namespace

LedgerFold fold_ledgers(const Transcript& t)
{
    LedgerFold fold;

    std::map<std::string, int64_t> active_values;
    for (const auto& [serial, entry] : t.ledgers.at("ia").at("registry").items())
        if (entry.at("status").get<std::string>() == "active")
        {
            active_values[serial] = entry.at("value").get<int64_t>();
            fold.ia_active += entry.at("value").get<int64_t>();
        }

    std::set<std::string> custody_serials;
    for (const auto& [msb, snapshot] : t.ledgers.at("msbs").items())
    {
        (void)msb;
        for (const auto& [account, serials] : snapshot.at("accounts").items())
        {
            (void)account;
            for (const auto& serial : serials)
                custody_serials.insert(serial.get<std::string>());
        }
    }
    for (const std::string& serial : custody_serials)
        if (active_values.count(serial))
            fold.custody += active_values.at(serial);

    // serials that can legitimately be issuer-active yet in no vault: a
    // logged loss, or a classical/quantum drop of the message carrying them
    std::set<std::string> explained;
    for (const Json& record : t.records)
    {
        const std::string type = record.at("type").get<std::string>();
        if (type == "loss")
            explained.insert(record.at("serial").get<std::string>());
        else if (type == "adversary" && record.at("action").get<std::string>() == "drop" &&
                 record.contains("serial"))
            explained.insert(record.at("serial").get<std::string>());
    }

    for (const auto& [serial, value] : active_values)
    {
        if (custody_serials.count(serial))
            continue;
        if (explained.count(serial))
            fold.explained_losses += value;
        else
            fold.unexplained_serials.push_back(serial);
    }
    return fold;
}

std::vector<CheckResult> run_invariant_checks(const Transcript& t)
{
    std::vector<CheckResult> results;
    auto add = [&](const std::string& name, bool pass, std::string detail = {}) {
        results.push_back({name, pass, std::move(detail)});
    };

    // --- conservation / loss accounting ---
    {
        LedgerFold fold = fold_ledgers(t);
        const bool balanced = fold.ia_active == fold.custody + fold.explained_losses &&
                              fold.unexplained_serials.empty();
        std::string detail = "ia=" + std::to_string(fold.ia_active) +
                             " custody=" + std::to_string(fold.custody) +
                             " losses=" + std::to_string(fold.explained_losses);
        if (!fold.unexplained_serials.empty())
            detail += " unexplained=" + fold.unexplained_serials.front();
        add("conservation", balanced, detail);
    }

    // --- single custody and snapshot agreement ---
    {
        bool ok = true;
        std::string detail;
        std::map<std::string, std::pair<std::string, std::string>> holder;
        for (const Json& record : t.records)
        {
            if (record.at("type").get<std::string>() != "custody")
                continue;
            const std::string serial = record.at("serial").get<std::string>();
            const std::string msb = record.at("msb").get<std::string>();
            const std::string account = record.at("account").get<std::string>();
            if (record.at("op").get<std::string>() == "credit")
            {
                if (holder.count(serial))
                {
                    ok = false;
                    detail = "serial " + serial + " credited while already held";
                    break;
                }
                holder[serial] = {msb, account};
            }
            else
            {
                auto it = holder.find(serial);
                if (it == holder.end() || it->second != std::make_pair(msb, account))
                {
                    ok = false;
                    detail = "serial " + serial + " debited by a non-holder";
                    break;
                }
                holder.erase(it);
            }
        }
        if (ok)
        {
            // replayed end state must equal the snapshot custody
            std::set<std::string> replayed;
            for (const auto& [serial, where] : holder)
            {
                (void)where;
                replayed.insert(serial);
            }
            std::set<std::string> snapshot;
            for (const auto& [msb, snap] : t.ledgers.at("msbs").items())
            {
                (void)msb;
                for (const auto& [account, serials] : snap.at("accounts").items())
                {
                    (void)account;
                    for (const auto& serial : serials)
                        snapshot.insert(serial.get<std::string>());
                }
            }
            if (replayed != snapshot)
            {
                ok = false;
                detail = "custody replay disagrees with the snapshot";
            }
        }
        add("single-custody", ok, detail);
    }

    // --- causality: sends precede their deliveries ---
    {
        bool ok = true;
        std::string detail;
        std::map<uint64_t, std::pair<uint64_t, int64_t>> sends; // delivery -> (rec, time)
        for (const Json& record : t.records)
        {
            const std::string type = record.at("type").get<std::string>();
            if (type == "send")
            {
                for (const auto& id : record.at("deliveries"))
                    sends[id.get<uint64_t>()] = {record.at("rec").get<uint64_t>(),
                                                 record.at("time").get<int64_t>()};
            }
            else if (type == "deliver")
            {
                const uint64_t id = record.at("delivery").get<uint64_t>();
                auto it = sends.find(id);
                if (it == sends.end() || it->second.first >= record.at("rec").get<uint64_t>() ||
                    it->second.second > record.at("time").get<int64_t>())
                {
                    ok = false;
                    detail = "delivery " + std::to_string(id) + " without a preceding send";
                    break;
                }
            }
        }
        add("causality", ok, detail);
    }

    // --- registry transitions are monotone ---
    {
        bool ok = true;
        std::string detail;
        auto rank = [](const std::string& status) {
            return status == "pending" ? 0 : status == "active" ? 1 : 2;
        };
        std::map<std::string, int> last;
        for (const Json& record : t.records)
        {
            if (record.at("type").get<std::string>() != "registry")
                continue;
            const std::string serial = record.at("serial").get<std::string>();
            const int next = rank(record.at("status").get<std::string>());
            auto it = last.find(serial);
            const bool fine = it == last.end() ? next == 0 : next == it->second + 1;
            if (!fine)
            {
                ok = false;
                detail = "serial " + serial + " made a non-monotone transition";
                break;
            }
            last[serial] = next;
        }
        add("registry-monotone", ok, detail);
    }

    // --- authenticity: custody credits follow activation ---
    {
        bool ok = true;
        std::string detail;
        std::set<std::string> activated;
        for (const Json& record : t.records)
        {
            const std::string type = record.at("type").get<std::string>();
            if (type == "registry" && record.at("status").get<std::string>() == "active")
                activated.insert(record.at("serial").get<std::string>());
            else if (type == "custody" && record.at("op").get<std::string>() == "credit")
            {
                const std::string serial = record.at("serial").get<std::string>();
                if (activated.count(serial) == 0)
                {
                    ok = false;
                    detail = "serial " + serial + " credited before activation";
                    break;
                }
            }
        }
        add("authenticity-chain", ok, detail);
    }

    // --- quantum non-duplication ---
    {
        bool ok = true;
        std::string detail;
        std::set<uint64_t> handles;
        std::set<uint64_t> deliveries;
        for (const Json& record : t.records)
        {
            if (record.at("type").get<std::string>() != "deliver")
                continue;
            if (!deliveries.insert(record.at("delivery").get<uint64_t>()).second)
            {
                ok = false;
                detail = "delivery id seen twice";
                break;
            }
            if (record.at("msg").contains("handle"))
            {
                const uint64_t handle = record.at("msg").at("handle").get<uint64_t>();
                if (!handles.insert(handle).second)
                {
                    ok = false;
                    detail = "quantum handle " + std::to_string(handle) + " delivered twice";
                    break;
                }
            }
        }
        add("no-cloning", ok, detail);
    }

    // --- transfers never touch the issuing authority ---
    {
        std::string ia_id;
        for (const auto& [id, role] : t.nodes.items())
            if (role.get<std::string>() == "ia")
                ia_id = id;

        std::set<std::string> transfer_corrs;
        for (const Json& record : t.records)
        {
            if (record.at("type").get<std::string>() != "action")
                continue;
            const std::string type = record.at("action").at("type").get<std::string>();
            if (type == "pay" || type == "intra-pay")
                transfer_corrs.insert(record.at("corr").get<std::string>());
        }

        bool ok = true;
        std::string detail;
        for (const Json& record : t.records)
        {
            const std::string type = record.at("type").get<std::string>();
            if (type != "send" && type != "deliver")
                continue;
            if (json_str(record, "to") == ia_id &&
                transfer_corrs.count(json_str(record, "corr")) != 0)
            {
                ok = false;
                detail = "transfer " + json_str(record, "corr") + " messaged the issuing authority";
                break;
            }
        }
        add("no-ia-in-transfers", ok, detail);
    }

    // --- confidentiality boundary: issuer-bound payload schemas ---
    {
        std::string ia_id;
        for (const auto& [id, role] : t.nodes.items())
            if (role.get<std::string>() == "ia")
                ia_id = id;

        const std::map<std::string, std::set<std::string>> allow = {
            {"MintRequest", {"value", "msb"}},
            {"AckCipher", {"serial", "vault", "tag"}},
            {"DestroyConfirmRequest", {"serial", "witness", "value", "msb"}},
        };

        bool ok = true;
        std::string detail;
        for (const Json& record : t.records)
        {
            if (record.at("type").get<std::string>() != "deliver" || json_str(record, "to") != ia_id)
                continue;
            const std::string kind = json_str(record, "kind");
            auto rule = allow.find(kind);
            if (rule == allow.end())
            {
                ok = false;
                detail = "unexpected kind " + kind + " addressed to the issuing authority";
                break;
            }
            for (const auto& [key, value] : record.at("msg").at("payload").items())
            {
                (void)value;
                if (rule->second.count(key) == 0)
                {
                    ok = false;
                    detail = "field " + key + " in " + kind + " addressed to the issuing authority";
                    break;
                }
            }
            if (!ok)
                break;
        }
        add("ia-schema", ok, detail);
    }

    return results;
}

bool all_pass(const std::vector<CheckResult>& results)
{
    for (const CheckResult& result : results)
        if (!result.pass)
            return false;
    return true;
}

} // namespace qvault::netsim
