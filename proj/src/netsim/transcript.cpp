// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/netsim/transcript.hpp"

#include <sstream>

#include "qvault/common/errors.hpp"

namespace qvault::netsim {

Json Transcript::summary() const
{
    Json receipts_json = Json::array();
    for (const vault::Receipt& receipt : receipts)
        receipts_json.push_back(vault::to_json(receipt));

    Json s;
    s["config_digest"] = config_digest;
    s["seed"] = seed;
    s["quiescent"] = quiescent;
    s["final_tick"] = final_tick;
    s["nodes"] = nodes;
    s["receipts"] = std::move(receipts_json);
    s["ledgers"] = ledgers;
    Json j;
    j["summary"] = std::move(s);
    return j;
}

std::string Transcript::to_jsonl() const
{
    std::ostringstream out;
    for (const Json& record : records)
        out << record.dump() << "\n";
    out << summary().dump() << "\n";
    return out.str();
}

Transcript Transcript::from_jsonl(const std::string& text)
{
    Transcript t;
    std::istringstream in(text);
    std::string line;
    bool have_summary = false;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        Json j = Json::parse(line);
        if (j.contains("summary"))
        {
            const Json& s = j.at("summary");
            t.config_digest = s.at("config_digest").get<std::string>();
            t.seed = s.at("seed").get<uint64_t>();
            t.quiescent = s.at("quiescent").get<bool>();
            t.final_tick = s.at("final_tick").get<int64_t>();
            t.nodes = s.at("nodes");
            t.ledgers = s.at("ledgers");
            for (const Json& receipt : s.at("receipts"))
                t.receipts.push_back(vault::receipt_from_json(receipt));
            have_summary = true;
        }
        else
        {
            t.records.push_back(std::move(j));
        }
    }
    if (!have_summary)
        throw Error("transcript stream has no summary line");
    return t;
}

} // namespace qvault::netsim
