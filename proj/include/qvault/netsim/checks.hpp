// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <string>
#include <vector>

#include "qvault/netsim/transcript.hpp"

namespace qvault::netsim {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Independent transcript folds. Each check recomputes its claim from the raw
// record stream and the summary snapshots, never from live simulation state.
//
//   conservation   issuer active value equals vault custody plus explained
//                  losses; every custody serial is issuer-active
//   single-custody custody replay never sees a serial held twice, and the
//                  replayed end state matches the snapshot
//   causality      every delivery's send record precedes it
//   registry       status transitions only pending->active->destroyed
//   authenticity   custody credits only for serials already activated
//   no-cloning     each quantum handle id delivered at most once
//   no-ia-transfer transfers never message the issuing authority
//   ia-schema      issuer-bound payloads carry no wallet or account fields
std::vector<CheckResult> run_invariant_checks(const Transcript& transcript);

bool all_pass(const std::vector<CheckResult>& results);

// ia_active - custody - explained_losses, recomputed from the transcript
struct LedgerFold {
    int64_t ia_active = 0;
    int64_t custody = 0;
    int64_t explained_losses = 0;
    std::vector<std::string> unexplained_serials;
};

LedgerFold fold_ledgers(const Transcript& transcript);

} // namespace qvault::netsim
