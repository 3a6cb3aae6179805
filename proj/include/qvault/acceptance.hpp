// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qvault/common/rng.hpp"
#include "qvault/netsim/scenario.hpp"

namespace qvault::acceptance {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

// Runs the ten acceptance criteria end to end at their pinned tolerances.
// Every threshold is fixed here in code; the seed only moves the sampled
// randomness, never the goalposts.
std::vector<CriterionResult> run_all(uint64_t seed);

bool all_pass(const std::vector<CriterionResult>& results);

// one line per criterion: PASS/FAIL, name, runtime, measurement detail
void print_table(std::ostream& out, const std::vector<CriterionResult>& results);

// randomized workload over the reference topology: a mint phase followed by
// a mix of transfers, intra-vault moves, online payments and deliberate
// double spends; at most max_actions actions
netsim::ScenarioScript random_scenario(Rng& rng, int max_actions, bool pure_transfer);

} // namespace qvault::acceptance
