// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds at its pinned tolerance. Also reachable through the CLI as
// `qvault verify-acceptance`.

#include <cstdlib>
#include <iostream>
#include <string>

#include "qvault/acceptance.hpp"

int main(int argc, char** argv)
{
    uint64_t seed = 42;
    if (argc > 1)
        seed = std::stoull(argv[1]);

    std::cout << "seed: " << seed << "\n";
    const auto results = qvault::acceptance::run_all(seed);
    qvault::acceptance::print_table(std::cout, results);
    const bool ok = qvault::acceptance::all_pass(results);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
