// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qvault/common/errors.hpp"
#include "qvault/common/rng.hpp"
#include "qvault/money/subspace.hpp"

using namespace qvault;
using namespace qvault::money;

namespace {

// independent oracle: XOR closure of the generators
std::set<uint32_t> closure(const std::vector<uint32_t>& rows)
{
    std::set<uint32_t> members = {0};
    for (uint32_t r : rows)
    {
        std::set<uint32_t> next = members;
        for (uint32_t m : members)
            next.insert(m ^ r);
        members = next;
    }
    return members;
}

} // namespace

TEST_CASE("different bases of the same span reduce to the same RREF")
{
    auto a = Subspace::from_rows(4, {0b1100, 0b0110});
    auto b = Subspace::from_rows(4, {0b1010, 0b0110});
    CHECK(a == b);
    CHECK(a.rank() == 2);

    auto c = Subspace::from_rows(4, {0b1000, 0b0100});
    CHECK(!(a == c));
}

TEST_CASE("dependent generators are rejected")
{
    CHECK_THROWS_AS(Subspace::from_rows(4, {0b1100, 0b0110, 0b1010}), Error);
    CHECK_THROWS_AS(Subspace::from_rows(4, {0b0000}), Error);
    CHECK_THROWS_AS(Subspace::from_rows(3, {0b1000}), DimensionError);
}

TEST_CASE("membership and enumeration agree with the brute-force closure")
{
    Rng rng(101);
    for (int rep = 0; rep < 60; ++rep)
    {
        const int n = 4 + 2 * static_cast<int>(rng.below(3));
        auto space = Subspace::random(n, n / 2, rng);
        auto oracle = closure(space.rows());
        auto members = space.enumerate();

        CHECK(members.size() == oracle.size());
        CHECK(members.size() == (size_t{1} << (n / 2)));
        CHECK(std::set<uint32_t>(members.begin(), members.end()) == oracle);

        for (uint32_t w = 0; w < (uint32_t{1} << n); ++w)
            CHECK(space.contains(w) == (oracle.count(w) != 0));
    }
}

TEST_CASE("duality: involution, dimension product and orthogonality")
{
    Rng rng(103);
    for (int rep = 0; rep < 100; ++rep)
    {
        const int n = 4 + 2 * static_cast<int>(rng.below(3));
        auto space = Subspace::random(n, n / 2, rng);
        auto dual = space.dual();

        CHECK(dual.dual() == space);
        CHECK(space.enumerate().size() * dual.enumerate().size() == (size_t{1} << n));

        for (uint32_t a : space.enumerate())
            for (uint32_t b : dual.enumerate())
                CHECK(dot2(a, b) == 0);
    }
}

TEST_CASE("random subspaces have the requested rank")
{
    Rng rng(107);
    for (int rank = 1; rank <= 4; ++rank)
    {
        auto space = Subspace::random(8, rank, rng);
        CHECK(space.rank() == rank);
        CHECK(space.n() == 8);
    }
    CHECK_THROWS_AS(Subspace::random(4, 5, rng), DimensionError);
}
