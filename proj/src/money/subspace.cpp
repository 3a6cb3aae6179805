// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/money/subspace.hpp"

#include <algorithm>

#include "qvault/common/errors.hpp"

namespace qvault::money {

namespace {

// Gauss-Jordan over GF(2); returns rows sorted by pivot, pivot columns
// cleared everywhere else. Zero rows vanish.
std::vector<uint32_t> rref(int n, std::vector<uint32_t> rows)
{
    std::vector<uint32_t> out;
    for (int bit = n - 1; bit >= 0; --bit)
    {
        size_t found = rows.size();
        for (size_t i = 0; i < rows.size(); ++i)
            if ((rows[i] >> bit) & 1u)
            {
                found = i;
                break;
            }
        if (found == rows.size())
            continue;
        const uint32_t pivot = rows[found];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(found));
        for (uint32_t& r : rows)
            if ((r >> bit) & 1u)
                r ^= pivot;
        for (uint32_t& r : out)
            if ((r >> bit) & 1u)
                r ^= pivot;
        out.push_back(pivot);
    }
    return out;
}

} // namespace

Subspace Subspace::from_rows(int n, const std::vector<uint32_t>& rows)
{
    if (n < 1 || n > 26)
        throw DimensionError("Subspace: word width out of range");
    for (uint32_t r : rows)
        if (n < 32 && (r >> n) != 0)
            throw DimensionError("Subspace: row wider than n bits");
    std::vector<uint32_t> reduced = rref(n, rows);
    if (reduced.size() != rows.size())
        throw Error("Subspace: rows are linearly dependent");
    return Subspace(n, std::move(reduced));
}

Subspace Subspace::random(int n, int rank, Rng& rng)
{
    if (rank < 0 || rank > n)
        throw DimensionError("Subspace: rank out of range");
    if (rank == 0)
        return Subspace(n, {});
    const uint32_t mask = n == 32 ? ~0u : ((uint32_t{1} << n) - 1);
    for (;;)
    {
        std::vector<uint32_t> rows(static_cast<size_t>(rank));
        for (uint32_t& r : rows)
            r = static_cast<uint32_t>(rng.next_u64()) & mask;
        std::vector<uint32_t> reduced = rref(n, rows);
        if (static_cast<int>(reduced.size()) == rank)
            return Subspace(n, std::move(reduced));
    }
}

bool Subspace::contains(uint32_t v) const
{
    for (uint32_t row : rows_)
    {
        const int pivot = 31 - __builtin_clz(row);
        if ((v >> pivot) & 1u)
            v ^= row;
    }
    return v == 0;
}

Subspace Subspace::dual() const
{
    uint32_t pivot_mask = 0;
    for (uint32_t row : rows_)
        pivot_mask |= uint32_t{1} << (31 - __builtin_clz(row));

    std::vector<uint32_t> null_rows;
    for (int f = 0; f < n_; ++f)
    {
        if ((pivot_mask >> f) & 1u)
            continue;
        uint32_t v = uint32_t{1} << f;
        for (uint32_t row : rows_)
        {
            const int pivot = 31 - __builtin_clz(row);
            if ((row >> f) & 1u)
                v |= uint32_t{1} << pivot;
        }
        null_rows.push_back(v);
    }
    return from_rows(n_, null_rows);
}

std::vector<uint32_t> Subspace::enumerate() const
{
    const size_t count = size_t{1} << rows_.size();
    std::vector<uint32_t> members;
    members.reserve(count);
    for (size_t m = 0; m < count; ++m)
    {
        uint32_t v = 0;
        for (size_t b = 0; b < rows_.size(); ++b)
            if ((m >> b) & 1u)
                v ^= rows_[b];
        members.push_back(v);
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace qvault::money
