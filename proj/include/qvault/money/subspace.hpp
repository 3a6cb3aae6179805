// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qvault/common/rng.hpp"

namespace qvault::money {

// Linear subspace of n-bit words over GF(2), stored in reduced row-echelon
// form so equal subspaces compare equal. Words use the same packing as
// amplitude indices: string position i is word bit (n-1-i).
class Subspace {
public:
    // reduces to RREF; throws if the rows are linearly dependent
    static Subspace from_rows(int n, const std::vector<uint32_t>& rows);

    // uniformly random subspace of the given rank
    static Subspace random(int n, int rank, Rng& rng);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    const std::vector<uint32_t>& rows() const { return rows_; }

    bool contains(uint32_t v) const;

    // orthogonal complement: every vector v with v.a == 0 for all a here
    Subspace dual() const;

    // all 2^rank member words, ascending
    std::vector<uint32_t> enumerate() const;

    bool operator==(const Subspace& other) const = default;

    Subspace() = default; // rank-0 placeholder for containers

private:
    Subspace(int n, std::vector<uint32_t> rows) : n_(n), rows_(std::move(rows)) {}

    int n_ = 0;
    std::vector<uint32_t> rows_;
};

// GF(2) inner product
inline int dot2(uint32_t a, uint32_t b)
{
    return __builtin_parity(a & b);
}

} // namespace qvault::money
