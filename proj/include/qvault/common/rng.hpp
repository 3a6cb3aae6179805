// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace qvault {

inline uint64_t splitmix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Single named, seedable randomness source. Every Born-rule sample and every
// protocol-level coin in one simulation draws from one instance, which is what
// makes transcripts byte-reproducible. `fork` derives an independent stream
// from the original seed, so trial-parallel experiments stay reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() { return gen_(); }

    // uniform double in [0, 1), 53 bits of entropy
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    int bit() { return static_cast<int>(next_u64() >> 63); }

    uint64_t below(uint64_t bound)
    {
        // modulo bias is irrelevant at simulation scale
        return bound == 0 ? 0 : next_u64() % bound;
    }

    double gaussian()
    {
        // Box-Muller; one draw per call keeps the stream layout obvious
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300)
            u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // index sampled proportionally to non-negative weights
    size_t sample(const std::vector<double>& weights)
    {
        double total = 0;
        for (double w : weights)
            total += w;
        double u = uniform() * total;
        double acc = 0;
        for (size_t i = 0; i < weights.size(); ++i)
        {
            acc += weights[i];
            if (u < acc)
                return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

    Rng fork(uint64_t stream) const
    {
        return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x51ed2701)));
    }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace qvault
