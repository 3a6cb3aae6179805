// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qvault {

struct MacKey {
    uint64_t k0 = 0;
    uint64_t k1 = 0;
};

// SipHash-2-4. Used as the shared-key authentication tag for banknote records
// and acknowledgment ciphertexts; the simulation's trust level only needs
// tamper evidence, not a production MAC deployment.
inline uint64_t siphash24(MacKey key, std::string_view data)
{
    auto rotl = [](uint64_t x, int b) { return (x << b) | (x >> (64 - b)); };

    uint64_t v0 = 0x736f6d6570736575ULL ^ key.k0;
    uint64_t v1 = 0x646f72616e646f6dULL ^ key.k1;
    uint64_t v2 = 0x6c7967656e657261ULL ^ key.k0;
    uint64_t v3 = 0x7465646279746573ULL ^ key.k1;

    auto round = [&]() {
        v0 += v1;
        v1 = rotl(v1, 13);
        v1 ^= v0;
        v0 = rotl(v0, 32);
        v2 += v3;
        v3 = rotl(v3, 16);
        v3 ^= v2;
        v0 += v3;
        v3 = rotl(v3, 21);
        v3 ^= v0;
        v2 += v1;
        v1 = rotl(v1, 17);
        v1 ^= v2;
        v2 = rotl(v2, 32);
    };

    const size_t n = data.size();
    const size_t end = n - (n % 8);
    size_t i = 0;
    for (; i < end; i += 8)
    {
        uint64_t m = 0;
        for (int b = 0; b < 8; ++b)
            m |= static_cast<uint64_t>(static_cast<unsigned char>(data[i + b])) << (8 * b);
        v3 ^= m;
        round();
        round();
        v0 ^= m;
    }

    uint64_t last = static_cast<uint64_t>(n) << 56;
    for (size_t b = 0; i + b < n; ++b)
        last |= static_cast<uint64_t>(static_cast<unsigned char>(data[i + b])) << (8 * b);
    v3 ^= last;
    round();
    round();
    v0 ^= last;

    v2 ^= 0xff;
    round();
    round();
    round();
    round();
    return v0 ^ v1 ^ v2 ^ v3;
}

inline std::string mac_tag_hex(MacKey key, std::string_view data)
{
    static const char* digits = "0123456789abcdef";
    uint64_t h = siphash24(key, data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i)
    {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline std::string hex_u64(uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i)
    {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace qvault
