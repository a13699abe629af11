// Copyright 2026 The vermat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Keccak-f[1600] sponge, enough for SHAKE-128 (challenge derivation,
// container digests) and SHA3-256 (known-answer test).  Round constants and
// rotation offsets are generated from the defining LFSR/recurrence rather
// than transcribed.

#include <array>
#include <cstdint>
#include <cstring>
#include <span>

#include "vermat/common.hpp"

namespace vermat {

namespace keccak_detail {

struct Tables {
    std::array<uint64_t, 24> rc{};
    std::array<int, 25> rot{};  // rot[x + 5y]
};

inline Tables make_tables() {
    Tables t;
    // Round constants from the degree-8 LFSR x^8+x^6+x^5+x^4+1.
    uint8_t R = 1;
    auto rc_bit = [&]() -> int {
        int out = R & 1;
        R = uint8_t((R << 1) ^ ((R >> 7) * 0x71));
        return out;
    };
    for (int ir = 0; ir < 24; ++ir) {
        uint64_t c = 0;
        for (int j = 0; j <= 6; ++j) {
            if (rc_bit()) c |= uint64_t(1) << ((1u << j) - 1);
        }
        t.rc[ir] = c;
    }
    // Rotation offsets: walk (x,y) = (1,0) -> (y, 2x+3y) for t = 0..23.
    t.rot[0] = 0;
    int x = 1, y = 0;
    for (int i = 0; i < 24; ++i) {
        t.rot[x + 5 * y] = ((i + 1) * (i + 2) / 2) % 64;
        int nx = y, ny = (2 * x + 3 * y) % 5;
        x = nx;
        y = ny;
    }
    return t;
}

inline const Tables& tables() {
    static const Tables t = make_tables();
    return t;
}

inline uint64_t rotl(uint64_t v, int s) {
    return s == 0 ? v : (v << s) | (v >> (64 - s));
}

inline void permute(uint64_t st[25]) {
    const Tables& tb = tables();
    uint64_t bc[5], tmp[25];
    for (int round = 0; round < 24; ++round) {
        // theta
        for (int i = 0; i < 5; ++i)
            bc[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
        for (int i = 0; i < 5; ++i) {
            uint64_t d = bc[(i + 4) % 5] ^ rotl(bc[(i + 1) % 5], 1);
            for (int j = 0; j < 25; j += 5) st[i + j] ^= d;
        }
        // rho + pi
        for (int ix = 0; ix < 5; ++ix)
            for (int iy = 0; iy < 5; ++iy)
                tmp[iy + 5 * ((2 * ix + 3 * iy) % 5)] =
                    rotl(st[ix + 5 * iy], tb.rot[ix + 5 * iy]);
        // chi
        for (int j = 0; j < 25; j += 5) {
            for (int i = 0; i < 5; ++i) bc[i] = tmp[j + i];
            for (int i = 0; i < 5; ++i)
                st[j + i] = bc[i] ^ (~bc[(i + 1) % 5] & bc[(i + 2) % 5]);
        }
        // iota
        st[0] ^= tb.rc[round];
    }
}

}  // namespace keccak_detail

// Generic Keccak sponge.  SHAKE-128: rate 168, suffix 0x1f.
// SHA3-256: rate 136, suffix 0x06.
class KeccakSponge {
public:
    KeccakSponge(size_t rate_bytes, uint8_t suffix)
        : rate_(rate_bytes), suffix_(suffix) {
        std::memset(st_, 0, sizeof(st_));
    }

    void absorb(std::span<const uint8_t> data) {
        for (uint8_t b : data) {
            buf(pos_) ^= b;
            if (++pos_ == rate_) {
                keccak_detail::permute(st_);
                pos_ = 0;
            }
        }
    }
    void absorb(const bytes& data) { absorb(std::span<const uint8_t>(data)); }

    // One-way switch from absorbing to squeezing.
    void finalize() {
        buf(pos_) ^= suffix_;
        buf(rate_ - 1) ^= 0x80;
        keccak_detail::permute(st_);
        pos_ = 0;
        squeezing_ = true;
    }

    void squeeze(uint8_t* out, size_t n) {
        if (!squeezing_) finalize();
        for (size_t i = 0; i < n; ++i) {
            if (pos_ == rate_) {
                keccak_detail::permute(st_);
                pos_ = 0;
            }
            out[i] = buf(pos_++);
        }
    }

    bytes squeeze(size_t n) {
        bytes out(n);
        squeeze(out.data(), n);
        return out;
    }

private:
    uint8_t& buf(size_t i) { return reinterpret_cast<uint8_t*>(st_)[i]; }
    uint64_t st_[25];
    size_t rate_;
    uint8_t suffix_;
    size_t pos_ = 0;
    bool squeezing_ = false;
};

class Shake128 : public KeccakSponge {
public:
    Shake128() : KeccakSponge(168, 0x1f) {}
};

inline bytes shake128(std::span<const uint8_t> data, size_t outlen) {
    Shake128 s;
    s.absorb(data);
    return s.squeeze(outlen);
}

inline std::array<uint8_t, 32> sha3_256(std::span<const uint8_t> data) {
    KeccakSponge s(136, 0x06);
    s.absorb(data);
    std::array<uint8_t, 32> out{};
    s.squeeze(out.data(), out.size());
    return out;
}

}  // namespace vermat
