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

// Fixed 4x64-limb Montgomery arithmetic for the two 256-bit prime moduli of
// the bn256 curve (base field p and group order r).  The curve is the
// Barreto-Naehrig curve with seed u = 1868033^3:
//   p = 36u^4 + 36u^3 + 24u^2 + 6u + 1   (256 bits, p = 3 mod 4)
//   r = 36u^4 + 36u^3 + 18u^2 + 6u + 1   (= #E(F_p), prime)
// All derived constants below are pinned by tests that recompute them from
// the seed with an independent bignum library.

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "vermat/common.hpp"

namespace vermat::bn256 {

inline constexpr uint64_t kBnSeedV = 1868033;
// u = v^3
inline constexpr uint64_t kBnU = 6518589491078791937ull;
// 6u + 2, the optimal-ate loop count (66 bits).
inline constexpr uint64_t kAteLoop[2] = {0x1ec817a18a131208ull, 0x2ull};

struct PParams {  // base field p
    static constexpr uint64_t kMod[4] = {0x185cac6c5e089667ull, 0xee5b88d120b5b59eull,
                                         0xaa6fecb86184dc21ull, 0x8fb501e34aa387f9ull};
    static constexpr uint64_t kR1[4] = {0xe7a35393a1f76999ull, 0x11a4772edf4a4a61ull,
                                        0x559013479e7b23deull, 0x704afe1cb55c7806ull};
    static constexpr uint64_t kR2[4] = {0x9c21c3ff7e444f56ull, 0x409ed151b2efb0c2ull,
                                        0x0c6dc37b80fb1651ull, 0x7c36e0e62c2380b7ull};
    static constexpr uint64_t kN0 = 0x2387f9007f17daa9ull;
    static constexpr const char* kDec =
        "65000549695646603732796438742359905742825358107623003571877145026864184071783";
};

struct RParams {  // group order r
    static constexpr uint64_t kMod[4] = {0x1a2ef45b57ac7261ull, 0x2e8d8e12f82b3924ull,
                                         0xaa6fecb86184dc21ull, 0x8fb501e34aa387f9ull};
    static constexpr uint64_t kR1[4] = {0xe5d10ba4a8538d9full, 0xd17271ed07d4c6dbull,
                                        0x559013479e7b23deull, 0x704afe1cb55c7806ull};
    static constexpr uint64_t kR2[4] = {0xb5f030132affbc35ull, 0x85a1f7da0792e95dull,
                                        0x26841e5fa6ee4895ull, 0x3d8f6c73765aefd5ull};
    static constexpr uint64_t kN0 = 0x056417b72d284e5full;
    static constexpr const char* kDec =
        "65000549695646603732796438742359905742570406053903786389881062969044166799969";
};

using Limbs4 = std::array<uint64_t, 4>;

// a -= b, returns borrow.
inline uint64_t sub4(uint64_t a[4], const uint64_t b[4]) {
    unsigned __int128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 cur =
            (unsigned __int128)a[i] - b[i] - (uint64_t)borrow;
        a[i] = (uint64_t)cur;
        borrow = (cur >> 64) & 1;  // 1 if wrapped
    }
    return (uint64_t)borrow;
}

inline bool geq4(const uint64_t a[4], const uint64_t b[4]) {
    for (int i = 3; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return true;
}

// In-place divide by a small divisor, returns remainder.
inline uint64_t div4_small(uint64_t a[4], uint64_t d) {
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; --i) {
        unsigned __int128 cur = (rem << 64) | a[i];
        a[i] = (uint64_t)(cur / d);
        rem = cur % d;
    }
    return (uint64_t)rem;
}

template <class P>
class Monty {
public:
    uint64_t l[4];  // Montgomery residue a * 2^256 mod p

    static Monty zero() { return Monty{{0, 0, 0, 0}}; }
    static Monty one() {
        return Monty{{P::kR1[0], P::kR1[1], P::kR1[2], P::kR1[3]}};
    }

    static Monty from_u64(uint64_t v) {
        Monty a{{v, 0, 0, 0}};
        return a * r2();
    }

    // Canonical (non-Montgomery) limbs, value must be < modulus.
    static Monty from_canonical(const Limbs4& c) {
        if (!less_than_mod(c.data())) throw param_error("value >= field modulus");
        Monty a{{c[0], c[1], c[2], c[3]}};
        return a * r2();
    }

    Limbs4 to_canonical() const {
        // Montgomery reduce once more: a * R * R^{-1} = a.
        Monty one_{{1, 0, 0, 0}};
        Monty red = *this * one_;
        return {red.l[0], red.l[1], red.l[2], red.l[3]};
    }

    static bool less_than_mod(const uint64_t c[4]) { return !geq4(c, P::kMod); }

    bool is_zero() const { return (l[0] | l[1] | l[2] | l[3]) == 0; }

    bool operator==(const Monty& o) const {
        return l[0] == o.l[0] && l[1] == o.l[1] && l[2] == o.l[2] && l[3] == o.l[3];
    }

    Monty operator+(const Monty& o) const {
        Monty r;
        unsigned __int128 carry = 0;
        for (int i = 0; i < 4; ++i) {
            unsigned __int128 cur = (unsigned __int128)l[i] + o.l[i] + (uint64_t)carry;
            r.l[i] = (uint64_t)cur;
            carry = cur >> 64;
        }
        if (carry || geq4(r.l, P::kMod)) sub4(r.l, P::kMod);
        return r;
    }

    Monty operator-(const Monty& o) const {
        Monty r = *this;
        if (sub4(r.l, o.l)) {
            unsigned __int128 carry = 0;
            for (int i = 0; i < 4; ++i) {
                unsigned __int128 cur =
                    (unsigned __int128)r.l[i] + P::kMod[i] + (uint64_t)carry;
                r.l[i] = (uint64_t)cur;
                carry = cur >> 64;
            }
        }
        return r;
    }

    Monty neg() const {
        if (is_zero()) return *this;
        Monty r{{P::kMod[0], P::kMod[1], P::kMod[2], P::kMod[3]}};
        sub4(r.l, l);
        return r;
    }

    Monty dbl() const { return *this + *this; }

    // CIOS Montgomery multiplication, fully unrolled over the four limbs.
    Monty operator*(const Monty& o) const {
        using u128 = unsigned __int128;
        uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0, t4 = 0;
        const uint64_t b0 = o.l[0], b1 = o.l[1], b2 = o.l[2], b3 = o.l[3];
#define VERMAT_CIOS_ROUND(ai)                                         \
    {                                                                 \
        const uint64_t a = (ai);                                      \
        u128 cur = (u128)a * b0 + t0;                                 \
        uint64_t m = (uint64_t)cur * P::kN0;                          \
        u128 red = (u128)m * P::kMod[0] + (uint64_t)cur;              \
        uint64_t carry = (uint64_t)(cur >> 64), rc = (uint64_t)(red >> 64); \
        cur = (u128)a * b1 + t1 + carry;                              \
        red = (u128)m * P::kMod[1] + (uint64_t)cur + rc;              \
        t0 = (uint64_t)red;                                           \
        carry = (uint64_t)(cur >> 64);                                \
        rc = (uint64_t)(red >> 64);                                   \
        cur = (u128)a * b2 + t2 + carry;                              \
        red = (u128)m * P::kMod[2] + (uint64_t)cur + rc;              \
        t1 = (uint64_t)red;                                           \
        carry = (uint64_t)(cur >> 64);                                \
        rc = (uint64_t)(red >> 64);                                   \
        cur = (u128)a * b3 + t3 + carry;                              \
        red = (u128)m * P::kMod[3] + (uint64_t)cur + rc;              \
        t2 = (uint64_t)red;                                           \
        carry = (uint64_t)(cur >> 64);                                \
        rc = (uint64_t)(red >> 64);                                   \
        u128 top = (u128)t4 + carry + rc;                             \
        t3 = (uint64_t)top;                                           \
        t4 = (uint64_t)(top >> 64);                                   \
    }
        VERMAT_CIOS_ROUND(l[0])
        VERMAT_CIOS_ROUND(l[1])
        VERMAT_CIOS_ROUND(l[2])
        VERMAT_CIOS_ROUND(l[3])
#undef VERMAT_CIOS_ROUND
        Monty r{{t0, t1, t2, t3}};
        if (t4 || geq4(r.l, P::kMod)) sub4(r.l, P::kMod);
        return r;
    }

    Monty square() const { return *this * *this; }

    // Exponentiation by a little-endian limb span (square and multiply).
    Monty pow(std::span<const uint64_t> e) const {
        Monty acc = one();
        bool started = false;
        for (size_t i = e.size(); i-- > 0;) {
            for (int b = 63; b >= 0; --b) {
                if (started) acc = acc.square();
                if ((e[i] >> b) & 1) {
                    if (started)
                        acc = acc * *this;
                    else {
                        acc = *this;
                        started = true;
                    }
                }
            }
        }
        return acc;
    }

    Monty inverse() const {
        if (is_zero()) throw param_error("field inverse of zero");
        // Fermat: a^(p-2).
        uint64_t e[4] = {P::kMod[0], P::kMod[1], P::kMod[2], P::kMod[3]};
        e[0] -= 2;  // p is odd and > 2, no borrow past limb 0
        if (e[0] > P::kMod[0]) {  // borrow handling for completeness
            // cannot happen for our moduli (low limb > 2), kept as a guard
            throw param_error("unexpected modulus shape");
        }
        return pow(std::span<const uint64_t>(e, 4));
    }

    // Square root for p = 3 mod 4 (base field only): a^((p+1)/4).
    // Returns false if a is not a square.
    bool sqrt(Monty& out) const {
        uint64_t e[4] = {P::kMod[0], P::kMod[1], P::kMod[2], P::kMod[3]};
        // (p+1)/4 = (p-3)/4 + 1; p = 3 mod 4 so p+1 carries cleanly.
        unsigned __int128 carry = 1;
        for (int i = 0; i < 4 && carry; ++i) {
            unsigned __int128 cur = (unsigned __int128)e[i] + 1;
            e[i] = (uint64_t)cur;
            carry = cur >> 64;
        }
        // divide by 4
        for (int s = 0; s < 2; ++s) {
            uint64_t bit = 0;
            for (int i = 3; i >= 0; --i) {
                uint64_t nb = e[i] & 1;
                e[i] = (e[i] >> 1) | (bit << 63);
                bit = nb;
            }
        }
        Monty cand = pow(std::span<const uint64_t>(e, 4));
        if (cand.square() == *this) {
            out = cand;
            return true;
        }
        return false;
    }

    // Parity of the canonical residue (for point compression).
    bool canonical_odd() const { return to_canonical()[0] & 1; }

    std::string to_dec() const {
        auto c = to_canonical();
        if ((c[0] | c[1] | c[2] | c[3]) == 0) return "0";
        std::string out;
        uint64_t w[4] = {c[0], c[1], c[2], c[3]};
        while (w[0] | w[1] | w[2] | w[3]) {
            uint64_t digit = div4_small(w, 10);
            out.push_back(char('0' + digit));
        }
        return std::string(out.rbegin(), out.rend());
    }

private:
    static const Monty& r2() {
        static const Monty r{{P::kR2[0], P::kR2[1], P::kR2[2], P::kR2[3]}};
        return r;
    }
};

using Fp = Monty<PParams>;
using Fr = Monty<RParams>;

}  // namespace vermat::bn256
