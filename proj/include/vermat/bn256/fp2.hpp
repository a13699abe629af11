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

// F_{p^2} = F_p[i] / (i^2 + 1), valid since p = 3 mod 4.  The tower
// non-residue is xi = 3 + i (neither a square nor a cube in F_{p^2}).

#include "vermat/bn256/fp.hpp"

namespace vermat::bn256 {

struct Fp2 {
    Fp c0, c1;  // c0 + c1*i

    static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }
    static Fp2 from_fp(const Fp& a) { return {a, Fp::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }

    Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fp2 neg() const { return {c0.neg(), c1.neg()}; }
    Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }
    Fp2 conj() const { return {c0, c1.neg()}; }

    Fp2 operator*(const Fp2& o) const {
        // Karatsuba: (a0 b0 - a1 b1) + ((a0+a1)(b0+b1) - a0 b0 - a1 b1) i
        Fp v0 = c0 * o.c0;
        Fp v1 = c1 * o.c1;
        Fp s = (c0 + c1) * (o.c0 + o.c1);
        return {v0 - v1, s - v0 - v1};
    }

    Fp2 mul_fp(const Fp& a) const { return {c0 * a, c1 * a}; }

    Fp2 square() const {
        // (a0 + a1 i)^2 = (a0+a1)(a0-a1) + 2 a0 a1 i
        Fp t = c0 * c1;
        return {(c0 + c1) * (c0 - c1), t + t};
    }

    Fp2 inverse() const {
        Fp norm = c0.square() + c1.square();
        Fp ninv = norm.inverse();
        return {c0 * ninv, (c1 * ninv).neg()};
    }

    // xi * a with xi = 3 + i.
    Fp2 mul_by_xi() const {
        Fp t0 = c0.dbl() + c0;  // 3 a0
        Fp t1 = c1.dbl() + c1;  // 3 a1
        return {t0 - c1, t1 + c0};
    }

    Fp2 pow(std::span<const uint64_t> e) const {
        Fp2 acc = one();
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

    // Square root for p = 3 mod 4; returns false for non-squares.
    bool sqrt(Fp2& out) const {
        if (is_zero()) {
            out = zero();
            return true;
        }
        // a1 = a^((p-3)/4); x0 = a1 a; alpha = a1 x0 = a^((p-1)/2).
        static const uint64_t e34[4] = {0x86172b1b17822599ull, 0x7b96e234482d6d67ull,
                                        0x6a9bfb2e18613708ull, 0x23ed4078d2a8e1feull};
        static const uint64_t e12[4] = {0x0c2e56362f044b33ull, 0xf72dc468905adacfull,
                                        0xd537f65c30c26e10ull, 0x47da80f1a551c3fcull};
        Fp2 a1 = pow(std::span<const uint64_t>(e34, 4));
        Fp2 x0 = a1 * *this;
        Fp2 alpha = a1 * x0;
        Fp2 cand;
        if (alpha == Fp2{Fp::one().neg(), Fp::zero()}) {
            cand = Fp2{Fp::zero(), Fp::one()} * x0;  // i * x0
        } else {
            Fp2 b = (Fp2::one() + alpha).pow(std::span<const uint64_t>(e12, 4));
            cand = b * x0;
        }
        if (cand.square() == *this) {
            out = cand;
            return true;
        }
        return false;
    }

    bool canonical_odd() const {
        return c0.is_zero() ? c1.canonical_odd() : c0.canonical_odd();
    }
};

// The cubic/sextic non-residue xi = 3 + i.
inline Fp2 xi() { return {Fp::from_u64(3), Fp::one()}; }

}  // namespace vermat::bn256
