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

// F_{p^6} = F_{p^2}[v] / (v^3 - xi) and F_{p^12} = F_{p^6}[w] / (w^2 - v),
// with the Frobenius maps needed by the final exponentiation.

#include "vermat/bn256/fp2.hpp"

namespace vermat::bn256 {

struct Fp6 {
    Fp2 c0, c1, c2;  // c0 + c1 v + c2 v^2

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const {
        return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
    }

    Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }

    Fp6 operator*(const Fp6& o) const {
        Fp2 aa = c0 * o.c0;
        Fp2 bb = c1 * o.c1;
        Fp2 cc = c2 * o.c2;
        Fp2 t0 = (c1 + c2) * (o.c1 + o.c2) - bb - cc;  // a1 b2 + a2 b1
        Fp2 t1 = (c0 + c1) * (o.c0 + o.c1) - aa - bb;  // a0 b1 + a1 b0
        Fp2 t2 = (c0 + c2) * (o.c0 + o.c2) - aa - cc;  // a0 b2 + a2 b0
        return {aa + t0.mul_by_xi(), t1 + cc.mul_by_xi(), t2 + bb};
    }

    Fp6 square() const { return *this * *this; }

    // v * a = (xi c2, c0, c1).
    Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

    Fp6 mul_fp2(const Fp2& a) const { return {c0 * a, c1 * a, c2 * a}; }

    Fp6 inverse() const {
        Fp2 t0 = c0.square() - (c1 * c2).mul_by_xi();
        Fp2 t1 = c2.square().mul_by_xi() - c0 * c1;
        Fp2 t2 = c1.square() - c0 * c2;
        Fp2 d = c0 * t0 + (c2 * t1 + c1 * t2).mul_by_xi();
        Fp2 dinv = d.inverse();
        return {t0 * dinv, t1 * dinv, t2 * dinv};
    }
};

struct Fp12 {
    Fp6 c0, c1;  // c0 + c1 w

    static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    bool is_one() const { return c0 == Fp6::one() && c1.is_zero(); }
    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }

    Fp12 operator*(const Fp12& o) const {
        Fp6 aa = c0 * o.c0;
        Fp6 bb = c1 * o.c1;
        Fp6 s = (c0 + c1) * (o.c0 + o.c1);
        return {aa + bb.mul_by_v(), s - aa - bb};
    }

    Fp12 square() const {
        Fp6 aa = c0 * c1;
        Fp6 t = (c0 + c1) * (c0 + c1.mul_by_v()) - aa - aa.mul_by_v();
        return {t, aa + aa};
    }

    // Conjugation over F_{p^6}: this is x -> x^{p^6}, and the inverse on the
    // cyclotomic subgroup.
    Fp12 conj() const { return {c0, c1.neg()}; }

    Fp12 inverse() const {
        Fp6 norm = c0.square() - c1.square().mul_by_v();
        Fp6 ninv = norm.inverse();
        return {c0 * ninv, (c1 * ninv).neg()};
    }

    Fp12 pow(std::span<const uint64_t> e) const {
        Fp12 acc = one();
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
};

// gamma[k] = xi^{k (p-1)/6} and its p^2 / p^3 counterparts, k = 1..5.
struct FrobeniusConstants {
    Fp2 g1[6];  // g1[k], k = 0..5 (g1[0] = 1)
    Fp2 g2[6];
    Fp2 g3[6];

    FrobeniusConstants() {
        uint64_t e[4] = {PParams::kMod[0], PParams::kMod[1], PParams::kMod[2],
                         PParams::kMod[3]};
        e[0] -= 1;          // p - 1 (p is odd)
        div4_small(e, 6);   // (p - 1) / 6, exact since p = 1 mod 6
        Fp2 base = xi().pow(std::span<const uint64_t>(e, 4));
        g1[0] = g2[0] = g3[0] = Fp2::one();
        for (int k = 1; k < 6; ++k) g1[k] = g1[k - 1] * base;
        for (int k = 1; k < 6; ++k) {
            g2[k] = g1[k] * g1[k].conj();   // xi^{k(p^2-1)/6}
            g3[k] = g2[k] * g1[k];          // xi^{k(p^3-1)/6} up to conj below
        }
    }
};

inline const FrobeniusConstants& frob_consts() {
    static const FrobeniusConstants fc;
    return fc;
}

// x -> x^{p^power} for power in {1, 2, 3}.
inline Fp12 frobenius(const Fp12& x, int power) {
    const auto& fc = frob_consts();
    auto map = [&](const Fp2& c, int k) -> Fp2 {
        switch (power) {
            case 1: return c.conj() * fc.g1[k];
            case 2: return c * fc.g2[k];
            default: return c.conj() * fc.g3[k];
        }
    };
    return {{map(x.c0.c0, 0), map(x.c0.c1, 2), map(x.c0.c2, 4)},
            {map(x.c1.c0, 1), map(x.c1.c1, 3), map(x.c1.c2, 5)}};
}

}  // namespace vermat::bn256
