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

// Optimal ate pairing e: G1 x G2 -> GT.  Affine Miller loop over 6u + 2
// with the two Frobenius correction lines, then the standard hard-part
// addition chain for the final exponentiation (p^12 - 1)/r.
//
// Lines through untwisted points evaluate at P = (xP, yP) as
//   l(P) = yP - lambda xP w + (lambda X - Y) w^3,   w^2 = v, v^3 = xi,
// which is sparse in the (1, w, v w) coordinates.

#include "vermat/bn256/curve.hpp"

namespace vermat::bn256 {

namespace pairing_detail {

struct MillerState {
    Fp2 Tx, Ty;  // current point on the twist, affine
    Fp xP, yP;   // G1 argument, affine
};

inline Fp12 line(const Fp2& lambda, const Fp2& px, const Fp2& py,
                 const MillerState& st) {
    Fp12 l = Fp12::zero();
    l.c0.c0 = Fp2::from_fp(st.yP);
    l.c1.c0 = lambda.mul_fp(st.xP).neg();
    l.c1.c1 = lambda * px - py;
    return l;
}

inline Fp12 dbl_step(MillerState& st) {
    Fp2 lambda = (st.Tx.square().dbl() + st.Tx.square()) *
                 st.Ty.dbl().inverse();  // 3 X^2 / 2 Y
    Fp12 l = line(lambda, st.Tx, st.Ty, st);
    Fp2 x3 = lambda.square() - st.Tx.dbl();
    Fp2 y3 = lambda * (st.Tx - x3) - st.Ty;
    st.Tx = x3;
    st.Ty = y3;
    return l;
}

inline Fp12 add_step(MillerState& st, const Fp2& qx, const Fp2& qy) {
    if (st.Tx == qx) throw param_error("degenerate pairing addition step");
    Fp2 lambda = (st.Ty - qy) * (st.Tx - qx).inverse();
    Fp12 l = line(lambda, qx, qy, st);
    Fp2 x3 = lambda.square() - st.Tx - qx;
    Fp2 y3 = lambda * (st.Tx - x3) - st.Ty;
    st.Tx = x3;
    st.Ty = y3;
    return l;
}

}  // namespace pairing_detail

inline Fp12 final_exponentiation(const Fp12& f_in) {
    // Easy part: f^{(p^6 - 1)(p^2 + 1)}.
    Fp12 f = f_in.conj() * f_in.inverse();
    f = frobenius(f, 2) * f;

    // Hard part, vectorial addition chain with x = u (positive seed).
    const uint64_t u[1] = {kBnU};
    std::span<const uint64_t> ue(u, 1);
    Fp12 fu = f.pow(ue);
    Fp12 fu2 = fu.pow(ue);
    Fp12 fu3 = fu2.pow(ue);

    Fp12 y0 = frobenius(f, 1) * frobenius(f, 2) * frobenius(f, 3);
    Fp12 y1 = f.conj();
    Fp12 y2 = frobenius(fu2, 2);
    Fp12 y3 = frobenius(fu, 1).conj();
    Fp12 y4 = (fu * frobenius(fu2, 1)).conj();
    Fp12 y5 = fu2.conj();
    Fp12 y6 = (fu3 * frobenius(fu3, 1)).conj();

    Fp12 t0 = y6.square() * y4 * y5;
    Fp12 t1 = y3 * y5 * t0;
    t0 = t0 * y2;
    t1 = (t1.square() * t0).square();
    t0 = t1 * y1;
    t1 = t1 * y0;
    t0 = t0.square();
    return t1 * t0;
}

// Miller loop plus final exponentiation; identity inputs give 1 in GT.
inline Fp12 pairing(const G1Point& P, const G2Point& Q) {
    if (P.is_identity() || Q.is_identity()) return Fp12::one();

    pairing_detail::MillerState st;
    Fp2 qx, qy;
    Q.to_affine(qx, qy);
    P.to_affine(st.xP, st.yP);
    st.Tx = qx;
    st.Ty = qy;

    Fp12 f = Fp12::one();
    bool started = false;
    for (int i = 1; i >= 0; --i) {
        for (int b = 63; b >= 0; --b) {
            uint64_t bit = (kAteLoop[i] >> b) & 1;
            if (!started) {
                if (bit) started = true;  // skip the leading one
                continue;
            }
            f = f.square() * pairing_detail::dbl_step(st);
            if (bit) f = f * pairing_detail::add_step(st, qx, qy);
        }
    }

    // Frobenius corrections: T + psi(Q), then - psi^2(Q).
    const auto& fc = frob_consts();
    Fp2 q1x = qx.conj() * fc.g1[2];
    Fp2 q1y = qy.conj() * fc.g1[3];
    f = f * pairing_detail::add_step(st, q1x, q1y);
    Fp2 q2x = qx * fc.g2[2];
    Fp2 q2y = (qy * fc.g2[3]).neg();  // -psi^2(Q)
    f = f * pairing_detail::add_step(st, q2x, q2y);

    return final_exponentiation(f);
}

}  // namespace vermat::bn256
