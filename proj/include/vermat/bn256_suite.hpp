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

// Real pairing backend: the 256-bit Barreto-Naehrig curve (type-3 pairing,
// 128-bit security level).  Same interface as the toy suite, same counter
// semantics.

#include <optional>
#include <string>
#include <vector>

#include "vermat/bn256/pairing.hpp"
#include "vermat/common.hpp"
#include "vermat/counters.hpp"
#include "vermat/rng.hpp"

namespace vermat {

// Scalar field F_r, r = #G1.
class Bn256ScalarField {
public:
    using Elt = bn256::Fr;

    Elt zero() const { return Elt::zero(); }
    Elt one() const { return Elt::one(); }
    bool is_zero(const Elt& a) const { return a.is_zero(); }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }

    Elt add(const Elt& a, const Elt& b) const {
        count_field();
        return a + b;
    }
    Elt sub(const Elt& a, const Elt& b) const {
        count_field();
        return a - b;
    }
    Elt neg(const Elt& a) const {
        count_field();
        return a.neg();
    }
    Elt mul(const Elt& a, const Elt& b) const {
        count_field();
        return a * b;
    }
    Elt inv(const Elt& a) const {
        count_field();
        return a.inverse();
    }

    Elt from_u64(uint64_t v) const { return Elt::from_u64(v); }
    Elt from_i64(int64_t v) const {
        return v >= 0 ? Elt::from_u64(uint64_t(v))
                      : Elt::from_u64(uint64_t(-(v + 1)) + 1).neg();
    }

    Elt from_decimal(const std::string& s) const {
        if (s.empty()) throw format_error("empty number");
        size_t i = 0;
        bool negative = s[0] == '-';
        if (negative) i = 1;
        if (i == s.size()) throw format_error("bad number '" + s + "'");
        Elt ten = Elt::from_u64(10);
        Elt acc = Elt::zero();
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw format_error("bad number '" + s + "'");
            acc = acc * ten + Elt::from_u64(uint64_t(s[i] - '0'));
        }
        return negative ? acc.neg() : acc;
    }

    Elt random(SeededRng& rng) const {
        for (;;) {
            bn256::Limbs4 c{rng.next_u64(), rng.next_u64(), rng.next_u64(),
                            rng.next_u64()};
            if (Elt::less_than_mod(c.data())) return Elt::from_canonical(c);
        }
    }
    Elt random_nonzero(SeededRng& rng) const {
        for (;;) {
            Elt e = random(rng);
            if (!e.is_zero()) return e;
        }
    }

    // Whole 256-bit XOF blocks, rejected when >= r.
    std::optional<Elt> try_from_block(const uint8_t block[32]) const {
        bn256::Limbs4 c{};
        for (int i = 0; i < 32; ++i) c[i / 8] |= uint64_t(block[i]) << (8 * (i % 8));
        if (!Elt::less_than_mod(c.data())) return std::nullopt;
        return Elt::from_canonical(c);
    }

    Elt from_canonical_le(std::span<const uint8_t> le) const {
        bn256::Limbs4 c{};
        for (size_t i = 0; i < le.size(); ++i) {
            if (i >= 32) {
                if (le[i] != 0) throw param_error("value exceeds field modulus");
                continue;
            }
            c[i / 8] |= uint64_t(le[i]) << (8 * (i % 8));
        }
        return Elt::from_canonical(c);  // throws if >= r
    }

    static constexpr size_t kEncodedSize = 32;
    void encode(const Elt& a, bytes& out) const {
        auto c = a.to_canonical();
        for (int i = 0; i < 4; ++i) append_u64(out, c[i]);
    }
    Elt decode(ByteReader& in) const {
        bn256::Limbs4 c;
        for (int i = 0; i < 4; ++i) c[i] = in.u64();
        if (!Elt::less_than_mod(c.data()))
            throw format_error("field element out of range");
        return Elt::from_canonical(c);
    }

    std::string to_string(const Elt& a) const { return a.to_dec(); }

    size_t modulus_bits() const { return 256; }
    std::string modulus_dec() const { return bn256::RParams::kDec; }
};

class Bn256Suite {
public:
    static constexpr bool kIsToy = false;

    using Field = Bn256ScalarField;
    struct G1Elt {
        bn256::G1Point p;
        bool operator==(const G1Elt& o) const { return p == o.p; }
    };
    struct G2Elt {
        bn256::G2Point p;
        bool operator==(const G2Elt& o) const { return p == o.p; }
    };
    struct GTElt {
        bn256::Fp12 v;
        bool operator==(const GTElt& o) const { return v == o.v; }
    };

    std::string backend_name() const { return "bn256"; }
    std::string group_order_dec() const { return bn256::RParams::kDec; }
    size_t scalar_bits() const { return 256; }

    Field scalar_field() const { return Field(); }

    G1Elt g1() const { return {bn256::g1_generator()}; }
    G2Elt g2() const { return {bn256::g2_generator()}; }
    GTElt gt() const {
        static const bn256::Fp12 gt0 =
            bn256::pairing(bn256::g1_generator(), bn256::g2_generator());
        return {gt0};
    }
    G1Elt g1_id() const { return {bn256::G1Point::identity()}; }
    G2Elt g2_id() const { return {bn256::G2Point::identity()}; }
    GTElt gt_id() const { return {bn256::Fp12::one()}; }

    G1Elt g1_op(const G1Elt& a, const G1Elt& b) const { return {a.p.add(b.p)}; }
    G2Elt g2_op(const G2Elt& a, const G2Elt& b) const { return {a.p.add(b.p)}; }
    GTElt gt_op(const GTElt& a, const GTElt& b) const { return {a.v * b.v}; }
    G1Elt g1_inv(const G1Elt& a) const { return {a.p.neg()}; }
    GTElt gt_inv(const GTElt& a) const { return {a.v.inverse()}; }

    G1Elt g1_exp(const G1Elt& base, const Field::Elt& e) const {
        if (e.is_zero()) return g1_id();
        count_g1_exp();
        auto c = e.to_canonical();
        if (base.p == bn256::g1_generator())
            return {gen_table().mul(std::span<const uint64_t>(c.data(), 4))};
        return {base.p.scalar_mul(std::span<const uint64_t>(c.data(), 4))};
    }
    G2Elt g2_exp(const G2Elt& base, const Field::Elt& e) const {
        if (e.is_zero()) return g2_id();
        count_g2_exp();
        auto c = e.to_canonical();
        return {base.p.scalar_mul(std::span<const uint64_t>(c.data(), 4))};
    }
    GTElt gt_exp(const GTElt& base, const Field::Elt& e) const {
        if (e.is_zero()) return gt_id();
        count_gt_exp();
        auto c = e.to_canonical();
        return {base.v.pow(std::span<const uint64_t>(c.data(), 4))};
    }

    G1Elt g1_multi_exp(std::span<const G1Elt> bases,
                       std::span<const Field::Elt> exps) const {
        if (bases.size() != exps.size())
            throw dim_error("multi_exp length mismatch");
        std::vector<bn256::G1Point> pts;
        std::vector<bn256::Limbs4> es;
        pts.reserve(bases.size());
        es.reserve(bases.size());
        for (size_t i = 0; i < bases.size(); ++i) {
            if (exps[i].is_zero()) continue;  // identity factor, not counted
            pts.push_back(bases[i].p);
            es.push_back(exps[i].to_canonical());
        }
        count_g1_exp(pts.size());
        return {bn256::multi_scalar_mul<bn256::Fp>(std::span(pts), std::span(es))};
    }
    G2Elt g2_multi_exp(std::span<const G2Elt> bases,
                       std::span<const Field::Elt> exps) const {
        if (bases.size() != exps.size())
            throw dim_error("multi_exp length mismatch");
        std::vector<bn256::G2Point> pts;
        std::vector<bn256::Limbs4> es;
        for (size_t i = 0; i < bases.size(); ++i) {
            if (exps[i].is_zero()) continue;
            pts.push_back(bases[i].p);
            es.push_back(exps[i].to_canonical());
        }
        count_g2_exp(pts.size());
        return {bn256::multi_scalar_mul<bn256::Fp2>(std::span(pts), std::span(es))};
    }

    GTElt pair(const G1Elt& a, const G2Elt& b) const {
        count_pairing();
        return {bn256::pairing(a.p, b.p)};
    }

    G1Elt g1_random(SeededRng& rng) const {
        auto e = scalar_field().random(rng).to_canonical();
        return {bn256::g1_generator().scalar_mul(
            std::span<const uint64_t>(e.data(), 4))};
    }
    G2Elt g2_random(SeededRng& rng) const {
        auto e = scalar_field().random(rng).to_canonical();
        return {bn256::g2_generator().scalar_mul(
            std::span<const uint64_t>(e.data(), 4))};
    }
    GTElt gt_random(SeededRng& rng) const {
        auto e = scalar_field().random(rng).to_canonical();
        return {gt().v.pow(std::span<const uint64_t>(e.data(), 4))};
    }

    // Canonical encodings: 1-byte group tag, then compressed coordinates
    // (flag 0x00 identity / 0x02 even y / 0x03 odd y, then x limbs LE).
    void encode_g1(const G1Elt& a, bytes& out) const {
        append_u8(out, 0x01);
        if (a.p.is_identity()) {
            append_u8(out, 0x00);
            for (int i = 0; i < 4; ++i) append_u64(out, 0);
            return;
        }
        bn256::Fp x, y;
        a.p.to_affine(x, y);
        append_u8(out, y.canonical_odd() ? 0x03 : 0x02);
        auto c = x.to_canonical();
        for (int i = 0; i < 4; ++i) append_u64(out, c[i]);
    }

    G1Elt decode_g1(ByteReader& in) const {
        expect_tag(in, 0x01);
        uint8_t flag = in.u8();
        bn256::Limbs4 c;
        for (int i = 0; i < 4; ++i) c[i] = in.u64();
        if (flag == 0x00) return g1_id();
        if (flag != 0x02 && flag != 0x03) throw format_error("bad point flag");
        if (!bn256::Fp::less_than_mod(c.data()))
            throw format_error("x coordinate out of range");
        bn256::Fp x = bn256::Fp::from_canonical(c);
        bn256::Fp rhs = x.square() * x + bn256::g1_b();
        bn256::Fp y;
        if (!rhs.sqrt(y)) throw format_error("x is not on the curve");
        if (y.canonical_odd() != (flag == 0x03)) y = y.neg();
        return {bn256::G1Point::from_affine(x, y)};
    }

    void encode_g2(const G2Elt& a, bytes& out) const {
        append_u8(out, 0x02);
        if (a.p.is_identity()) {
            append_u8(out, 0x00);
            for (int i = 0; i < 8; ++i) append_u64(out, 0);
            return;
        }
        bn256::Fp2 x, y;
        a.p.to_affine(x, y);
        append_u8(out, y.canonical_odd() ? 0x03 : 0x02);
        auto c0 = x.c0.to_canonical(), c1 = x.c1.to_canonical();
        for (int i = 0; i < 4; ++i) append_u64(out, c0[i]);
        for (int i = 0; i < 4; ++i) append_u64(out, c1[i]);
    }

    G2Elt decode_g2(ByteReader& in) const {
        expect_tag(in, 0x02);
        uint8_t flag = in.u8();
        bn256::Limbs4 c0, c1;
        for (int i = 0; i < 4; ++i) c0[i] = in.u64();
        for (int i = 0; i < 4; ++i) c1[i] = in.u64();
        if (flag == 0x00) return g2_id();
        if (flag != 0x02 && flag != 0x03) throw format_error("bad point flag");
        if (!bn256::Fp::less_than_mod(c0.data()) ||
            !bn256::Fp::less_than_mod(c1.data()))
            throw format_error("x coordinate out of range");
        bn256::Fp2 x{bn256::Fp::from_canonical(c0), bn256::Fp::from_canonical(c1)};
        bn256::Fp2 rhs = x.square() * x + bn256::g2_b();
        bn256::Fp2 y;
        if (!rhs.sqrt(y)) throw format_error("x is not on the twist");
        if (y.canonical_odd() != (flag == 0x03)) y = y.neg();
        bn256::G2Point pt = bn256::G2Point::from_affine(x, y);
        // Subgroup check: the twist has cofactor 2p - r.
        if (!pt.scalar_mul(std::span<const uint64_t>(bn256::RParams::kMod, 4))
                 .is_identity())
            throw format_error("point not in the order-r subgroup");
        return {pt};
    }

    void encode_gt(const GTElt& a, bytes& out) const {
        append_u8(out, 0x03);
        const bn256::Fp* coeffs[12] = {
            &a.v.c0.c0.c0, &a.v.c0.c0.c1, &a.v.c0.c1.c0, &a.v.c0.c1.c1,
            &a.v.c0.c2.c0, &a.v.c0.c2.c1, &a.v.c1.c0.c0, &a.v.c1.c0.c1,
            &a.v.c1.c1.c0, &a.v.c1.c1.c1, &a.v.c1.c2.c0, &a.v.c1.c2.c1};
        for (const auto* f : coeffs) {
            auto c = f->to_canonical();
            for (int i = 0; i < 4; ++i) append_u64(out, c[i]);
        }
    }

    GTElt decode_gt(ByteReader& in) const {
        expect_tag(in, 0x03);
        GTElt a{bn256::Fp12::one()};
        bn256::Fp* coeffs[12] = {
            &a.v.c0.c0.c0, &a.v.c0.c0.c1, &a.v.c0.c1.c0, &a.v.c0.c1.c1,
            &a.v.c0.c2.c0, &a.v.c0.c2.c1, &a.v.c1.c0.c0, &a.v.c1.c0.c1,
            &a.v.c1.c1.c0, &a.v.c1.c1.c1, &a.v.c1.c2.c0, &a.v.c1.c2.c1};
        for (auto* f : coeffs) {
            bn256::Limbs4 c;
            for (int i = 0; i < 4; ++i) c[i] = in.u64();
            if (!bn256::Fp::less_than_mod(c.data()))
                throw format_error("coefficient out of range");
            *f = bn256::Fp::from_canonical(c);
        }
        return a;
    }

private:
    // Fixed-base comb for the G1 generator: 12-bit windows, each
    // exponentiation becomes ~21 mixed additions.  KeyGen-heavy protocols
    // (the quadratic baseline in particular) spend almost all their time in
    // generator exponentiations.
    struct GenTable {
        static constexpr size_t kWindow = 12;
        static constexpr size_t kWindows = (256 + kWindow - 1) / kWindow;
        std::vector<bn256::AffinePt<bn256::Fp>> t;  // [w][digit-1]

        GenTable() {
            const size_t per = (size_t(1) << kWindow) - 1;
            std::vector<bn256::G1Point> jac;
            jac.reserve(kWindows * per);
            bn256::G1Point wbase = bn256::g1_generator();
            for (size_t w = 0; w < kWindows; ++w) {
                bn256::G1Point acc = wbase;
                for (size_t d = 1; d <= per; ++d) {
                    jac.push_back(acc);
                    acc = acc.add(wbase);
                }
                wbase = acc;  // wbase * 2^kWindow
            }
            t = bn256::batch_to_affine<bn256::Fp>(std::span(jac));
        }

        bn256::G1Point mul(std::span<const uint64_t> e) const {
            const size_t per = (size_t(1) << kWindow) - 1;
            bn256::G1Point acc = bn256::G1Point::identity();
            for (size_t w = 0; w < kWindows; ++w) {
                size_t bitpos = w * kWindow;
                size_t limb = bitpos >> 6, off = bitpos & 63;
                uint64_t d = 0;
                if (limb < e.size()) {
                    d = e[limb] >> off;
                    if (off + kWindow > 64 && limb + 1 < e.size())
                        d |= e[limb + 1] << (64 - off);
                }
                d &= per;
                if (!d) continue;
                const auto& pt = t[w * per + (d - 1)];
                acc = acc.add_affine(pt.x, pt.y, false);
            }
            return acc;
        }
    };

    static const GenTable& gen_table() {
        static const GenTable table;
        return table;
    }

    static void expect_tag(ByteReader& in, uint8_t tag) {
        if (in.u8() != tag) throw format_error("group tag mismatch");
    }
};

// The real backend of the spec: deterministic, fixed standard curve.
inline Bn256Suite suite_real() { return Bn256Suite(); }

}  // namespace vermat
