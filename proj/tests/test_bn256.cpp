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

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "gtest/gtest.h"
#include "vermat/bn256_suite.hpp"

namespace vermat {
namespace {

using boost::multiprecision::cpp_int;
using namespace bn256;

cpp_int limbs_to_int(const uint64_t l[4]) {
    cpp_int v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 64) | l[i];
    return v;
}

cpp_int fp_value(const Fp& a) {
    auto c = a.to_canonical();
    return limbs_to_int(c.data());
}

// All curve constants rederived from the seed with an independent bignum.
TEST(Bn256Constants, DerivedFromSeed) {
    cpp_int u = cpp_int(kBnSeedV) * kBnSeedV * kBnSeedV;
    EXPECT_EQ(u, cpp_int(kBnU));
    cpp_int p = 36 * u * u * u * u + 36 * u * u * u + 24 * u * u + 6 * u + 1;
    cpp_int t = 6 * u * u + 1;
    cpp_int r = p + 1 - t;
    EXPECT_EQ(p, cpp_int(PParams::kDec));
    EXPECT_EQ(r, cpp_int(RParams::kDec));
    EXPECT_EQ(p, limbs_to_int(PParams::kMod));
    EXPECT_EQ(r, limbs_to_int(RParams::kMod));
    EXPECT_EQ(msb(p) + 1, 256u);  // 256-bit prime field
    EXPECT_EQ(msb(r) + 1, 256u);
    EXPECT_EQ(p % 4, 3);
    EXPECT_EQ(p % 6, 1);
    EXPECT_TRUE(miller_rabin_test(p, 40));
    EXPECT_TRUE(miller_rabin_test(r, 40));
    // Ate loop constant 6u + 2.
    cpp_int ate = 6 * u + 2;
    cpp_int ate_l = (cpp_int(kAteLoop[1]) << 64) | kAteLoop[0];
    EXPECT_EQ(ate, ate_l);
}

TEST(Bn256Constants, MontgomeryParameters) {
    for (int which = 0; which < 2; ++which) {
        cpp_int m = which ? limbs_to_int(RParams::kMod) : limbs_to_int(PParams::kMod);
        const uint64_t* r1 = which ? RParams::kR1 : PParams::kR1;
        const uint64_t* r2 = which ? RParams::kR2 : PParams::kR2;
        uint64_t n0 = which ? RParams::kN0 : PParams::kN0;
        cpp_int R = cpp_int(1) << 256;
        EXPECT_EQ(limbs_to_int(r1), R % m);
        EXPECT_EQ(limbs_to_int(r2), (R * R) % m);
        cpp_int minv = powm(m, cpp_int((uint64_t(1) << 63)) * 0 + cpp_int("18446744073709551615"), cpp_int(1) << 64);
        // n0 = -m^{-1} mod 2^64, check by multiplication instead.
        cpp_int prod = (cpp_int(n0) * m) & ((cpp_int(1) << 64) - 1);
        EXPECT_EQ(prod, (cpp_int(1) << 64) - 1);  // n0 * m = -1 mod 2^64
    }
}

TEST(Bn256Fp, ArithmeticAgainstBignum) {
    cpp_int p = limbs_to_int(PParams::kMod);
    SeededRng rng(101);
    for (int it = 0; it < 200; ++it) {
        bn256::Limbs4 al{}, bl{};
        for (auto& x : al) x = rng.next_u64();
        for (auto& x : bl) x = rng.next_u64();
        cpp_int ai = limbs_to_int(al.data()) % p;
        cpp_int bi = limbs_to_int(bl.data()) % p;
        // reduce the limbs the hard way to build valid field elements
        bn256::Limbs4 ar{}, br{};
        cpp_int t = ai;
        for (int i = 0; i < 4; ++i) {
            ar[i] = uint64_t(t & 0xFFFFFFFFFFFFFFFFull);
            t >>= 64;
        }
        t = bi;
        for (int i = 0; i < 4; ++i) {
            br[i] = uint64_t(t & 0xFFFFFFFFFFFFFFFFull);
            t >>= 64;
        }
        Fp a = Fp::from_canonical(ar), b = Fp::from_canonical(br);
        EXPECT_EQ(fp_value(a + b), (ai + bi) % p);
        EXPECT_EQ(fp_value(a - b), ((ai - bi) % p + p) % p);
        EXPECT_EQ(fp_value(a * b), (ai * bi) % p);
        EXPECT_EQ(fp_value(a.neg()), (p - ai) % p);
        if (!a.is_zero()) {
            EXPECT_EQ(fp_value(a * a.inverse()), 1);
        }
    }
}

TEST(Bn256Fp, RoundTripAndDecimal) {
    Fp a = Fp::from_u64(123456789);
    EXPECT_EQ(a.to_dec(), "123456789");
    EXPECT_EQ(Fp::zero().to_dec(), "0");
    auto c = a.to_canonical();
    EXPECT_EQ(Fp::from_canonical(c), a);
}

TEST(Bn256Fp2, SqrtAndNonResidue) {
    SeededRng rng(102);
    Bn256ScalarField dummy;  // noop, keeps headers honest
    (void)dummy;
    int squares = 0, nonsquares = 0;
    for (int it = 0; it < 40; ++it) {
        Fp2 a{Fp::from_u64(rng.next_u64()), Fp::from_u64(rng.next_u64())};
        Fp2 sq = a.square();
        Fp2 root;
        ASSERT_TRUE(sq.sqrt(root));
        EXPECT_EQ(root.square(), sq);
        Fp2 probe = sq * xi();  // xi is a non-square, so sq*xi is not a square
        Fp2 r2;
        if (probe.sqrt(r2))
            ++squares;
        else
            ++nonsquares;
    }
    EXPECT_EQ(squares, 0);
    EXPECT_EQ(nonsquares, 40);
}

TEST(Bn256Curve, GeneratorsAndOrders) {
    auto g1 = g1_generator();
    EXPECT_TRUE(on_curve(g1, g1_b()));
    EXPECT_FALSE(g1.is_identity());
    EXPECT_TRUE(
        g1.scalar_mul(std::span<const uint64_t>(RParams::kMod, 4)).is_identity());

    auto g2 = g2_generator();
    EXPECT_TRUE(on_curve(g2, g2_b()));
    EXPECT_FALSE(g2.is_identity());
    EXPECT_TRUE(
        g2.scalar_mul(std::span<const uint64_t>(RParams::kMod, 4)).is_identity());
}

// The pinned G2 generator is exactly the cofactor-cleared first twist point.
TEST(Bn256Curve, G2GeneratorRederived) {
    // Find the first valid x = x0 + x1 i in the same deterministic order used
    // for the derivation: x1 inner loop, x0 outer.
    Fp2 x, y;
    bool found = false;
    for (uint64_t x0 = 0; x0 < 30 && !found; ++x0) {
        for (uint64_t x1 = 0; x1 < 3 && !found; ++x1) {
            Fp2 cand{Fp::from_u64(x0), Fp::from_u64(x1)};
            Fp2 rhs = cand.square() * cand + g2_b();
            if (rhs.sqrt(y)) {
                x = cand;
                found = true;
            }
        }
    }
    ASSERT_TRUE(found);
    // Cofactor 2p - r.
    cpp_int h = 2 * limbs_to_int(PParams::kMod) - limbs_to_int(RParams::kMod);
    uint64_t hl[5] = {0, 0, 0, 0, 0};
    cpp_int t = h;
    for (int i = 0; i < 5; ++i) {
        hl[i] = uint64_t(t & 0xFFFFFFFFFFFFFFFFull);
        t >>= 64;
    }
    auto pt = G2Point::from_affine(x, y);
    auto cleared = pt.scalar_mul(std::span<const uint64_t>(hl, 5));
    EXPECT_FALSE(cleared.is_identity());
    EXPECT_TRUE(cleared == g2_generator());
}

TEST(Bn256Curve, GroupLawsAndScalarMul) {
    SeededRng rng(103);
    auto g = g1_generator();
    // Small multiples by repeated addition vs scalar_mul.
    G1Point acc = G1Point::identity();
    for (uint64_t k = 1; k <= 20; ++k) {
        acc = acc.add(g);
        uint64_t kl[1] = {k};
        EXPECT_TRUE(acc == g.scalar_mul(std::span<const uint64_t>(kl, 1)));
    }
    // (a + b) g = a g + b g with full-width scalars.
    Bn256ScalarField fr;
    for (int it = 0; it < 10; ++it) {
        auto a = fr.random(rng), b = fr.random(rng);
        auto ca = a.to_canonical(), cb = b.to_canonical(), cs = (a + b).to_canonical();
        auto lhs = g.scalar_mul(std::span<const uint64_t>(cs.data(), 4));
        auto rhs = g.scalar_mul(std::span<const uint64_t>(ca.data(), 4))
                       .add(g.scalar_mul(std::span<const uint64_t>(cb.data(), 4)));
        EXPECT_TRUE(lhs == rhs);
    }
    // Mixed addition agrees with general addition.
    auto p1 = g.dbl().add(g);
    Fp ax, ay;
    g.to_affine(ax, ay);
    EXPECT_TRUE(p1.add_affine(ax, ay, false) == p1.add(g));
}

TEST(Bn256Curve, MultiScalarMulMatchesNaive) {
    SeededRng rng(104);
    Bn256ScalarField fr;
    auto g = g1_generator();
    for (size_t n : {1u, 2u, 15u, 16u, 40u, 130u}) {
        std::vector<G1Point> pts;
        std::vector<Limbs4> es;
        G1Point expect = G1Point::identity();
        for (size_t i = 0; i < n; ++i) {
            auto s = fr.random(rng).to_canonical();
            auto pt = g.scalar_mul(std::span<const uint64_t>(s.data(), 4));
            auto e = fr.random(rng).to_canonical();
            pts.push_back(pt);
            es.push_back(e);
            expect = expect.add(pt.scalar_mul(std::span<const uint64_t>(e.data(), 4)));
        }
        auto got = multi_scalar_mul<Fp>(std::span(pts), std::span(es));
        EXPECT_TRUE(got == expect) << "n=" << n;
    }
}

TEST(Bn256Pairing, NonDegenerateAndOrderR) {
    auto e = pairing(g1_generator(), g2_generator());
    EXPECT_FALSE(e.is_one());
    EXPECT_TRUE(e.pow(std::span<const uint64_t>(RParams::kMod, 4)).is_one());
}

TEST(Bn256Pairing, Bilinearity) {
    SeededRng rng(105);
    Bn256ScalarField fr;
    auto base = pairing(g1_generator(), g2_generator());
    for (int it = 0; it < 200; ++it) {
        auto a = fr.random(rng), b = fr.random(rng);
        auto ca = a.to_canonical(), cb = b.to_canonical();
        auto P = g1_generator().scalar_mul(std::span<const uint64_t>(ca.data(), 4));
        auto Q = g2_generator().scalar_mul(std::span<const uint64_t>(cb.data(), 4));
        auto lhs = pairing(P, Q);
        auto cab = (a * b).to_canonical();
        auto rhs = base.pow(std::span<const uint64_t>(cab.data(), 4));
        EXPECT_TRUE(lhs == rhs);
    }
}

TEST(Bn256Pairing, Multiplicativity) {
    SeededRng rng(106);
    Bn256ScalarField fr;
    auto a = fr.random(rng).to_canonical();
    auto b = fr.random(rng).to_canonical();
    auto P1 = g1_generator().scalar_mul(std::span<const uint64_t>(a.data(), 4));
    auto P2 = g1_generator().scalar_mul(std::span<const uint64_t>(b.data(), 4));
    auto Q = g2_generator();
    auto lhs = pairing(P1.add(P2), Q);
    auto rhs = pairing(P1, Q) * pairing(P2, Q);
    EXPECT_TRUE(lhs == rhs);
}

TEST(Bn256Pairing, IdentityArguments) {
    auto suite = suite_real();
    auto field = suite.scalar_field();
    // e(g1^0, g2^b) = identity of GT.
    auto z = suite.g1_exp(suite.g1(), field.zero());
    auto e = suite.pair(z, suite.g2_exp(suite.g2(), field.from_u64(55)));
    EXPECT_EQ(e, suite.gt_id());
}

// e(g1^3, g2^5) = gT^15, the oracle being 15 repeated gT multiplications.
TEST(Bn256Pairing, SmallExponentWorkedExample) {
    auto suite = suite_real();
    auto field = suite.scalar_field();
    auto lhs = suite.pair(suite.g1_exp(suite.g1(), field.from_u64(3)),
                          suite.g2_exp(suite.g2(), field.from_u64(5)));
    auto acc = suite.gt_id();
    for (int i = 0; i < 15; ++i) acc = suite.gt_op(acc, suite.gt());
    EXPECT_EQ(lhs, acc);
}

TEST(Bn256Suite, ScalarFieldBasics) {
    auto suite = suite_real();
    auto f = suite.scalar_field();
    EXPECT_EQ(f.modulus_bits(), 256u);  // 256-bit prime scalar field
    EXPECT_EQ(cpp_int(f.modulus_dec()), limbs_to_int(RParams::kMod));
    SeededRng rng(107);
    for (int it = 0; it < 50; ++it) {
        auto a = f.random(rng);
        auto b = f.random(rng);
        EXPECT_TRUE(f.eq(f.add(a, b), f.add(b, a)));
        EXPECT_TRUE(f.eq(f.mul(a, f.inv(f.is_zero(a) ? f.one() : a)),
                         f.is_zero(a) ? f.mul(a, f.inv(f.one())) : f.one()));
    }
    EXPECT_EQ(f.to_string(f.from_decimal("987654321987654321")),
              "987654321987654321");
    EXPECT_TRUE(f.eq(f.from_decimal("-1"), f.neg(f.one())));
    EXPECT_TRUE(f.eq(f.from_decimal(f.modulus_dec()), f.zero()));
}

TEST(Bn256Suite, EncodingRoundTrips) {
    auto suite = suite_real();
    SeededRng rng(108);
    for (int it = 0; it < 100; ++it) {
        auto a = suite.g1_random(rng);
        auto b = suite.g2_random(rng);
        auto c = suite.gt_random(rng);
        bytes e1, e1b, e2, e3;
        suite.encode_g1(a, e1);
        suite.encode_g1(a, e1b);
        EXPECT_EQ(e1, e1b);
        suite.encode_g2(b, e2);
        suite.encode_gt(c, e3);
        ByteReader r1(e1), r2(e2), r3(e3);
        EXPECT_EQ(suite.decode_g1(r1), a);
        EXPECT_EQ(suite.decode_g2(r2), b);
        EXPECT_EQ(suite.decode_gt(r3), c);
        ByteReader wrong(e2);
        EXPECT_THROW(suite.decode_g1(wrong), format_error);
    }
    // Identities round-trip too.
    bytes ei;
    suite.encode_g1(suite.g1_id(), ei);
    ByteReader ri(ei);
    EXPECT_EQ(suite.decode_g1(ri), suite.g1_id());
}

TEST(Bn256Suite, FieldElementXofSampling) {
    auto suite = suite_real();
    auto f = suite.scalar_field();
    uint8_t block[32] = {};
    block[0] = 42;
    auto e = f.try_from_block(block);
    ASSERT_TRUE(e.has_value());
    EXPECT_TRUE(f.eq(*e, f.from_u64(42)));
    // A block >= r must be rejected.
    bytes rb;
    for (int i = 0; i < 4; ++i) append_u64(rb, RParams::kMod[i]);
    EXPECT_FALSE(f.try_from_block(rb.data()).has_value());
}

TEST(Bn256Suite, MultiExpCountersAndAgreement) {
    auto suite = suite_real();
    auto f = suite.scalar_field();
    SeededRng rng(109);
    std::vector<Bn256Suite::G1Elt> bases;
    std::vector<Bn256ScalarField::Elt> exps;
    for (int i = 0; i < 24; ++i) {
        bases.push_back(suite.g1_random(rng));
        exps.push_back(i % 4 == 0 ? f.zero() : f.random(rng));
    }
    CounterScope sc;
    auto got = suite.g1_multi_exp(std::span(bases), std::span(exps));
    EXPECT_EQ(sc.counts().g1_exp, 18u);  // zeros skipped
    auto expect = suite.g1_id();
    for (int i = 0; i < 24; ++i)
        expect = suite.g1_op(expect, suite.g1_exp(bases[i], exps[i]));
    EXPECT_EQ(got, expect);
}

}  // namespace
}  // namespace vermat
