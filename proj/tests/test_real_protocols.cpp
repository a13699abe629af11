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

// Every protocol end to end on the real curve at small sizes.  The deeper
// statistics live in the toy-backend suites and the acceptance run; this is
// the cross-backend sanity layer.

#include "gtest/gtest.h"
#include "test_helpers.hpp"
#include "vermat/bn256_suite.hpp"
#include "vermat/dotprod.hpp"
#include "vermat/fg.hpp"
#include "vermat/freivalds.hpp"
#include "vermat/pvmat.hpp"
#include "vermat/smallfield.hpp"
#include "vermat/bench.hpp"
#include "vermat/spmv.hpp"

namespace vermat {
namespace {

using F = Bn256ScalarField;

TEST(RealProtocols, Freivalds) {
    Bn256Suite suite;
    auto f = suite.scalar_field();
    SeededRng rng(201);
    Matrix<F> A(DenseMat<F>::random(f, 6, 6, rng));
    auto ch = challenge_private(A, rng);
    auto x = Vec<F>::random(f, 6, rng);
    auto y = A.matvec(x);
    EXPECT_TRUE(verify_one(ch, x, y));
    auto ybad = y;
    ybad[2] = f.add(ybad[2], f.one());
    EXPECT_FALSE(verify_one(ch, x, ybad));

    std::vector<Vec<F>> xs{x}, ys{y};
    auto fs = challenge_fs(A, xs, ys);
    EXPECT_TRUE(verify_one(fs, x, y));
    auto fs2 = challenge_fs(A, xs, ys);
    EXPECT_EQ(fs.u, fs2.u);  // deterministic on the real field too
}

TEST(RealProtocols, FgCompleteAndSound) {
    Bn256Suite suite;
    auto f = suite.scalar_field();
    SeededRng rng(202);
    // 100 honest instances at small dims: completeness probability 1.
    for (int it = 0; it < 100; ++it) {
        size_t m = 1 + rng.uniform_below(3), n = 1 + rng.uniform_below(3);
        Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
        auto keys = fg_keygen(suite, A, rng);
        auto x = Vec<F>::random(f, n, rng);
        auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
        auto pf = fg_compute(suite, A, keys.W, x);
        auto y = fg_verify(suite, keys.a, std::span(vkx), pf);
        ASSERT_TRUE(y.has_value());
        EXPECT_EQ(*y, A.matvec(x));
        if (it == 0) {
            auto bad = pf;
            bad.y[0] = f.add(bad.y[0], f.one());
            EXPECT_FALSE(fg_verify(suite, keys.a, std::span(vkx), bad).has_value());
        }
    }
}

// The speed-up column turns on as soon as both sides are measured; already
// above 1 at 64x64 on the real curve.
TEST(RealProtocols, BenchSpeedupColumnAtSixtyFour) {
    Bn256Suite suite;
    auto rows_pv = bench_protocol(suite, "pvmat", 64, 64, 1, 9);
    auto rows_fg = bench_protocol(suite, "fg", 64, 64, 1, 9);
    std::vector<BenchRow> rows;
    rows.insert(rows.end(), rows_pv.begin(), rows_pv.end());
    rows.insert(rows.end(), rows_fg.begin(), rows_fg.end());
    annotate_speedups(rows);
    bool found = false;
    for (const auto& r : rows) {
        if (r.protocol == "pvmat" && r.phase == "compute") {
            EXPECT_GT(r.speedup_vs_fg, 1.0);
            found = true;
        }
        if (r.phase == "compute") EXPECT_GE(r.overhead_ratio, 1.0);
    }
    EXPECT_TRUE(found);
}

TEST(RealProtocols, SpmvCompleteAndSound) {
    Bn256Suite suite;
    auto f = suite.scalar_field();
    SeededRng rng(203);
    Matrix<F> A(testing::random_sparse(f, 8, 8, 20, rng));
    auto keys = spmv_keygen(suite, A, rng);
    auto x = Vec<F>::random(f, 8, rng);
    auto pf = spmv_compute(suite, A, std::span(keys.omega), x);
    auto resp = spmv_trustee(suite, keys.secrets, x, pf.y);
    auto y = spmv_verify(suite, pf, resp);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(*y, A.matvec(x));
    auto bad = pf;
    bad.zeta = testing::tamper_g1(suite, bad.zeta, rng);
    EXPECT_FALSE(spmv_verify(suite, bad, resp).has_value());
}

TEST(RealProtocols, DotProducts) {
    Bn256Suite suite;
    auto f = suite.scalar_field();
    SeededRng rng(204);
    const size_t m = 10;
    auto keys = rank1_keygen(suite, m, rng, 4);
    auto y = Vec<F>::random(f, m, rng);
    auto out = rank1_dp(suite, keys, y, rng);
    ASSERT_TRUE(out.has_value());
    // Oracle: direct dot product, one exponentiation.
    auto expect = suite.gt_exp(suite.gt(), rank1_u(suite, keys, m).dot(y));
    EXPECT_EQ(*out, expect);

    auto u = Vec<F>::random(f, m, rng);
    auto gkeys = gen_keygen(suite, u, 3, 4, rng);
    auto gout = gen_dp(suite, gkeys, y, rng);
    ASSERT_TRUE(gout.has_value());
    EXPECT_EQ(*gout, suite.g1_exp(suite.g1(), u.dot(y)));

    auto ckeys = chunked_keygen(suite, u, 0.6, rng);
    auto cout_ = chunked_dp(suite, ckeys, y, rng);
    ASSERT_TRUE(cout_.has_value());
    EXPECT_EQ(*cout_, suite.g1_exp(suite.g1(), u.dot(y)));

    auto Y = reshape_rhs(y, gkeys.b2, gkeys.b1);
    auto C = gen_compute(suite, gkeys.ek_U, Y);
    C.at(0, 1) = testing::tamper_g1(suite, C.at(0, 1), rng);
    EXPECT_FALSE(gen_verify(suite, gkeys, Y, C, rng).has_value());
}

TEST(RealProtocols, PvmatCompleteAndSound) {
    Bn256Suite suite;
    auto f = suite.scalar_field();
    SeededRng rng(205);
    const size_t m = 9, n = 7;
    auto prm = pvmat_default_params(m, n);
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    auto keys = pvmat_keygen(suite, A, prm, rng);
    auto x = Vec<F>::random(f, n, rng);
    auto pf = pvmat_compute(suite, keys.ek, x);
    auto res = pvmat_verify(suite, keys.vk, x, pf, rng, PvmatVerifyMode::testing);
    ASSERT_TRUE(res.accepted());
    EXPECT_EQ(*res.y, A.matvec(x));
    for (bool ok : res.passed) EXPECT_TRUE(ok);

    auto bad = pf;
    bad.y[1] = f.add(bad.y[1], f.one());
    EXPECT_FALSE(pvmat_verify(suite, keys.vk, x, bad, rng).accepted());
    auto bad2 = pf;
    bad2.C.e[0] = testing::tamper_g1(suite, bad2.C.e[0], rng);
    EXPECT_FALSE(pvmat_verify(suite, keys.vk, x, bad2, rng).accepted());
}

TEST(RealProtocols, SmallFieldOverRealGroupOrder) {
    Bn256Suite suite;
    SeededRng rng(206);
    SmallPrimeField fp(251);  // an 8-bit data field
    Matrix<SmallPrimeField> A(DenseMat<SmallPrimeField>::random(fp, 6, 6, rng));
    auto keys = sf_keygen(suite, A, rng);
    // Plenty of mask room under a 256-bit group order.
    EXPECT_GT(keys.sec_bits_alpha, 80u);
    auto x = Vec<SmallPrimeField>::random(fp, 6, rng);
    auto out = sf_verify_flow(suite, keys, A, x);
    ASSERT_TRUE(out.has_value());
    EXPECT_EQ(*out, A.matvec(x));

    auto pf = sf_compute(suite, A, std::span(keys.omega), x);
    pf.y[3] += 1;
    auto resp = sf_trustee(suite, keys, x, pf.y);
    EXPECT_FALSE(sf_verify(suite, keys.p, pf, resp).has_value());
}

}  // namespace
}  // namespace vermat
