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

#include "gtest/gtest.h"
#include "test_helpers.hpp"
#include "vermat/fg.hpp"
#include "vermat/spmv.hpp"
#include "vermat/toy_suite.hpp"

namespace vermat {
namespace {

using F = SmallPrimeField;
using testing::mat_of;
using testing::random_sparse;
using testing::tamper_g1;
using testing::vec_of;

//---------------------------------------------------------------- spmv

TEST(Spmv, KeygenWorkedTranscript) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    Matrix<F> A(mat_of(f, 2, 2, {1, 2, 3, 4}));
    auto keys = spmv_keygen_with(
        suite, A, {vec_of(f, {1, 1}), vec_of(f, {0, 0})});
    // u^T A = (4, 6): toy exponentiation of g1 = 1 gives (4, 6).
    ASSERT_EQ(keys.omega.size(), 2u);
    EXPECT_EQ(keys.omega[0].v, 4u);
    EXPECT_EQ(keys.omega[1].v, 6u);
}

TEST(Spmv, KeygenZeroMatrix) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    Matrix<F> Z(DenseMat<F>(f, 2, 3));
    auto keys = spmv_keygen_with(
        suite, Z, {vec_of(f, {5, 6}), vec_of(f, {0, 0, 0})});
    for (auto w : keys.omega) EXPECT_EQ(w, suite.g1_id());
}

TEST(Spmv, KeygenCostSparse) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(21);
    Matrix<F> A(random_sparse(f, 4, 5, 3, rng));
    ASSERT_EQ(A.mu(), 6u);
    CounterScope sc(Role::preparator);
    spmv_keygen(suite, A, rng);
    EXPECT_EQ(sc.counts().field_ops, A.mu() + A.cols());
    EXPECT_LE(sc.counts().g1_exp, A.cols());
}

TEST(Spmv, ComputeWorkedTranscript) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    Matrix<F> A(mat_of(f, 2, 2, {1, 2, 3, 4}));
    auto keys = spmv_keygen_with(
        suite, A, {vec_of(f, {1, 1}), vec_of(f, {0, 0})});
    auto pf = spmv_compute(suite, A, std::span(keys.omega), vec_of(f, {1, 1}));
    EXPECT_EQ(pf.y, vec_of(f, {3, 7}));
    EXPECT_EQ(pf.zeta.v, 10u);

    auto pf0 = spmv_compute(suite, A, std::span(keys.omega), vec_of(f, {0, 0}));
    EXPECT_TRUE(pf0.y.is_zero());
    EXPECT_EQ(pf0.zeta, suite.g1_id());

    auto pfe = spmv_compute(suite, A, std::span(keys.omega), vec_of(f, {0, 1}));
    EXPECT_EQ(pfe.zeta, keys.omega[1]);  // unit vector picks one factor
}

TEST(Spmv, TrusteeWorkedTranscript) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    auto secrets = SpmvSecrets<ToySuite>{vec_of(f, {1, 1}), vec_of(f, {0, 0})};
    auto resp = spmv_trustee(suite, secrets, vec_of(f, {1, 1}), vec_of(f, {3, 7}));
    EXPECT_EQ(resp.h, 10u);
    EXPECT_EQ(resp.d, 0u);
    EXPECT_EQ(resp.eta.v, 10u);

    auto zero = spmv_trustee(suite, secrets, vec_of(f, {0, 0}), vec_of(f, {0, 0}));
    EXPECT_EQ(zero.eta, suite.gt_id());
}

TEST(Spmv, HonestVerifyAndTrusteeCost) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(22);
    const size_t m = 9, n = 6;
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    auto keys = spmv_keygen(suite, A, rng);
    auto x = Vec<F>::random(f, n, rng);
    auto pf = spmv_compute(suite, A, std::span(keys.omega), x);
    CounterScope tc(Role::trustee);
    auto resp = spmv_trustee(suite, keys.secrets, x, pf.y);
    EXPECT_LE(tc.counts().field_ops, 2 * (m + n + 1));
    EXPECT_EQ(tc.counts().gt_exp, 1u);
    CounterScope vc(Role::verifier);
    auto out = spmv_verify(suite, pf, resp);
    EXPECT_EQ(vc.counts().pairings, 1u);
    ASSERT_TRUE(out.has_value());
    EXPECT_EQ(*out, pf.y);
}

TEST(Spmv, Completeness) {
    for (uint64_t q : {101ull, 2503ull}) {
        auto suite = suite_toy(q);
        F f = suite.scalar_field();
        SeededRng rng(23);
        for (int it = 0; it < 100; ++it) {
            size_t m = 1 + rng.uniform_below(8), n = 1 + rng.uniform_below(8);
            Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
            auto keys = spmv_keygen(suite, A, rng);
            auto x = Vec<F>::random(f, n, rng);
            auto pf = spmv_compute(suite, A, std::span(keys.omega), x);
            auto resp = spmv_trustee(suite, keys.secrets, x, pf.y);
            auto out = spmv_verify(suite, pf, resp);
            ASSERT_TRUE(out.has_value());
            EXPECT_EQ(*out, A.matvec(x));
        }
    }
}

TEST(Spmv, ZetaTamperAlwaysRejected) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(24);
    Matrix<F> A(mat_of(f, 2, 2, {1, 2, 3, 4}));
    auto keys = spmv_keygen_with(suite, A, {vec_of(f, {1, 1}), vec_of(f, {0, 0})});
    auto x = vec_of(f, {1, 1});
    auto pf = spmv_compute(suite, A, std::span(keys.omega), x);
    auto resp = spmv_trustee(suite, keys.secrets, x, pf.y);
    // e(zeta * g1; g2) = eta * gT != eta.
    pf.zeta = suite.g1_op(pf.zeta, suite.g1());
    EXPECT_FALSE(spmv_verify(suite, pf, resp).has_value());
}

TEST(Spmv, TamperStatistics) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(25);
    const size_t m = 8, n = 8;
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    auto keys = spmv_keygen(suite, A, rng);
    auto x = Vec<F>::random(f, n, rng);
    auto honest = spmv_compute(suite, A, std::span(keys.omega), x);

    int accept_y = 0, accept_zeta = 0;
    const int trials = 2000;
    for (int it = 0; it < trials; ++it) {
        auto pf = honest;
        size_t i = rng.uniform_below(m);
        pf.y[i] = f.add(pf.y[i], f.random_nonzero(rng));
        auto resp = spmv_trustee(suite, keys.secrets, x, pf.y);
        if (spmv_verify(suite, pf, resp).has_value()) ++accept_y;

        auto pf2 = honest;
        pf2.zeta = tamper_g1(suite, pf2.zeta, rng);
        auto resp2 = spmv_trustee(suite, keys.secrets, x, pf2.y);
        if (spmv_verify(suite, pf2, resp2).has_value()) ++accept_zeta;
    }
    EXPECT_LE(accept_y, trials / 20);     // expected ~1/q
    EXPECT_LE(accept_zeta, trials / 20);  // expected 0
}

// Prover field work is exactly mu(A); nothing proportional to m*n for
// sparse inputs.
TEST(Spmv, SparsitySensitivity) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(26);
    const size_t m = 64, n = 64;
    Matrix<F> A(random_sparse(f, m, n, 3 * n, rng));
    auto keys = spmv_keygen(suite, A, rng);
    auto x = Vec<F>::random(f, n, rng);
    CounterScope pc(Role::prover);
    spmv_compute(suite, A, std::span(keys.omega), x);
    EXPECT_EQ(pc.counts().field_ops, A.mu());
    EXPECT_LT(A.mu(), uint64_t(m) * n / 4);
}

//---------------------------------------------------------------- fg

TEST(Fg, KeygenWorkedTranscript) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    Matrix<F> A(mat_of(f, 1, 1, {1}));
    FgSecrets<ToySuite> sec{1,
                            {vec_of(f, {1}), vec_of(f, {1}), vec_of(f, {1}),
                             vec_of(f, {1})}};
    auto keys = fg_keygen_with(suite, A, sec);
    EXPECT_EQ(keys.W.at(0, 0).v, 3u);  // g1^{1+1+1}
    EXPECT_EQ(keys.a.v, 1u);           // gT^1
}

TEST(Fg, KeygenZeroMatrixZeroSRho) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    Matrix<F> Z(DenseMat<F>(f, 2, 2));
    FgSecrets<ToySuite> sec{5,
                            {vec_of(f, {0, 0}), vec_of(f, {0, 0}),
                             vec_of(f, {3, 4}), vec_of(f, {5, 6})}};
    auto keys = fg_keygen_with(suite, Z, sec);
    for (auto w : keys.W.e) EXPECT_EQ(w, suite.g1_id());
}

TEST(Fg, KeygenEntrywiseOracle) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(31);
    Matrix<F> A(DenseMat<F>::random(f, 2, 2, rng));
    auto keys = fg_keygen(suite, A, rng);
    auto D = A.to_dense();
    const auto& s = keys.secrets;
    const auto& tk = s.trustee;
    for (size_t i = 0; i < 2; ++i) {
        for (size_t j = 0; j < 2; ++j) {
            auto e = f.add(f.mul(s.alpha, D.at(i, j)),
                           f.add(f.mul(tk.s[i], tk.t[j]), f.mul(tk.rho[i], tk.tau[j])));
            EXPECT_EQ(suite.dlog_g1(keys.W.at(i, j)), e);
        }
    }
}

TEST(Fg, ProbgenWorkedAndZero) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    Matrix<F> A(mat_of(f, 1, 1, {1}));
    FgSecrets<ToySuite> sec{1,
                            {vec_of(f, {1}), vec_of(f, {1}), vec_of(f, {1}),
                             vec_of(f, {1})}};
    auto keys = fg_keygen_with(suite, A, sec);
    auto vkx = fg_probgen(suite, keys.secrets.trustee, vec_of(f, {1}));
    ASSERT_EQ(vkx.size(), 1u);
    EXPECT_EQ(vkx[0].v, 2u);  // gT^{1*1 + 1*1}

    auto vk0 = fg_probgen(suite, keys.secrets.trustee, vec_of(f, {0}));
    EXPECT_EQ(vk0[0], suite.gt_id());
}

// e(z[i]; g2) = a^{y[i]} VK_x[i] holds on honest runs; VK_x as a GT power
// equals the pairing form e(g1^{s d + rho delta}; g2).
TEST(Fg, EndToEndIdentityAndVkxEquivalence) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(32);
    Matrix<F> A(DenseMat<F>::random(f, 3, 4, rng));
    auto keys = fg_keygen(suite, A, rng);
    auto x = Vec<F>::random(f, 4, rng);
    auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
    auto pf = fg_compute(suite, A, keys.W, x);
    for (size_t i = 0; i < 3; ++i) {
        auto lhs = suite.pair(pf.z[i], suite.g2());
        auto rhs = suite.gt_op(suite.gt_exp(keys.a, pf.y[i]), vkx[i]);
        EXPECT_EQ(lhs, rhs);
    }
    // Pairing-form VK_x.
    const auto& tk = keys.secrets.trustee;
    auto d = tk.t.dot(x);
    auto delta = tk.tau.dot(x);
    for (size_t i = 0; i < 3; ++i) {
        auto e = f.add(f.mul(tk.s[i], d), f.mul(tk.rho[i], delta));
        EXPECT_EQ(vkx[i], suite.pair(suite.g1_exp(suite.g1(), e), suite.g2()));
    }
}

TEST(Fg, Completeness) {
    for (uint64_t q : {101ull, 2503ull}) {
        auto suite = suite_toy(q);
        F f = suite.scalar_field();
        SeededRng rng(33);
        for (int it = 0; it < 100; ++it) {
            size_t m = 1 + rng.uniform_below(6), n = 1 + rng.uniform_below(6);
            Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
            auto keys = fg_keygen(suite, A, rng);
            auto x = Vec<F>::random(f, n, rng);
            auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
            auto pf = fg_compute(suite, A, keys.W, x);
            auto out = fg_verify(suite, keys.a, std::span(vkx), pf);
            ASSERT_TRUE(out.has_value());
            EXPECT_EQ(*out, A.matvec(x));
        }
    }
}

TEST(Fg, SingleCoordinateTampersRejected) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(34);
    Matrix<F> A(DenseMat<F>::random(f, 3, 3, rng));
    FgSecrets<ToySuite> sec{7,  // alpha != 0 so y-tampers shift the equation
                            {Vec<F>::random(f, 3, rng), Vec<F>::random(f, 3, rng),
                             Vec<F>::random(f, 3, rng), Vec<F>::random(f, 3, rng)}};
    auto keys = fg_keygen_with(suite, A, sec);
    auto x = Vec<F>::random(f, 3, rng);
    auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
    auto honest = fg_compute(suite, A, keys.W, x);

    auto pf = honest;
    pf.y[1] = f.add(pf.y[1], f.one());
    EXPECT_FALSE(fg_verify(suite, keys.a, std::span(vkx), pf).has_value());

    auto pf2 = honest;
    pf2.z[2] = tamper_g1(suite, pf2.z[2], rng);
    EXPECT_FALSE(fg_verify(suite, keys.a, std::span(vkx), pf2).has_value());
}

TEST(Fg, TamperStatistics) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(35);
    const size_t m = 6, n = 6;
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    auto keys = fg_keygen(suite, A, rng);
    auto x = Vec<F>::random(f, n, rng);
    auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
    auto honest = fg_compute(suite, A, keys.W, x);
    int accept_y = 0, accept_z = 0;
    const int trials = 2000;
    for (int it = 0; it < trials; ++it) {
        auto pf = honest;
        pf.y[rng.uniform_below(m)] = f.random(rng);  // may equal the old value
        bool changed = !(pf.y == honest.y);
        if (changed && fg_verify(suite, keys.a, std::span(vkx), pf)) ++accept_y;
        auto pf2 = honest;
        pf2.z[rng.uniform_below(m)] = tamper_g1(suite, pf2.z[rng.uniform_below(m)], rng);
        if (fg_verify(suite, keys.a, std::span(vkx), pf2)) ++accept_z;
    }
    EXPECT_LE(accept_y, trials / 20);
    EXPECT_LE(accept_z, trials / 20);
}

// Cost shape: prover group exponentiations quadratic (mn), verifier pairings
// linear (m).
TEST(Fg, CostShape) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(36);
    const size_t m = 16, n = 16;
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    CounterScope kc(Role::preparator);
    auto keys = fg_keygen(suite, A, rng);
    EXPECT_LE(kc.counts().g1_exp, uint64_t(m) * n);
    EXPECT_GE(kc.counts().g1_exp, uint64_t(m) * n * 9 / 10);

    auto x = testing::random_nonzero_vec(f, n, rng);
    auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
    CounterScope pc(Role::prover);
    auto pf = fg_compute(suite, A, keys.W, x);
    EXPECT_EQ(pc.counts().g1_exp, uint64_t(m) * n);  // quadratic

    CounterScope vc(Role::verifier);
    fg_verify(suite, keys.a, std::span(vkx), pf);
    EXPECT_EQ(vc.counts().pairings, m);
    EXPECT_LE(vc.counts().gt_exp, m);
}

// The three attacks outside the adversary model, demonstrating its limits.
TEST(Fg, AdversaryModelLimits) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(37);
    const size_t m = 3, n = 3;
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    Matrix<F> Aprime(DenseMat<F>::random(f, m, n, rng));
    auto x = Vec<F>::random(f, n, rng);

    // Malicious preparator: keys for A' pass verification, but for A' x.
    auto keys = fg_keygen(suite, Aprime, rng);
    auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
    auto pf = fg_compute(suite, Aprime, keys.W, x);
    auto out = fg_verify(suite, keys.a, std::span(vkx), pf);
    ASSERT_TRUE(out.has_value());
    EXPECT_NE(*out, A.matvec(x));  // accepted, yet not y = A x

    // Malicious trustee: a wrong VK_x makes an honest proof fail.
    auto keys2 = fg_keygen(suite, A, rng);
    auto vkx2 = fg_probgen(suite, keys2.secrets.trustee, x);
    vkx2[0] = suite.gt_op(vkx2[0], suite.gt());
    auto pf2 = fg_compute(suite, A, keys2.W, x);
    EXPECT_FALSE(fg_verify(suite, keys2.a, std::span(vkx2), pf2).has_value());

    // Colluding server and trustee: VK'_x[i] = e(z'[i]; g2) / a^{y'[i]}
    // matches any claimed y'.
    auto pf3 = fg_compute(suite, A, keys2.W, x);
    pf3.y[0] = f.add(pf3.y[0], f.one());  // wrong output
    pf3.z[1] = tamper_g1(suite, pf3.z[1], rng);
    std::vector<ToySuite::GTElt> forged;
    for (size_t i = 0; i < m; ++i) {
        auto num = suite.pair(pf3.z[i], suite.g2());
        auto den = suite.gt_exp(keys2.a, pf3.y[i]);
        forged.push_back(suite.gt_op(num, suite.gt_inv(den)));
    }
    auto out3 = fg_verify(suite, keys2.a, std::span(forged), pf3);
    ASSERT_TRUE(out3.has_value());
    EXPECT_NE(*out3, A.matvec(x));  // the model excludes this collusion
}

}  // namespace
}  // namespace vermat
