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
#include "vermat/bn256_suite.hpp"
#include "vermat/protocol_io.hpp"
#include "vermat/toy_suite.hpp"

namespace vermat {
namespace {

using F = SmallPrimeField;

TEST(Container, SpmvRoundTripFiftyInstances) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(90);
    for (int it = 0; it < 50; ++it) {
        size_t m = 1 + rng.uniform_below(6), n = 1 + rng.uniform_below(6);
        Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
        auto keys = spmv_keygen(suite, A, rng);
        auto x = Vec<F>::random(f, n, rng);
        auto pf = spmv_compute(suite, A, std::span(keys.omega), x);
        auto resp = spmv_trustee(suite, keys.secrets, x, pf.y);

        auto ek2 = load_spmv_ek(suite, save_spmv_ek(suite, A, std::span(keys.omega)));
        EXPECT_EQ(ek2.A.to_dense(), A.to_dense());
        EXPECT_EQ(ek2.omega, keys.omega);
        auto tk2 = load_spmv_trustee(suite, save_spmv_trustee(suite, keys.secrets));
        EXPECT_EQ(tk2.u, keys.secrets.u);
        EXPECT_EQ(tk2.t, keys.secrets.t);
        auto pf2 = load_spmv_proof(suite, save_spmv_proof(suite, pf));
        EXPECT_EQ(pf2.y, pf.y);
        EXPECT_EQ(pf2.zeta, pf.zeta);
        auto r2 = load_spmv_response(suite, save_spmv_response(suite, resp));
        EXPECT_EQ(r2.eta, resp.eta);
        EXPECT_EQ(r2.h, resp.h);
    }
}

TEST(Container, PvmatRoundTripFiftyInstances) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(91);
    for (int it = 0; it < 50; ++it) {
        size_t m = 1 + rng.uniform_below(8), n = 1 + rng.uniform_below(8);
        auto prm = pvmat_default_params(m, n);
        Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
        auto keys = pvmat_keygen(suite, A, prm, rng);
        auto x = Vec<F>::random(f, n, rng);
        auto pf = pvmat_compute(suite, keys.ek, x);

        auto ek2 = load_pvmat_ek(suite, save_pvmat_ek(suite, keys.ek));
        EXPECT_EQ(ek2.omega, keys.ek.omega);
        EXPECT_EQ(ek2.g1_deltaV, keys.ek.g1_deltaV);
        auto vk2 = load_pvmat_vk(suite, save_pvmat_vk(suite, keys.vk));
        EXPECT_EQ(vk2.g2_mu, keys.vk.g2_mu);
        EXPECT_EQ(vk2.g2_gamma, keys.vk.g2_gamma);
        auto pf2 = load_pvmat_proof(suite, save_pvmat_proof(suite, pf));
        EXPECT_EQ(pf2.y, pf.y);
        EXPECT_EQ(pf2.zeta, pf.zeta);
        EXPECT_EQ(pf2.C, pf.C);

        // Loaded keys still verify loaded proofs.
        auto res = pvmat_verify(suite, vk2, x, pf2, rng);
        ASSERT_TRUE(res.accepted());
    }
}

TEST(Container, FgAndDotProdAndSmallfieldRoundTrip) {
    auto suite = suite_toy(2503);
    F f = suite.scalar_field();
    SeededRng rng(92);
    Matrix<F> A(DenseMat<F>::random(f, 3, 4, rng));
    auto fkeys = fg_keygen(suite, A, rng);
    auto x = Vec<F>::random(f, 4, rng);
    auto vkx = fg_probgen(suite, fkeys.secrets.trustee, x);
    auto fpf = fg_compute(suite, A, fkeys.W, x);

    auto ek2 = load_fg_ek(suite, save_fg_ek(suite, A, fkeys.W));
    EXPECT_EQ(ek2.W, fkeys.W);
    auto a2 = load_fg_vk(suite, save_fg_vk(suite, 3, 4, fkeys.a));
    EXPECT_EQ(a2, fkeys.a);
    auto tk2 = load_fg_trustee(suite, save_fg_trustee(suite, fkeys.secrets.trustee));
    EXPECT_EQ(tk2.tau, fkeys.secrets.trustee.tau);
    auto vkx2 = load_fg_vkx(suite, save_fg_vkx(suite, std::span(vkx)));
    EXPECT_EQ(vkx2, vkx);
    auto fpf2 = load_fg_proof(suite, save_fg_proof(suite, fpf));
    EXPECT_EQ(fpf2.z, fpf.z);

    auto r1k = rank1_keygen(suite, 12, rng);
    auto vkr = load_rank1_vk(suite, save_rank1_vk(suite, r1k));
    EXPECT_EQ(vkr.ek_eta, r1k.ek_eta);
    EXPECT_EQ(vkr.vk_mu, r1k.vk_mu);
    auto y = Vec<F>::random(f, 12, rng);
    auto Y = reshape_rhs(y, r1k.b2, r1k.b1);
    auto z = rank1_compute(suite, std::span(r1k.ek_eta), Y);
    auto z2 = load_rank1_proof(suite, save_rank1_proof(suite, std::span(z)));
    EXPECT_EQ(z2, z);
    // A verifier working purely from the container accepts.
    auto out = rank1_verify(suite, vkr, Y, std::span(z2), rng);
    ASSERT_TRUE(out.has_value());

    auto u = Vec<F>::random(f, 12, rng);
    auto gk = gen_keygen(suite, u, 3, 4, rng);
    auto gvk = load_gendp_vk(suite, save_gendp_vk(suite, gk));
    EXPECT_EQ(gvk.vk_wU, gk.vk_wU);
    auto gek = load_gendp_ek(suite, save_gendp_ek(suite, gk));
    EXPECT_EQ(gek, gk.ek_U);
    auto Yg = reshape_rhs(y, 4, 3);
    auto C = gen_compute(suite, gek, Yg);
    auto C2 = load_gendp_proof(suite, save_gendp_proof(suite, C));
    EXPECT_EQ(C2, C);

    SmallPrimeField fp5(5);
    Matrix<SmallPrimeField> As(DenseMat<SmallPrimeField>::random(fp5, 2, 2, rng));
    auto sk = sf_keygen(suite, As, rng);
    auto [As2, omega2] = load_sf_ek(suite, save_sf_ek(suite, As, sk));
    EXPECT_EQ(As2.to_dense(), As.to_dense());
    EXPECT_EQ(omega2, sk.omega);
    auto tk3 = load_sf_trustee(suite, save_sf_trustee(suite, sk));
    EXPECT_EQ(tk3.u, sk.u);
    EXPECT_EQ(tk3.t, sk.t);
    auto xs = Vec<SmallPrimeField>::random(fp5, 2, rng);
    auto spf = sf_compute(suite, As, std::span(sk.omega), xs);
    auto spf2 = load_sf_proof(suite, save_sf_proof(suite, spf));
    EXPECT_EQ(spf2.y, spf.y);
    auto sresp = sf_trustee(suite, sk, xs, spf.y);
    auto sresp2 = load_sf_response(suite, save_sf_response(suite, sresp));
    EXPECT_EQ(sresp2.h, sresp.h);
    EXPECT_EQ(sresp2.eta, sresp.eta);
}

TEST(Container, FsChallengeRoundTrip) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(93);
    Matrix<F> A(DenseMat<F>::random(f, 3, 3, rng));
    std::vector<Vec<F>> xs{Vec<F>::random(f, 3, rng), Vec<F>::random(f, 3, rng)};
    std::vector<Vec<F>> ys{A.matvec(xs[0]), A.matvec(xs[1])};
    auto ch = challenge_fs(A, xs, ys);
    auto ch2 = load_fs_challenge(suite, save_fs_challenge(suite, ch));
    EXPECT_EQ(ch2.u, ch.u);
    EXPECT_EQ(ch2.w, ch.w);
    EXPECT_EQ(ch2.pair_digests, ch.pair_digests);
    EXPECT_TRUE(verify_one(ch2, xs[1], ys[1]));
    EXPECT_THROW(verify_one(ch2, xs[0], ys[1]), param_error);
}

TEST(Container, DigestTamperDetected) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(94);
    Matrix<F> A(DenseMat<F>::random(f, 3, 3, rng));
    auto keys = spmv_keygen(suite, A, rng);
    auto data = save_spmv_trustee(suite, keys.secrets);
    for (int it = 0; it < 20; ++it) {
        auto bad = data;
        size_t pos = rng.uniform_below(bad.size());
        bad[pos] ^= uint8_t(1 + rng.uniform_below(255));
        EXPECT_THROW(load_spmv_trustee(suite, bad), format_error);
    }
}

TEST(Container, MismatchesRejected) {
    auto suite = suite_toy(101);
    F f = suite.scalar_field();
    SeededRng rng(95);
    Matrix<F> A(DenseMat<F>::random(f, 2, 2, rng));
    auto keys = spmv_keygen(suite, A, rng);
    auto data = save_spmv_trustee(suite, keys.secrets);
    // Wrong role.
    EXPECT_THROW(load_spmv_proof(suite, data), format_error);
    // Wrong protocol.
    EXPECT_THROW(load_fg_trustee(suite, data), format_error);
    // Wrong suite modulus.
    auto other = suite_toy(2503);
    EXPECT_THROW(load_spmv_trustee(other, data), format_error);
    // Garbage.
    bytes junk{1, 2, 3};
    EXPECT_THROW(load_spmv_trustee(suite, junk), format_error);
}

TEST(Container, RealBackendRoundTrip) {
    auto suite = suite_real();
    auto f = suite.scalar_field();
    SeededRng rng(96);
    using FR = Bn256ScalarField;
    Matrix<FR> A(DenseMat<FR>::random(f, 3, 3, rng));
    auto prm = pvmat_default_params(3, 3);
    auto keys = pvmat_keygen(suite, A, prm, rng);
    auto x = Vec<FR>::random(f, 3, rng);
    auto pf = pvmat_compute(suite, keys.ek, x);
    auto vk2 = load_pvmat_vk(suite, save_pvmat_vk(suite, keys.vk));
    auto pf2 = load_pvmat_proof(suite, save_pvmat_proof(suite, pf));
    EXPECT_EQ(pf2.zeta, pf.zeta);
    auto res = pvmat_verify(suite, vk2, x, pf2, rng);
    ASSERT_TRUE(res.accepted());
    EXPECT_EQ(*res.y, pf.y);
}

}  // namespace
}  // namespace vermat
