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
#include "vermat/freivalds.hpp"
#include "vermat/toy_suite.hpp"

namespace vermat {
namespace {

using F = SmallPrimeField;
using testing::mat_of;
using testing::vec_of;

TEST(Freivalds, ChallengeWorkedExample) {
    F f(101);
    Matrix<F> A(mat_of(f, 2, 2, {1, 2, 3, 4}));
    auto ch = challenge_private_with(A, vec_of(f, {0, 1}));
    EXPECT_EQ(ch.w, vec_of(f, {3, 4}));
}

TEST(Freivalds, ChallengeZeroAndIdentityMatrix) {
    F f(101);
    SeededRng rng(2);
    Matrix<F> Z(DenseMat<F>(f, 3, 4));
    auto chz = challenge_private(Z, rng);
    EXPECT_TRUE(chz.w.is_zero());
    Matrix<F> I(DenseMat<F>::identity(f, 4));
    auto chi = challenge_private(I, rng);
    EXPECT_EQ(chi.w, chi.u);
}

TEST(Freivalds, VerifyWorkedExample) {
    F f(101);
    Matrix<F> A(mat_of(f, 2, 2, {1, 2, 3, 4}));
    auto ch = challenge_private_with(A, vec_of(f, {0, 1}));
    // w^T x = 7 = u^T y.
    EXPECT_TRUE(verify_one(ch, vec_of(f, {1, 1}), vec_of(f, {3, 7})));
    EXPECT_FALSE(verify_one(ch, vec_of(f, {1, 1}), vec_of(f, {3, 8})));
    // Orthogonal error is invisible by construction: u = (0,1), d = (9,0).
    EXPECT_TRUE(verify_one(ch, vec_of(f, {1, 1}), vec_of(f, {3 + 9, 7})));
}

TEST(Freivalds, VerifyCost) {
    F f(101);
    SeededRng rng(3);
    const size_t m = 13, n = 7;
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    auto ch = challenge_private(A, rng);
    auto x = Vec<F>::random(f, n, rng);
    auto y = A.matvec(x);
    CounterScope sc;
    verify_one(ch, x, y);
    EXPECT_EQ(sc.counts().field_ops, 2 * n + 2 * m);
}

TEST(Freivalds, Completeness) {
    F f(101);
    SeededRng rng(4);
    for (int it = 0; it < 100; ++it) {
        size_t m = 1 + rng.uniform_below(8), n = 1 + rng.uniform_below(8);
        Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
        auto ch = challenge_private(A, rng);
        auto x = Vec<F>::random(f, n, rng);
        EXPECT_TRUE(verify_one(ch, x, A.matvec(x)));
    }
}

// Expected false-accept rate for y' = y + d, d uniform nonzero, is ~1/q.
TEST(Freivalds, DetectionRateStatistics) {
    F f(101);
    SeededRng rng(5);
    const size_t m = 4, n = 4;
    Matrix<F> A(DenseMat<F>::random(f, m, n, rng));
    auto x = Vec<F>::random(f, n, rng);
    auto y = A.matvec(x);
    int accepts = 0;
    const int trials = 10000;
    for (int it = 0; it < trials; ++it) {
        auto ch = challenge_private(A, rng);
        Vec<F> d(f, m);
        do {
            d = Vec<F>::random(f, m, rng);
        } while (d.is_zero());
        if (verify_one(ch, x, y.add(d))) ++accepts;
    }
    double frac = double(accepts) / trials;
    EXPECT_GE(frac, 0.004);
    EXPECT_LE(frac, 0.016);
}

TEST(FiatShamir, Deterministic) {
    F f(101);
    SeededRng rng(6);
    Matrix<F> A(DenseMat<F>::random(f, 3, 3, rng));
    std::vector<Vec<F>> xs{Vec<F>::random(f, 3, rng), Vec<F>::random(f, 3, rng)};
    std::vector<Vec<F>> ys{A.matvec(xs[0]), A.matvec(xs[1])};
    auto c1 = challenge_fs(A, xs, ys);
    auto c2 = challenge_fs(A, xs, ys);
    EXPECT_EQ(c1.u, c2.u);
    EXPECT_EQ(c1.w, c2.w);
    EXPECT_EQ(c1.transcript_digest, c2.transcript_digest);
}

TEST(FiatShamir, PerturbedTranscriptChangesChallenge) {
    F f(101);
    SeededRng rng(7);
    Matrix<F> A(DenseMat<F>::random(f, 3, 3, rng));
    std::vector<Vec<F>> xs{Vec<F>::random(f, 3, rng)};
    std::vector<Vec<F>> ys{A.matvec(xs[0])};
    auto base = challenge_fs(A, xs, ys);
    for (int it = 0; it < 100; ++it) {
        auto ys2 = ys;
        size_t i = rng.uniform_below(3);
        ys2[0][i] = f.add(ys2[0][i], f.random_nonzero(rng));
        auto ch = challenge_fs(A, xs, ys2);
        EXPECT_NE(ch.u, base.u);
    }
}

TEST(FiatShamir, IdentityInstanceAccepts) {
    F f(101);
    Matrix<F> I(DenseMat<F>::identity(f, 1));
    std::vector<Vec<F>> xs{vec_of(f, {1})};
    std::vector<Vec<F>> ys{vec_of(f, {1})};
    auto ch = challenge_fs(I, xs, ys);
    EXPECT_TRUE(verify_one(ch, xs[0], ys[0]));
}

TEST(FiatShamir, CompletenessOnBoundPairs) {
    F f(2503);
    SeededRng rng(8);
    Matrix<F> A(DenseMat<F>::random(f, 5, 4, rng));
    std::vector<Vec<F>> xs, ys;
    for (int k = 0; k < 4; ++k) {
        xs.push_back(Vec<F>::random(f, 4, rng));
        ys.push_back(A.matvec(xs.back()));
    }
    auto ch = challenge_fs(A, xs, ys);
    for (int k = 0; k < 4; ++k) EXPECT_TRUE(verify_one(ch, xs[k], ys[k]));
}

// Once u is revealed, new pairs cannot be tested.
TEST(FiatShamir, RefusesUnboundPair) {
    F f(101);
    SeededRng rng(9);
    Matrix<F> A(DenseMat<F>::random(f, 3, 3, rng));
    std::vector<Vec<F>> xs{Vec<F>::random(f, 3, rng)};
    std::vector<Vec<F>> ys{A.matvec(xs[0])};
    auto ch = challenge_fs(A, xs, ys);
    auto x_new = Vec<F>::random(f, 3, rng);
    auto y_new = A.matvec(x_new);
    EXPECT_THROW(verify_one(ch, x_new, y_new), param_error);
    // A tampered y for a bound x is equally unbound.
    auto y_bad = ys[0];
    y_bad[0] = f.add(y_bad[0], f.one());
    EXPECT_THROW(verify_one(ch, xs[0], y_bad), param_error);
}

TEST(FiatShamir, LengthMismatchRejected) {
    F f(101);
    SeededRng rng(10);
    Matrix<F> A(DenseMat<F>::random(f, 3, 3, rng));
    std::vector<Vec<F>> xs{Vec<F>::random(f, 3, rng)};
    std::vector<Vec<F>> ys;
    EXPECT_THROW(challenge_fs(A, xs, ys), dim_error);
}

}  // namespace
}  // namespace vermat
