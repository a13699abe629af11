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

// Private probabilistic verification of batched matrix-vector products and
// its non-interactive variant: the verifier projects both sides of y = A x
// onto a random u, precomputing w^T = u^T A, and checks w^T x == u^T y.
// In the non-interactive mode u is derived from a SHAKE-128 transcript hash
// of (A, x_1..x_k, y_1..y_k), which binds the challenge to exactly those
// pairs.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "vermat/keccak.hpp"
#include "vermat/linalg.hpp"
#include "vermat/serialize.hpp"

namespace vermat {

inline constexpr const char* kFsDomainSep = "vermat/fs/v1";

enum class FreivaldsMode { private_coin, fiat_shamir };

// Draw a field element from an XOF by rejection on the low bits of
// successive 256-bit blocks (never by modular reduction, to stay uniform).
template <class F>
typename F::Elt field_from_xof(const F& field, Shake128& xof) {
    uint8_t block[32];
    for (;;) {
        xof.squeeze(block, sizeof(block));
        if (auto e = field.try_from_block(block)) return *e;
    }
}

template <class F>
struct FreivaldsChallenge {
    FreivaldsMode mode;
    Vec<F> u;  // random projection, length m
    Vec<F> w;  // w^T = u^T A, length n
    // Fiat-Shamir bookkeeping: transcript digest and one digest per bound
    // (x_i, y_i) pair; checking an unbound pair is refused.
    std::array<uint8_t, 32> transcript_digest{};
    std::vector<std::array<uint8_t, 32>> pair_digests;
};

template <class F>
FreivaldsChallenge<F> challenge_private_with(const Matrix<F>& A, Vec<F> u) {
    if (u.size() != A.rows()) throw dim_error("challenge: |u| must be m");
    Vec<F> w = A.tmatvec(u);
    return {FreivaldsMode::private_coin, std::move(u), std::move(w), {}, {}};
}

template <class F>
FreivaldsChallenge<F> challenge_private(const Matrix<F>& A, SeededRng& rng) {
    return challenge_private_with(A, Vec<F>::random(A.field(), A.rows(), rng));
}

template <class F>
std::array<uint8_t, 32> fs_pair_digest(const F& field, const Vec<F>& x,
                                       const Vec<F>& y) {
    bytes buf;
    encode_vec(field, x, buf);
    encode_vec(field, y, buf);
    Shake128 h;
    const char* ds = "vermat/fs/pair";
    h.absorb(std::span(reinterpret_cast<const uint8_t*>(ds), strlen(ds)));
    h.absorb(buf);
    std::array<uint8_t, 32> d{};
    h.squeeze(d.data(), d.size());
    return d;
}

template <class F>
FreivaldsChallenge<F> challenge_fs(const Matrix<F>& A,
                                   const std::vector<Vec<F>>& xs,
                                   const std::vector<Vec<F>>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw dim_error("challenge_fs: need k >= 1 pairs with |xs| == |ys|");
    const F& field = A.field();
    for (size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].size() != A.cols() || ys[i].size() != A.rows())
            throw dim_error("challenge_fs: pair dimensions do not match A");
    }

    Shake128 xof;
    xof.absorb(std::span(reinterpret_cast<const uint8_t*>(kFsDomainSep),
                         strlen(kFsDomainSep)));
    bytes buf;
    encode_matrix(A, buf);
    append_u64(buf, xs.size());
    for (const auto& x : xs) encode_vec(field, x, buf);
    for (const auto& y : ys) encode_vec(field, y, buf);
    xof.absorb(buf);

    FreivaldsChallenge<F> ch{FreivaldsMode::fiat_shamir, Vec<F>(field, A.rows()),
                             Vec<F>(field), {}, {}};
    xof.squeeze(ch.transcript_digest.data(), ch.transcript_digest.size());
    for (size_t i = 0; i < A.rows(); ++i) ch.u[i] = field_from_xof(field, xof);
    ch.w = A.tmatvec(ch.u);
    ch.pair_digests.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        ch.pair_digests.push_back(fs_pair_digest(field, xs[i], ys[i]));
    return ch;
}

// w^T x == u^T y; 2n + 2m field operations.
template <class F>
bool verify_one(const FreivaldsChallenge<F>& ch, const Vec<F>& x,
                const Vec<F>& y) {
    if (x.size() != ch.w.size() || y.size() != ch.u.size())
        throw dim_error("verify_one: dimension mismatch");
    if (ch.mode == FreivaldsMode::fiat_shamir) {
        auto d = fs_pair_digest(x.field(), x, y);
        bool bound = std::find(ch.pair_digests.begin(), ch.pair_digests.end(),
                               d) != ch.pair_digests.end();
        if (!bound)
            throw param_error(
                "pair not bound by the Fiat-Shamir challenge; new vectors "
                "cannot be tested once u is revealed");
    }
    const F& field = x.field();
    return field.eq(ch.w.dot(x), ch.u.dot(y));
}

}  // namespace vermat
