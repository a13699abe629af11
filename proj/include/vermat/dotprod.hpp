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

// External-group dot-product verification by vectorization: a secret u is
// reshaped so that u^T y becomes a trace of a small matrix product, the
// prover supplies the group-side product, and a Freivalds projection checks
// it.  Three variants: rank-1 left-hand side, general left-hand side, and
// the chunked composition of the general one.

#include <cmath>
#include <optional>
#include <vector>

#include "vermat/suite_ops.hpp"

namespace vermat {

// Unbalanced block dims (b1, b2) with b1*b2 >= len and b2 ~ ratio*b1;
// pairings cost more than group ops, so the pairing side stays the short
// one.  ratio = 100 is the library default.
inline std::pair<size_t, size_t> unbalanced_dims(size_t len, size_t ratio = 100) {
    if (len == 0) return {0, 0};
    double root = std::sqrt(double(len));
    size_t b1 = size_t(std::ceil(root / std::sqrt(double(ratio))));
    if (b1 == 0) b1 = 1;
    size_t b2 = size_t(std::ceil(root * std::sqrt(double(ratio))));
    while (b1 * b2 < len) ++b2;
    return {b1, b2};
}

// z^T * v == bases^T * (Y v): the Freivalds test shared by every bootstrapped
// verification (and by the full protocol's first three checks).
template <class Suite>
bool dp_freivalds_ok(const Suite& suite,
                     std::span<const typename Suite::G1Elt> z,
                     std::span<const typename Suite::G1Elt> bases,
                     const DenseMat<typename Suite::Field>& Y,
                     const Vec<typename Suite::Field>& v) {
    auto lhs = gvec_star(suite, z, v);
    auto rhs = gvec_star(suite, bases, Y.matvec(v));
    return lhs == rhs;
}

//--------------------------------------------------------------------------
// Rank-1 left-hand side: u = vec(mu * eta^T).
//--------------------------------------------------------------------------

template <class Suite>
struct Rank1DpKeys {
    size_t b1 = 0, b2 = 0;
    Vec<typename Suite::Field> mu;              // secret, length b1
    Vec<typename Suite::Field> eta;             // secret, length b2
    std::vector<typename Suite::G1Elt> ek_eta;  // g1^{eta^T}
    std::vector<typename Suite::G2Elt> vk_mu;   // g2^{mu}
};

template <class Suite>
Rank1DpKeys<Suite> rank1_keygen_with(const Suite& suite,
                                     Vec<typename Suite::Field> mu,
                                     Vec<typename Suite::Field> eta) {
    Rank1DpKeys<Suite> k{mu.size(), eta.size(), std::move(mu), std::move(eta), {}, {}};
    k.ek_eta = g1_powers(suite, k.eta);
    k.vk_mu = g2_powers(suite, k.mu);
    return k;
}

template <class Suite>
Rank1DpKeys<Suite> rank1_keygen(const Suite& suite, size_t m, SeededRng& rng,
                                size_t ratio = 100) {
    auto [b1, b2] = unbalanced_dims(m, ratio);
    auto field = suite.scalar_field();
    return rank1_keygen_with(suite,
                             Vec<typename Suite::Field>::random(field, b1, rng),
                             Vec<typename Suite::Field>::random(field, b2, rng));
}

// The defined u: vec(mu * eta^T) row-major, truncated to len.
template <class Suite>
Vec<typename Suite::Field> rank1_u(const Suite& suite,
                                   const Rank1DpKeys<Suite>& k, size_t len) {
    auto field = suite.scalar_field();
    if (len > k.b1 * k.b2) throw dim_error("rank1_u: len > b1*b2");
    Vec<typename Suite::Field> u(field, len);
    for (size_t l = 0; l < len; ++l)
        u[l] = field.mul(k.mu[l / k.b2], k.eta[l % k.b2]);
    return u;
}

// z^T = g1^{eta^T} * Y.
template <class Suite>
std::vector<typename Suite::G1Elt> rank1_compute(
    const Suite& suite, std::span<const typename Suite::G1Elt> ek_eta,
    const DenseMat<typename Suite::Field>& Y) {
    return grow_star_mat(suite, ek_eta, Y);
}

// On success returns gT^{u^T y} = prod e(z[i]; g2^{mu[i]}).
template <class Suite>
std::optional<typename Suite::GTElt> rank1_verify(
    const Suite& suite, const Rank1DpKeys<Suite>& k,
    const DenseMat<typename Suite::Field>& Y,
    std::span<const typename Suite::G1Elt> z, SeededRng& rng) {
    if (z.size() != k.b1 || Y.rows() != k.b2 || Y.cols() != k.b1)
        throw dim_error("rank1_verify: dimension mismatch");
    auto field = suite.scalar_field();
    auto v = Vec<typename Suite::Field>::random(field, k.b1, rng);
    if (!dp_freivalds_ok(suite, z, std::span(k.ek_eta), Y, v)) return std::nullopt;
    return pair_fold(suite, z, std::span(k.vk_mu));
}

// Full four-phase flow over one vector y.
template <class Suite>
std::optional<typename Suite::GTElt> rank1_dp(const Suite& suite,
                                              const Rank1DpKeys<Suite>& k,
                                              const Vec<typename Suite::Field>& y,
                                              SeededRng& rng) {
    auto Y = reshape_rhs(y, k.b2, k.b1);  // ProbGen
    auto z = rank1_compute(suite, std::span(k.ek_eta), Y);
    return rank1_verify(suite, k, Y, std::span(z), rng);
}

//--------------------------------------------------------------------------
// General left-hand side.
//--------------------------------------------------------------------------

template <class Suite>
struct GenDpKeys {
    size_t b1 = 0, b2 = 0;
    Vec<typename Suite::Field> w;                // secret, length b1
    GroupMat<typename Suite::G1Elt> ek_U;        // g1^{U}, b1 x b2
    std::vector<typename Suite::G1Elt> vk_wU;    // g1^{w^T U}, length b2
    std::vector<typename Suite::G2Elt> vk_w;     // g2^{w}, length b1
};

template <class Suite>
GenDpKeys<Suite> gen_keygen_with(const Suite& suite,
                                 const Vec<typename Suite::Field>& u,
                                 size_t b1, size_t b2,
                                 Vec<typename Suite::Field> w) {
    if (w.size() != b1) throw dim_error("gen_keygen: |w| must be b1");
    auto field = suite.scalar_field();
    DenseMat<typename Suite::Field> U = reshape_lhs(u, b1, b2);
    GenDpKeys<Suite> k{b1, b2, std::move(w), GroupMat<typename Suite::G1Elt>(b1, b2, suite.g1_id()), {}, {}};
    const auto g = suite.g1();
    for (size_t i = 0; i < b1; ++i)
        for (size_t j = 0; j < b2; ++j) k.ek_U.at(i, j) = suite.g1_exp(g, U.at(i, j));
    Vec<typename Suite::Field> wU = U.tmatvec(k.w);
    k.vk_wU = g1_powers(suite, wU);
    k.vk_w = g2_powers(suite, k.w);
    return k;
}

template <class Suite>
GenDpKeys<Suite> gen_keygen(const Suite& suite,
                            const Vec<typename Suite::Field>& u, size_t b1,
                            size_t b2, SeededRng& rng) {
    auto field = suite.scalar_field();
    return gen_keygen_with(suite, u, b1, b2,
                           Vec<typename Suite::Field>::random(field, b1, rng));
}

// C = g1^{U} * Y, a b1 x b1 group matrix.
template <class Suite>
GroupMat<typename Suite::G1Elt> gen_compute(
    const Suite& suite, const GroupMat<typename Suite::G1Elt>& ek_U,
    const DenseMat<typename Suite::Field>& Y) {
    return gmat_star_mat(suite, ek_U, Y);
}

// On success returns Trace(C) = g1^{u^T y}.
template <class Suite>
std::optional<typename Suite::G1Elt> gen_verify(
    const Suite& suite, const GenDpKeys<Suite>& k,
    const DenseMat<typename Suite::Field>& Y,
    const GroupMat<typename Suite::G1Elt>& C, SeededRng& rng) {
    if (C.rows != k.b1 || C.cols != k.b1 || Y.rows() != k.b2 || Y.cols() != k.b1)
        throw dim_error("gen_verify: dimension mismatch");
    auto field = suite.scalar_field();
    auto v = Vec<typename Suite::Field>::random(field, k.b1, rng);
    auto theta = gmat_star_vec(suite, C, v);
    auto lhs = pair_fold(suite, std::span(theta), std::span(k.vk_w));
    auto rhs = suite.pair(gvec_star(suite, std::span(k.vk_wU), Y.matvec(v)),
                          suite.g2());
    if (!(lhs == rhs)) return std::nullopt;
    return trace_group(suite, C);
}

template <class Suite>
std::optional<typename Suite::G1Elt> gen_dp(const Suite& suite,
                                            const GenDpKeys<Suite>& k,
                                            const Vec<typename Suite::Field>& y,
                                            SeededRng& rng) {
    auto Y = reshape_rhs(y, k.b2, k.b1);
    auto C = gen_compute(suite, k.ek_U, Y);
    return gen_verify(suite, k, Y, C, rng);
}

//--------------------------------------------------------------------------
// Chunked composition: cut a length-n dot product into ceil(n/k) chunks of
// size k = n^a, verify each chunk, multiply the G1 results.
//--------------------------------------------------------------------------

struct ChunkParams {
    double a = 0.75;   // free exponent in (0, 1]
    size_t k = 0;      // chunk size n^a
    size_t b1 = 0, b2 = 0;  // per-chunk dims ~ (k^{1/3}, k^{2/3})
};

inline ChunkParams chunk_params(size_t n, double a = 0.75) {
    if (!(a > 0.0) || a > 1.0) throw param_error("chunk exponent a must be in (0, 1]");
    ChunkParams p;
    p.a = a;
    p.k = std::max<size_t>(1, size_t(std::llround(std::pow(double(n), a))));
    if (p.k > n) p.k = n;
    p.b1 = std::max<size_t>(1, size_t(std::ceil(std::cbrt(double(p.k)))));
    p.b2 = (p.k + p.b1 - 1) / p.b1;
    while (p.b1 * p.b2 < p.k) ++p.b2;
    return p;
}

template <class Suite>
struct ChunkedDpKeys {
    ChunkParams params;
    size_t n = 0;
    std::vector<GenDpKeys<Suite>> chunks;
};

template <class Suite>
ChunkedDpKeys<Suite> chunked_keygen(const Suite& suite,
                                    const Vec<typename Suite::Field>& u,
                                    double a, SeededRng& rng) {
    ChunkedDpKeys<Suite> keys{chunk_params(u.size(), a), u.size(), {}};
    auto field = suite.scalar_field();
    const size_t k = keys.params.k;
    for (size_t off = 0; off < u.size(); off += k) {
        size_t len = std::min(k, u.size() - off);
        Vec<typename Suite::Field> slice(field, len);
        for (size_t i = 0; i < len; ++i) slice[i] = u[off + i];
        keys.chunks.push_back(
            gen_keygen(suite, slice, keys.params.b1, keys.params.b2, rng));
    }
    return keys;
}

template <class Suite>
std::vector<GroupMat<typename Suite::G1Elt>> chunked_compute(
    const Suite& suite, const ChunkedDpKeys<Suite>& keys,
    const Vec<typename Suite::Field>& y) {
    if (y.size() != keys.n) throw dim_error("chunked_compute: length mismatch");
    auto field = suite.scalar_field();
    std::vector<GroupMat<typename Suite::G1Elt>> proofs;
    const size_t k = keys.params.k;
    for (size_t c = 0, off = 0; off < y.size(); ++c, off += k) {
        size_t len = std::min(k, y.size() - off);
        Vec<typename Suite::Field> slice(field, len);
        for (size_t i = 0; i < len; ++i) slice[i] = y[off + i];
        auto Y = reshape_rhs(slice, keys.params.b2, keys.params.b1);
        proofs.push_back(gen_compute(suite, keys.chunks[c].ek_U, Y));
    }
    return proofs;
}

// Rejects if any chunk rejects; otherwise g1^{u^T y} as the product of the
// chunk traces.
template <class Suite>
std::optional<typename Suite::G1Elt> chunked_verify(
    const Suite& suite, const ChunkedDpKeys<Suite>& keys,
    const Vec<typename Suite::Field>& y,
    std::span<const GroupMat<typename Suite::G1Elt>> proofs, SeededRng& rng) {
    if (y.size() != keys.n || proofs.size() != keys.chunks.size())
        throw dim_error("chunked_verify: shape mismatch");
    auto field = suite.scalar_field();
    auto acc = suite.g1_id();
    const size_t k = keys.params.k;
    for (size_t c = 0, off = 0; off < y.size(); ++c, off += k) {
        size_t len = std::min(k, y.size() - off);
        Vec<typename Suite::Field> slice(field, len);
        for (size_t i = 0; i < len; ++i) slice[i] = y[off + i];
        auto Y = reshape_rhs(slice, keys.params.b2, keys.params.b1);
        auto tr = gen_verify(suite, keys.chunks[c], Y, proofs[c], rng);
        if (!tr) return std::nullopt;
        acc = suite.g1_op(acc, *tr);
    }
    return acc;
}

template <class Suite>
std::optional<typename Suite::G1Elt> chunked_dp(const Suite& suite,
                                                const ChunkedDpKeys<Suite>& keys,
                                                const Vec<typename Suite::Field>& y,
                                                SeededRng& rng) {
    auto proofs = chunked_compute(suite, keys, y);
    return chunked_verify(suite, keys, y, std::span(proofs), rng);
}

}  // namespace vermat
