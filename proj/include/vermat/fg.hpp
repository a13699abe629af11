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

// The Fiore-Gennaro matrix-vector verification protocol, kept as the
// benchmark baseline.  The preparator encrypts the whole matrix entrywise,
// W[i,j] = g1^{alpha A[i,j] + s[i] t[j] + rho[i] tau[j]}, so KeyGen and
// Compute are quadratic in group operations regardless of sparsity.

#include <optional>
#include <vector>

#include "vermat/suite_ops.hpp"

namespace vermat {

// What the preparator hands the trustee over the secure channel: the four
// masking vectors, never alpha.
template <class Suite>
struct FgTrusteeKey {
    Vec<typename Suite::Field> s, rho;  // length m
    Vec<typename Suite::Field> t, tau;  // length n
};

template <class Suite>
struct FgSecrets {
    typename Suite::Field::Elt alpha;
    FgTrusteeKey<Suite> trustee;
};

template <class Suite>
struct FgKeys {
    GroupMat<typename Suite::G1Elt> W;  // m x n, to the prover
    typename Suite::GTElt a;            // e(g1^alpha, g2), public
    FgSecrets<Suite> secrets;           // trustee part shipped separately
};

template <class Suite>
struct FgProof {
    Vec<typename Suite::Field> y;
    std::vector<typename Suite::G1Elt> z;  // z = W * x
};

template <class Suite>
FgKeys<Suite> fg_keygen_with(const Suite& suite,
                             const Matrix<typename Suite::Field>& A,
                             FgSecrets<Suite> sec) {
    auto field = suite.scalar_field();
    const size_t m = A.rows(), n = A.cols();
    const auto& tk = sec.trustee;
    if (tk.s.size() != m || tk.rho.size() != m || tk.t.size() != n ||
        tk.tau.size() != n)
        throw dim_error("fg_keygen: secret lengths must be (m, m, n, n)");
    DenseMat<typename Suite::Field> Ad = A.to_dense();
    GroupMat<typename Suite::G1Elt> W(m, n, suite.g1_id());
    const auto g = suite.g1();
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) {
            auto e = field.add(field.mul(sec.alpha, Ad.at(i, j)),
                               field.add(field.mul(tk.s[i], tk.t[j]),
                                         field.mul(tk.rho[i], tk.tau[j])));
            W.at(i, j) = suite.g1_exp(g, e);  // mn exponentiations
        }
    }
    auto a = suite.gt_exp(suite.gt(), sec.alpha);
    return {std::move(W), a, std::move(sec)};
}

template <class Suite>
FgKeys<Suite> fg_keygen(const Suite& suite,
                        const Matrix<typename Suite::Field>& A,
                        SeededRng& rng) {
    auto field = suite.scalar_field();
    FgSecrets<Suite> sec{
        field.random(rng),
        {Vec<typename Suite::Field>::random(field, A.rows(), rng),
         Vec<typename Suite::Field>::random(field, A.rows(), rng),
         Vec<typename Suite::Field>::random(field, A.cols(), rng),
         Vec<typename Suite::Field>::random(field, A.cols(), rng)}};
    return fg_keygen_with(suite, A, std::move(sec));
}

// VK_x[i] = gT^{s[i] d + rho[i] delta} with d = t^T x, delta = tau^T x.
// One GT exponentiation per row instead of a pairing; equal by bilinearity.
template <class Suite>
std::vector<typename Suite::GTElt> fg_probgen(const Suite& suite,
                                              const FgTrusteeKey<Suite>& tk,
                                              const Vec<typename Suite::Field>& x) {
    if (x.size() != tk.t.size()) throw dim_error("fg_probgen: dimension mismatch");
    auto field = suite.scalar_field();
    auto d = tk.t.dot(x);
    auto delta = tk.tau.dot(x);
    std::vector<typename Suite::GTElt> vkx;
    vkx.reserve(tk.s.size());
    const auto gt = suite.gt();
    for (size_t i = 0; i < tk.s.size(); ++i) {
        auto e = field.add(field.mul(tk.s[i], d), field.mul(tk.rho[i], delta));
        vkx.push_back(suite.gt_exp(gt, e));
    }
    return vkx;
}

template <class Suite>
FgProof<Suite> fg_compute(const Suite& suite,
                          const Matrix<typename Suite::Field>& A,
                          const GroupMat<typename Suite::G1Elt>& W,
                          const Vec<typename Suite::Field>& x) {
    if (x.size() != A.cols() || W.rows != A.rows() || W.cols != A.cols())
        throw dim_error("fg_compute: dimension mismatch");
    FgProof<Suite> p{A.matvec(x), {}};
    p.z.reserve(W.rows);
    for (size_t i = 0; i < W.rows; ++i) {
        std::span<const typename Suite::G1Elt> row(&W.e[i * W.cols], W.cols);
        p.z.push_back(suite.g1_multi_exp(row, std::span(x.data())));
    }
    return p;
}

// Checks e(z[i]; g2) == a^{y[i]} * VK_x[i] for every row.
template <class Suite>
std::optional<Vec<typename Suite::Field>> fg_verify(
    const Suite& suite, const typename Suite::GTElt& a,
    std::span<const typename Suite::GTElt> vkx, const FgProof<Suite>& proof) {
    const size_t m = proof.y.size();
    if (proof.z.size() != m || vkx.size() != m)
        throw dim_error("fg_verify: dimension mismatch");
    for (size_t i = 0; i < m; ++i) {
        auto lhs = suite.pair(proof.z[i], suite.g2());
        auto rhs = suite.gt_op(suite.gt_exp(a, proof.y[i]), vkx[i]);
        if (!(lhs == rhs)) return std::nullopt;
    }
    return proof.y;
}

}  // namespace vermat
