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

// Interactive, trustee-assisted, publicly verifiable matrix-vector
// verification, sensitive to sparsity.  The preparator hides a random
// projection u behind a mask t inside omega^T = g1^{u^T A + t^T}; the prover
// answers with (y, zeta = omega^T * x); the trustee reveals
// eta = gT^{u^T y + t^T x}; anyone checks e(zeta; g2) == eta.

#include <optional>
#include <vector>

#include "vermat/suite_ops.hpp"

namespace vermat {

template <class Suite>
struct SpmvSecrets {
    Vec<typename Suite::Field> u;  // length m
    Vec<typename Suite::Field> t;  // length n
};

template <class Suite>
struct SpmvKeys {
    std::vector<typename Suite::G1Elt> omega;  // g1^{u^T A + t^T}, length n
    SpmvSecrets<Suite> secrets;                // trustee side
};

template <class Suite>
struct SpmvProof {
    Vec<typename Suite::Field> y;
    typename Suite::G1Elt zeta;
};

template <class Suite>
struct TrusteeResponse {
    typename Suite::Field::Elt h;  // u^T y
    typename Suite::Field::Elt d;  // t^T x
    typename Suite::GTElt eta;     // gT^{h + d}
};

template <class Suite>
SpmvKeys<Suite> spmv_keygen_with(const Suite& suite,
                                 const Matrix<typename Suite::Field>& A,
                                 SpmvSecrets<Suite> secrets) {
    if (secrets.u.size() != A.rows() || secrets.t.size() != A.cols())
        throw dim_error("spmv_keygen: secret lengths must be (m, n)");
    // mu(A) + n field ops, n G1 exponentiations.
    Vec<typename Suite::Field> w = A.tmatvec(secrets.u).add(secrets.t);
    return {g1_powers(suite, w), std::move(secrets)};
}

template <class Suite>
SpmvKeys<Suite> spmv_keygen(const Suite& suite,
                            const Matrix<typename Suite::Field>& A,
                            SeededRng& rng) {
    auto field = suite.scalar_field();
    SpmvSecrets<Suite> sec{Vec<typename Suite::Field>::random(field, A.rows(), rng),
                           Vec<typename Suite::Field>::random(field, A.cols(), rng)};
    return spmv_keygen_with(suite, A, std::move(sec));
}

template <class Suite>
SpmvProof<Suite> spmv_compute(const Suite& suite,
                              const Matrix<typename Suite::Field>& A,
                              std::span<const typename Suite::G1Elt> omega,
                              const Vec<typename Suite::Field>& x) {
    if (x.size() != A.cols() || omega.size() != A.cols())
        throw dim_error("spmv_compute: dimension mismatch");
    return {A.matvec(x), gvec_star(suite, omega, x)};
}

template <class Suite>
TrusteeResponse<Suite> spmv_trustee(const Suite& suite,
                                    const SpmvSecrets<Suite>& secrets,
                                    const Vec<typename Suite::Field>& x,
                                    const Vec<typename Suite::Field>& y) {
    if (x.size() != secrets.t.size() || y.size() != secrets.u.size())
        throw dim_error("spmv_trustee: dimension mismatch");
    auto field = suite.scalar_field();
    auto h = secrets.u.dot(y);
    auto d = secrets.t.dot(x);
    return {h, d, suite.gt_exp(suite.gt(), field.add(h, d))};
}

// Public verification: one pairing.
template <class Suite>
std::optional<Vec<typename Suite::Field>> spmv_verify(
    const Suite& suite, const SpmvProof<Suite>& proof,
    const TrusteeResponse<Suite>& resp) {
    if (!(suite.pair(proof.zeta, suite.g2()) == resp.eta)) return std::nullopt;
    return proof.y;
}

}  // namespace vermat
