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

// The star operator family: applications of field vectors/matrices to
// vectors/matrices of group elements in the exponents,
// u^T * v = prod_j u[j]^{v[j]}, plus pairing folds.

#include <span>
#include <vector>

#include "vermat/linalg.hpp"

namespace vermat {

// g^{v}: entrywise exponentiation of the G1 generator.
template <class Suite>
std::vector<typename Suite::G1Elt> g1_powers(const Suite& suite,
                                             const Vec<typename Suite::Field>& v) {
    std::vector<typename Suite::G1Elt> out;
    out.reserve(v.size());
    const auto g = suite.g1();
    for (size_t i = 0; i < v.size(); ++i) out.push_back(suite.g1_exp(g, v[i]));
    return out;
}

template <class Suite>
std::vector<typename Suite::G2Elt> g2_powers(const Suite& suite,
                                             const Vec<typename Suite::Field>& v) {
    std::vector<typename Suite::G2Elt> out;
    out.reserve(v.size());
    const auto g = suite.g2();
    for (size_t i = 0; i < v.size(); ++i) out.push_back(suite.g2_exp(g, v[i]));
    return out;
}

// w^T * x for w in G1^n.
template <class Suite>
typename Suite::G1Elt gvec_star(const Suite& suite,
                                std::span<const typename Suite::G1Elt> bases,
                                const Vec<typename Suite::Field>& x) {
    return suite.g1_multi_exp(bases, std::span(x.data()));
}

// (row of G1 bases)^T * Y: z[i] = prod_j bases[j]^{Y[j,i]}.
template <class Suite>
std::vector<typename Suite::G1Elt> grow_star_mat(
    const Suite& suite, std::span<const typename Suite::G1Elt> bases,
    const DenseMat<typename Suite::Field>& Y) {
    if (bases.size() != Y.rows()) throw dim_error("star: dimension mismatch");
    std::vector<typename Suite::G1Elt> z;
    z.reserve(Y.cols());
    std::vector<typename Suite::Field::Elt> col(Y.rows());
    for (size_t i = 0; i < Y.cols(); ++i) {
        for (size_t j = 0; j < Y.rows(); ++j) col[j] = Y.at(j, i);
        z.push_back(suite.g1_multi_exp(bases, std::span(col)));
    }
    return z;
}

// (G1 matrix) * (field matrix): C[i,k] = prod_j M[i,j]^{X[j,k]}.
template <class Suite>
GroupMat<typename Suite::G1Elt> gmat_star_mat(
    const Suite& suite, const GroupMat<typename Suite::G1Elt>& M,
    const DenseMat<typename Suite::Field>& X) {
    if (M.cols != X.rows()) throw dim_error("star: dimension mismatch");
    GroupMat<typename Suite::G1Elt> C(M.rows, X.cols(), suite.g1_id());
    std::vector<typename Suite::Field::Elt> col(X.rows());
    for (size_t k = 0; k < X.cols(); ++k) {
        for (size_t j = 0; j < X.rows(); ++j) col[j] = X.at(j, k);
        for (size_t i = 0; i < M.rows; ++i) {
            std::span<const typename Suite::G1Elt> row(&M.e[i * M.cols], M.cols);
            C.at(i, k) = suite.g1_multi_exp(row, std::span(col));
        }
    }
    return C;
}

// (G1 matrix) * (field vector): out[i] = prod_k M[i,k]^{v[k]}.
template <class Suite>
std::vector<typename Suite::G1Elt> gmat_star_vec(
    const Suite& suite, const GroupMat<typename Suite::G1Elt>& M,
    const Vec<typename Suite::Field>& v) {
    if (M.cols != v.size()) throw dim_error("star: dimension mismatch");
    std::vector<typename Suite::G1Elt> out;
    out.reserve(M.rows);
    for (size_t i = 0; i < M.rows; ++i) {
        std::span<const typename Suite::G1Elt> row(&M.e[i * M.cols], M.cols);
        out.push_back(suite.g1_multi_exp(row, std::span(v.data())));
    }
    return out;
}

// prod_i e(a[i]; b[i]).
template <class Suite>
typename Suite::GTElt pair_fold(const Suite& suite,
                                std::span<const typename Suite::G1Elt> a,
                                std::span<const typename Suite::G2Elt> b) {
    if (a.size() != b.size()) throw dim_error("pair_fold: length mismatch");
    auto acc = suite.gt_id();
    for (size_t i = 0; i < a.size(); ++i)
        acc = suite.gt_op(acc, suite.pair(a[i], b[i]));
    return acc;
}

}  // namespace vermat
