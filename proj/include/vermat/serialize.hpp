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

// Canonical byte encodings of vectors and matrices, shared by the container
// format and by Fiat-Shamir transcript hashing.

#include "vermat/common.hpp"
#include "vermat/linalg.hpp"

namespace vermat {

template <class F>
void encode_vec(const F& field, const Vec<F>& v, bytes& out) {
    append_u64(out, v.size());
    for (size_t i = 0; i < v.size(); ++i) field.encode(v[i], out);
}

template <class F>
Vec<F> decode_vec(const F& field, ByteReader& in) {
    uint64_t n = in.u64();
    if (n > (1ull << 40)) throw format_error("unreasonable vector length");
    Vec<F> v(field, size_t(n));
    for (size_t i = 0; i < n; ++i) v[i] = field.decode(in);
    return v;
}

template <class F>
void encode_matrix(const Matrix<F>& A, bytes& out) {
    const F& field = A.field();
    if (const auto* sp = A.sparse()) {
        append_u8(out, 1);
        append_u64(out, A.rows());
        append_u64(out, A.cols());
        append_u64(out, sp->nnz());
        for (const auto& t : sp->entries()) {
            append_u64(out, t.i);
            append_u64(out, t.j);
            field.encode(t.v, out);
        }
    } else {
        const auto& d = *A.dense();
        append_u8(out, 0);
        append_u64(out, d.rows());
        append_u64(out, d.cols());
        for (size_t i = 0; i < d.rows(); ++i)
            for (size_t j = 0; j < d.cols(); ++j) field.encode(d.at(i, j), out);
    }
}

template <class F>
Matrix<F> decode_matrix(const F& field, ByteReader& in) {
    uint8_t kind = in.u8();
    uint64_t m = in.u64(), n = in.u64();
    if (m > (1ull << 32) || n > (1ull << 32))
        throw format_error("unreasonable matrix dimensions");
    if (kind == 0) {
        DenseMat<F> d(field, size_t(m), size_t(n));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) d.at(i, j) = field.decode(in);
        return Matrix<F>(std::move(d));
    }
    if (kind == 1) {
        uint64_t nnz = in.u64();
        std::vector<SparseEntry<F>> es;
        es.reserve(size_t(nnz));
        for (uint64_t k = 0; k < nnz; ++k) {
            uint64_t i = in.u64(), j = in.u64();
            es.push_back({size_t(i), size_t(j), field.decode(in)});
        }
        return Matrix<F>(SparseMat<F>(field, size_t(m), size_t(n), std::move(es)));
    }
    throw format_error("unknown matrix kind");
}

}  // namespace vermat
