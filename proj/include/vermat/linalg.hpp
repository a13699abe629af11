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

// Exact linear algebra over a prime field: dense/sparse matrices with the
// mu(A) cost model (2*nnz sparse, 2mn dense), and the reshape conventions
// under which Trace(reshape_lhs(u) * reshape_rhs(y)) = u^T y.

#include <algorithm>
#include <cstdint>
#include <variant>
#include <vector>

#include "vermat/common.hpp"
#include "vermat/counters.hpp"
#include "vermat/rng.hpp"

namespace vermat {

template <class F>
class Vec {
public:
    using Elt = typename F::Elt;

    explicit Vec(const F& field) : field_(field) {}
    Vec(const F& field, size_t n) : field_(field), v_(n, field.zero()) {}
    Vec(const F& field, std::vector<Elt> v) : field_(field), v_(std::move(v)) {}

    static Vec random(const F& field, size_t n, SeededRng& rng) {
        Vec r(field, n);
        for (auto& e : r.v_) e = field.random(rng);
        return r;
    }

    size_t size() const { return v_.size(); }
    const F& field() const { return field_; }
    Elt& operator[](size_t i) { return v_[i]; }
    const Elt& operator[](size_t i) const { return v_[i]; }
    const std::vector<Elt>& data() const { return v_; }
    std::vector<Elt>& data() { return v_; }

    bool operator==(const Vec& o) const { return v_ == o.v_; }

    // u^T v, 2n-ish field ops.
    Elt dot(const Vec& o) const {
        if (size() != o.size()) throw dim_error("dot: length mismatch");
        Elt acc = field_.zero();
        for (size_t i = 0; i < size(); ++i)
            acc = field_.add(acc, field_.mul(v_[i], o.v_[i]));
        return acc;
    }

    Vec add(const Vec& o) const {
        if (size() != o.size()) throw dim_error("add: length mismatch");
        Vec r(field_, size());
        for (size_t i = 0; i < size(); ++i) r.v_[i] = field_.add(v_[i], o.v_[i]);
        return r;
    }

    Vec scaled(Elt c) const {
        Vec r(field_, size());
        for (size_t i = 0; i < size(); ++i) r.v_[i] = field_.mul(v_[i], c);
        return r;
    }

    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(),
                           [&](const Elt& e) { return field_.is_zero(e); });
    }

private:
    F field_;
    std::vector<Elt> v_;
};

template <class F>
class DenseMat {
public:
    using Elt = typename F::Elt;

    DenseMat(const F& field, size_t m, size_t n)
        : field_(field), m_(m), n_(n), a_(m * n, field.zero()) {}

    static DenseMat random(const F& field, size_t m, size_t n, SeededRng& rng) {
        DenseMat r(field, m, n);
        for (auto& e : r.a_) e = field.random(rng);
        return r;
    }
    static DenseMat identity(const F& field, size_t n) {
        DenseMat r(field, n, n);
        for (size_t i = 0; i < n; ++i) r.at(i, i) = field.one();
        return r;
    }

    size_t rows() const { return m_; }
    size_t cols() const { return n_; }
    const F& field() const { return field_; }
    Elt& at(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Elt& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const DenseMat& o) const {
        return m_ == o.m_ && n_ == o.n_ && a_ == o.a_;
    }

    uint64_t nnz() const {
        uint64_t c = 0;
        for (const auto& e : a_)
            if (!field_.is_zero(e)) ++c;
        return c;
    }

    Vec<F> matvec(const Vec<F>& x) const {
        if (x.size() != n_) throw dim_error("matvec: dimension mismatch");
        Vec<F> y(field_, m_);
        for (size_t i = 0; i < m_; ++i) {
            Elt acc = field_.zero();
            for (size_t j = 0; j < n_; ++j)
                acc = field_.add(acc, field_.mul(a_[i * n_ + j], x[j]));
            y[i] = acc;
        }
        return y;
    }

    // u^T A, same mu(A) cost as matvec.
    Vec<F> tmatvec(const Vec<F>& u) const {
        if (u.size() != m_) throw dim_error("tmatvec: dimension mismatch");
        Vec<F> w(field_, n_);
        for (size_t i = 0; i < m_; ++i)
            for (size_t j = 0; j < n_; ++j)
                w[j] = field_.add(w[j], field_.mul(u[i], a_[i * n_ + j]));
        return w;
    }

    DenseMat mul(const DenseMat& B) const {
        if (n_ != B.m_) throw dim_error("matmul: dimension mismatch");
        DenseMat C(field_, m_, B.n_);
        for (size_t i = 0; i < m_; ++i)
            for (size_t k = 0; k < n_; ++k)
                for (size_t j = 0; j < B.n_; ++j)
                    C.at(i, j) = field_.add(C.at(i, j),
                                            field_.mul(at(i, k), B.at(k, j)));
        return C;
    }

private:
    F field_;
    size_t m_, n_;
    std::vector<Elt> a_;
};

template <class F>
struct SparseEntry {
    size_t i, j;
    typename F::Elt v;
};

// Coordinate triples sorted by (row, col), unique and nonzero.
template <class F>
class SparseMat {
public:
    using Elt = typename F::Elt;

    SparseMat(const F& field, size_t m, size_t n,
              std::vector<SparseEntry<F>> entries)
        : field_(field), m_(m), n_(n), e_(std::move(entries)) {
        std::sort(e_.begin(), e_.end(), [](const auto& a, const auto& b) {
            return a.i != b.i ? a.i < b.i : a.j < b.j;
        });
        for (size_t k = 0; k < e_.size(); ++k) {
            const auto& t = e_[k];
            if (t.i >= m_ || t.j >= n_) throw dim_error("sparse entry out of range");
            if (field_.is_zero(t.v)) throw format_error("sparse entry with zero value");
            if (k > 0 && e_[k - 1].i == t.i && e_[k - 1].j == t.j)
                throw format_error("duplicate sparse entry");
        }
    }

    size_t rows() const { return m_; }
    size_t cols() const { return n_; }
    uint64_t nnz() const { return e_.size(); }
    const F& field() const { return field_; }
    const std::vector<SparseEntry<F>>& entries() const { return e_; }

    Vec<F> matvec(const Vec<F>& x) const {
        if (x.size() != n_) throw dim_error("matvec: dimension mismatch");
        Vec<F> y(field_, m_);
        for (const auto& t : e_)
            y[t.i] = field_.add(y[t.i], field_.mul(t.v, x[t.j]));
        return y;
    }

    Vec<F> tmatvec(const Vec<F>& u) const {
        if (u.size() != m_) throw dim_error("tmatvec: dimension mismatch");
        Vec<F> w(field_, n_);
        for (const auto& t : e_)
            w[t.j] = field_.add(w[t.j], field_.mul(u[t.i], t.v));
        return w;
    }

    DenseMat<F> densify() const {
        DenseMat<F> d(field_, m_, n_);
        for (const auto& t : e_) d.at(t.i, t.j) = t.v;
        return d;
    }

private:
    F field_;
    size_t m_, n_;
    std::vector<SparseEntry<F>> e_;
};

// Either storage behind one interface, carrying the mu(A) cost model.
template <class F>
class Matrix {
public:
    using Elt = typename F::Elt;

    Matrix(DenseMat<F> d) : rep_(std::move(d)) {}       // NOLINT(implicit)
    Matrix(SparseMat<F> s) : rep_(std::move(s)) {}      // NOLINT(implicit)

    size_t rows() const {
        return std::visit([](const auto& m) { return m.rows(); }, rep_);
    }
    size_t cols() const {
        return std::visit([](const auto& m) { return m.cols(); }, rep_);
    }
    const F& field() const {
        return std::visit([](const auto& m) -> const F& { return m.field(); }, rep_);
    }
    bool is_sparse() const { return std::holds_alternative<SparseMat<F>>(rep_); }

    // mu(A): arithmetic cost of one product by A.
    uint64_t mu() const {
        if (is_sparse()) return 2 * std::get<SparseMat<F>>(rep_).nnz();
        return 2 * uint64_t(rows()) * cols();
    }

    Vec<F> matvec(const Vec<F>& x) const {
        return std::visit([&](const auto& m) { return m.matvec(x); }, rep_);
    }
    Vec<F> tmatvec(const Vec<F>& u) const {
        return std::visit([&](const auto& m) { return m.tmatvec(u); }, rep_);
    }
    DenseMat<F> to_dense() const {
        if (is_sparse()) return std::get<SparseMat<F>>(rep_).densify();
        return std::get<DenseMat<F>>(rep_);
    }
    const DenseMat<F>* dense() const { return std::get_if<DenseMat<F>>(&rep_); }
    const SparseMat<F>* sparse() const { return std::get_if<SparseMat<F>>(&rep_); }

private:
    std::variant<DenseMat<F>, SparseMat<F>> rep_;
};

// Row-major fill: U[i,j] = u[i*b2 + j], zero-padded up to b1*b2.
template <class F>
DenseMat<F> reshape_lhs(const Vec<F>& u, size_t b1, size_t b2) {
    if (b1 * b2 < u.size()) throw dim_error("reshape_lhs: b1*b2 < len(u)");
    DenseMat<F> U(u.field(), b1, b2);
    for (size_t k = 0; k < u.size(); ++k) U.at(k / b2, k % b2) = u[k];
    return U;
}

// Column-major fill: Y[j,i] = y[i*b2 + j], zero-padded; the dual convention
// that makes Trace(U*Y) the dot product.
template <class F>
DenseMat<F> reshape_rhs(const Vec<F>& y, size_t b2, size_t b1) {
    if (b1 * b2 < y.size()) throw dim_error("reshape_rhs: b1*b2 < len(y)");
    DenseMat<F> Y(y.field(), b2, b1);
    for (size_t k = 0; k < y.size(); ++k) Y.at(k % b2, k / b2) = y[k];
    return Y;
}

template <class F>
typename F::Elt trace(const DenseMat<F>& M) {
    if (M.rows() != M.cols()) throw dim_error("trace: non-square matrix");
    typename F::Elt acc = M.field().zero();
    for (size_t i = 0; i < M.rows(); ++i) acc = M.field().add(acc, M.at(i, i));
    return acc;
}

// Square matrix of group elements, row-major.
template <class G>
struct GroupMat {
    size_t rows = 0, cols = 0;
    std::vector<G> e;

    GroupMat() = default;
    GroupMat(size_t r, size_t c, G fill) : rows(r), cols(c), e(r * c, fill) {}
    G& at(size_t i, size_t j) { return e[i * cols + j]; }
    const G& at(size_t i, size_t j) const { return e[i * cols + j]; }
    bool operator==(const GroupMat&) const = default;
};

// Product of the diagonal: the group-side trace used by the full protocol.
template <class Suite>
typename Suite::G1Elt trace_group(const Suite& suite,
                                  const GroupMat<typename Suite::G1Elt>& C) {
    if (C.rows != C.cols) throw dim_error("trace_group: non-square matrix");
    auto acc = suite.g1_id();
    for (size_t i = 0; i < C.rows; ++i) acc = suite.g1_op(acc, C.at(i, i));
    return acc;
}

}  // namespace vermat
