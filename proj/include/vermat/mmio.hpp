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

// Matrix Market exchange format (array and coordinate, integer entries,
// general symmetry) and one-integer-per-line vector files.  Every value is
// reduced into the field on load; entries that reduce to zero are dropped
// from sparse storage.

#include <fstream>
#include <sstream>
#include <string>

#include "vermat/linalg.hpp"

namespace vermat {

namespace mmio_detail {

inline std::string next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%') continue;
        return line;
    }
    return {};
}

inline std::string lower(std::string s) {
    for (auto& c : s) c = char(::tolower(c));
    return s;
}

}  // namespace mmio_detail

template <class F>
Matrix<F> read_matrix_market(std::istream& in, const F& field) {
    std::string banner;
    if (!std::getline(in, banner) || banner.rfind("%%MatrixMarket", 0) != 0)
        throw format_error("not a Matrix Market file");
    std::istringstream hs(banner);
    std::string tag, object, fmt, valtype, symmetry;
    hs >> tag >> object >> fmt >> valtype >> symmetry;
    object = mmio_detail::lower(object);
    fmt = mmio_detail::lower(fmt);
    valtype = mmio_detail::lower(valtype);
    symmetry = mmio_detail::lower(symmetry);
    if (object != "matrix") throw format_error("unsupported Matrix Market object");
    if (valtype != "integer" && valtype != "pattern")
        throw format_error("only integer (or pattern) Matrix Market values are supported");
    if (symmetry != "general")
        throw format_error("only general Matrix Market symmetry is supported");

    std::string sizes = mmio_detail::next_data_line(in);
    if (sizes.empty()) throw format_error("missing Matrix Market size line");
    std::istringstream ss(sizes);

    if (fmt == "coordinate") {
        long long m = 0, n = 0, nnz = 0;
        if (!(ss >> m >> n >> nnz) || m < 0 || n < 0 || nnz < 0)
            throw format_error("bad coordinate size line");
        std::vector<SparseEntry<F>> entries;
        entries.reserve(size_t(nnz));
        for (long long k = 0; k < nnz; ++k) {
            std::string line = mmio_detail::next_data_line(in);
            if (line.empty()) throw format_error("truncated coordinate data");
            std::istringstream ls(line);
            long long i = 0, j = 0, v = 1;
            if (!(ls >> i >> j)) throw format_error("bad coordinate entry");
            if (valtype == "integer" && !(ls >> v))
                throw format_error("bad coordinate entry value");
            if (i < 1 || i > m || j < 1 || j > n)
                throw format_error("coordinate index out of range");
            auto e = field.from_i64(v);
            if (!field.is_zero(e))
                entries.push_back({size_t(i - 1), size_t(j - 1), e});
        }
        return Matrix<F>(SparseMat<F>(field, size_t(m), size_t(n), std::move(entries)));
    }
    if (fmt == "array") {
        long long m = 0, n = 0;
        if (!(ss >> m >> n) || m < 0 || n < 0)
            throw format_error("bad array size line");
        DenseMat<F> d(field, size_t(m), size_t(n));
        // Array data is column-major.
        for (long long j = 0; j < n; ++j) {
            for (long long i = 0; i < m; ++i) {
                std::string line = mmio_detail::next_data_line(in);
                if (line.empty()) throw format_error("truncated array data");
                std::istringstream ls(line);
                long long v = 0;
                if (!(ls >> v)) throw format_error("bad array entry");
                d.at(size_t(i), size_t(j)) = field.from_i64(v);
            }
        }
        return Matrix<F>(std::move(d));
    }
    throw format_error("unsupported Matrix Market format '" + fmt + "'");
}

template <class F>
Matrix<F> read_matrix_market_file(const std::string& path, const F& field) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open matrix file '" + path + "'");
    return read_matrix_market(in, field);
}

template <class F>
void write_matrix_market(std::ostream& out, const Matrix<F>& A) {
    const F& field = A.field();
    if (const auto* sp = A.sparse()) {
        out << "%%MatrixMarket matrix coordinate integer general\n";
        out << A.rows() << " " << A.cols() << " " << sp->nnz() << "\n";
        for (const auto& t : sp->entries())
            out << (t.i + 1) << " " << (t.j + 1) << " " << field.to_string(t.v)
                << "\n";
    } else {
        const auto& d = *A.dense();
        out << "%%MatrixMarket matrix array integer general\n";
        out << d.rows() << " " << d.cols() << "\n";
        for (size_t j = 0; j < d.cols(); ++j)
            for (size_t i = 0; i < d.rows(); ++i)
                out << field.to_string(d.at(i, j)) << "\n";
    }
}

template <class F>
void write_matrix_market_file(const std::string& path, const Matrix<F>& A) {
    std::ofstream out(path);
    if (!out) throw format_error("cannot write matrix file '" + path + "'");
    write_matrix_market(out, A);
}

// One decimal integer per line, reduced into the field.
template <class F>
Vec<F> read_vector(std::istream& in, const F& field) {
    std::vector<typename F::Elt> vals;
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) continue;
        if (line[pos] == '%') continue;
        std::istringstream ls(line);
        long long v = 0;
        if (!(ls >> v)) throw format_error("bad vector entry '" + line + "'");
        vals.push_back(field.from_i64(v));
    }
    return Vec<F>(field, std::move(vals));
}

template <class F>
Vec<F> read_vector_file(const std::string& path, const F& field) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open vector file '" + path + "'");
    return read_vector(in, field);
}

template <class F>
void write_vector(std::ostream& out, const Vec<F>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        out << v.field().to_string(v[i]) << "\n";
}

template <class F>
void write_vector_file(const std::string& path, const Vec<F>& v) {
    std::ofstream out(path);
    if (!out) throw format_error("cannot write vector file '" + path + "'");
    write_vector(out, v);
}

}  // namespace vermat
