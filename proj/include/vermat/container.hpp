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

// Key/proof container: magic "VMAT1", protocol and role tags, a suite
// descriptor, a dims block, length-prefixed typed payload arrays, and a
// trailing 32-byte SHAKE-128 digest of all prior bytes.  The digest detects
// corruption; it provides no authenticity (the adversary model covers a
// malicious server only).

#include <fstream>

#include "vermat/keccak.hpp"
#include "vermat/serialize.hpp"

namespace vermat {

inline constexpr char kContainerMagic[5] = {'V', 'M', 'A', 'T', '1'};
inline constexpr uint8_t kContainerVersion = 1;
inline constexpr size_t kDigestSize = 32;

enum class Protocol : uint8_t {
    freivalds = 1,
    fg = 2,
    spmv = 3,
    rank1dp = 4,
    gendp = 5,
    pvmat = 6,
    smallfield = 7,
};

inline const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::freivalds: return "freivalds";
        case Protocol::fg: return "fg";
        case Protocol::spmv: return "spmv";
        case Protocol::rank1dp: return "rank1dp";
        case Protocol::gendp: return "gendp";
        case Protocol::pvmat: return "pvmat";
        case Protocol::smallfield: return "smallfield";
    }
    return "?";
}

inline Protocol protocol_from_name(const std::string& s) {
    for (auto p : {Protocol::freivalds, Protocol::fg, Protocol::spmv,
                   Protocol::rank1dp, Protocol::gendp, Protocol::pvmat,
                   Protocol::smallfield})
        if (s == protocol_name(p)) return p;
    throw param_error("unknown protocol '" + s + "'");
}

enum class ContainerRole : uint8_t {
    evaluation_key = 1,
    verification_key = 2,
    trustee_key = 3,
    proof = 4,
    response = 5,
    challenge = 6,
    input_vkx = 7,
};

enum class Backend : uint8_t { real = 1, toy = 2 };

struct ContainerHeader {
    Protocol protocol;
    ContainerRole role;
    Backend backend;
    uint64_t toy_modulus = 0;  // meaningful for Backend::toy
    std::vector<uint64_t> dims;
};

namespace container_detail {
enum class ArrKind : uint8_t {
    scalars = 0,
    g1 = 1,
    g2 = 2,
    gt = 3,
    bigints = 4,
    blobs32 = 5,
    matrix = 6,
};
}

template <class Suite>
class ContainerWriter {
public:
    ContainerWriter(const Suite& suite, Protocol protocol, ContainerRole role,
                    std::span<const uint64_t> dims)
        : suite_(suite) {
        buf_.insert(buf_.end(), kContainerMagic, kContainerMagic + 5);
        append_u8(buf_, kContainerVersion);
        append_u8(buf_, uint8_t(protocol));
        append_u8(buf_, uint8_t(role));
        if constexpr (Suite::kIsToy) {
            append_u8(buf_, uint8_t(Backend::toy));
            append_u64(buf_, suite.modulus());
        } else {
            append_u8(buf_, uint8_t(Backend::real));
        }
        append_u32(buf_, uint32_t(dims.size()));
        for (auto d : dims) append_u64(buf_, d);
        count_pos_ = buf_.size();
        append_u32(buf_, 0);  // array count, patched in finish()
    }

    void add_scalars(const Vec<typename Suite::Field>& v) {
        begin(container_detail::ArrKind::scalars, v.size());
        auto field = suite_.scalar_field();
        for (size_t i = 0; i < v.size(); ++i) field.encode(v[i], buf_);
    }
    void add_g1(std::span<const typename Suite::G1Elt> v) {
        begin(container_detail::ArrKind::g1, v.size());
        for (const auto& e : v) suite_.encode_g1(e, buf_);
    }
    void add_g2(std::span<const typename Suite::G2Elt> v) {
        begin(container_detail::ArrKind::g2, v.size());
        for (const auto& e : v) suite_.encode_g2(e, buf_);
    }
    void add_gt(std::span<const typename Suite::GTElt> v) {
        begin(container_detail::ArrKind::gt, v.size());
        for (const auto& e : v) suite_.encode_gt(e, buf_);
    }
    void add_bigint_bytes(std::span<const bytes> v) {
        begin(container_detail::ArrKind::bigints, v.size());
        for (const auto& b : v) {
            append_u32(buf_, uint32_t(b.size()));
            buf_.insert(buf_.end(), b.begin(), b.end());
        }
    }
    void add_blobs32(std::span<const std::array<uint8_t, 32>> v) {
        begin(container_detail::ArrKind::blobs32, v.size());
        for (const auto& b : v) buf_.insert(buf_.end(), b.begin(), b.end());
    }
    void add_matrix(const Matrix<typename Suite::Field>& A) {
        begin(container_detail::ArrKind::matrix, 1);
        encode_matrix(A, buf_);
    }

    bytes finish() {
        buf_[count_pos_] = uint8_t(arrays_);
        buf_[count_pos_ + 1] = uint8_t(arrays_ >> 8);
        buf_[count_pos_ + 2] = uint8_t(arrays_ >> 16);
        buf_[count_pos_ + 3] = uint8_t(arrays_ >> 24);
        auto digest = shake128(buf_, kDigestSize);
        bytes out = std::move(buf_);
        out.insert(out.end(), digest.begin(), digest.end());
        return out;
    }

private:
    void begin(container_detail::ArrKind kind, size_t count) {
        append_u8(buf_, uint8_t(kind));
        append_u64(buf_, count);
        ++arrays_;
    }

    const Suite& suite_;
    bytes buf_;
    size_t count_pos_ = 0;
    uint32_t arrays_ = 0;
};

inline ContainerHeader peek_header(std::span<const uint8_t> data) {
    ByteReader in(data);
    for (char c : kContainerMagic)
        if (in.u8() != uint8_t(c)) throw format_error("bad container magic");
    if (in.u8() != kContainerVersion) throw format_error("unsupported container version");
    ContainerHeader h{};
    h.protocol = Protocol(in.u8());
    h.role = ContainerRole(in.u8());
    uint8_t be = in.u8();
    if (be != uint8_t(Backend::real) && be != uint8_t(Backend::toy))
        throw format_error("unknown backend tag");
    h.backend = Backend(be);
    if (h.backend == Backend::toy) h.toy_modulus = in.u64();
    uint32_t nd = in.u32();
    if (nd > 64) throw format_error("unreasonable dims block");
    for (uint32_t i = 0; i < nd; ++i) h.dims.push_back(in.u64());
    return h;
}

template <class Suite>
class ContainerReader {
public:
    ContainerReader(const Suite& suite, std::span<const uint8_t> data,
                    Protocol expect_protocol, ContainerRole expect_role)
        : suite_(suite), in_(data) {
        if (data.size() < kDigestSize) throw format_error("truncated container");
        auto body = data.subspan(0, data.size() - kDigestSize);
        auto digest = shake128(body, kDigestSize);
        if (!std::equal(digest.begin(), digest.end(), data.end() - kDigestSize))
            throw format_error("container digest mismatch");
        header_ = peek_header(data);
        if (header_.protocol != expect_protocol)
            throw format_error(std::string("container holds protocol '") +
                               protocol_name(header_.protocol) + "', expected '" +
                               protocol_name(expect_protocol) + "'");
        if (header_.role != expect_role)
            throw format_error("container role mismatch");
        if constexpr (Suite::kIsToy) {
            if (header_.backend != Backend::toy ||
                header_.toy_modulus != suite.modulus())
                throw format_error("container suite mismatch");
        } else {
            if (header_.backend != Backend::real)
                throw format_error("container suite mismatch");
        }
        // Re-walk the header region: magic, version, protocol, role, backend.
        in_ = ByteReader(body);
        for (int i = 0; i < 9; ++i) in_.u8();
        if (header_.backend == Backend::toy) in_.u64();
        uint32_t nd = in_.u32();
        for (uint32_t i = 0; i < nd; ++i) in_.u64();
        remaining_arrays_ = in_.u32();
    }

    const ContainerHeader& header() const { return header_; }

    Vec<typename Suite::Field> scalars() {
        size_t n = begin(container_detail::ArrKind::scalars);
        auto field = suite_.scalar_field();
        Vec<typename Suite::Field> v(field, n);
        for (size_t i = 0; i < n; ++i) v[i] = field.decode(in_);
        return v;
    }
    std::vector<typename Suite::G1Elt> g1() {
        size_t n = begin(container_detail::ArrKind::g1);
        std::vector<typename Suite::G1Elt> v;
        v.reserve(n);
        for (size_t i = 0; i < n; ++i) v.push_back(suite_.decode_g1(in_));
        return v;
    }
    std::vector<typename Suite::G2Elt> g2() {
        size_t n = begin(container_detail::ArrKind::g2);
        std::vector<typename Suite::G2Elt> v;
        v.reserve(n);
        for (size_t i = 0; i < n; ++i) v.push_back(suite_.decode_g2(in_));
        return v;
    }
    std::vector<typename Suite::GTElt> gt() {
        size_t n = begin(container_detail::ArrKind::gt);
        std::vector<typename Suite::GTElt> v;
        v.reserve(n);
        for (size_t i = 0; i < n; ++i) v.push_back(suite_.decode_gt(in_));
        return v;
    }
    std::vector<bytes> bigint_bytes() {
        size_t n = begin(container_detail::ArrKind::bigints);
        std::vector<bytes> v(n);
        for (size_t i = 0; i < n; ++i) {
            uint32_t len = in_.u32();
            auto sp = in_.take(len);
            v[i].assign(sp.begin(), sp.end());
        }
        return v;
    }
    std::vector<std::array<uint8_t, 32>> blobs32() {
        size_t n = begin(container_detail::ArrKind::blobs32);
        std::vector<std::array<uint8_t, 32>> v(n);
        for (size_t i = 0; i < n; ++i) {
            auto sp = in_.take(32);
            std::copy(sp.begin(), sp.end(), v[i].begin());
        }
        return v;
    }
    Matrix<typename Suite::Field> matrix() {
        begin(container_detail::ArrKind::matrix);
        return decode_matrix(suite_.scalar_field(), in_);
    }

private:
    size_t begin(container_detail::ArrKind kind) {
        if (remaining_arrays_ == 0) throw format_error("container: missing array");
        --remaining_arrays_;
        auto k = container_detail::ArrKind(in_.u8());
        if (k != kind) throw format_error("container: unexpected array kind");
        return size_t(in_.u64());
    }

    const Suite& suite_;
    ByteReader in_;
    ContainerHeader header_;
    uint32_t remaining_arrays_ = 0;
};

inline void write_file(const std::string& path, const bytes& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(data.data()),
              std::streamsize(data.size()));
    if (!out) throw format_error("short write to '" + path + "'");
}

inline bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open '" + path + "'");
    bytes data((std::istreambuf_iterator<char>(in)),
               std::istreambuf_iterator<char>());
    return data;
}

}  // namespace vermat
