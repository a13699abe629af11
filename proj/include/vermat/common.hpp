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

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vermat {

// Thrown when vector/matrix shapes do not line up.
class dim_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown on illegal protocol parameters (non-prime modulus, q <= mnp^4, ...).
class param_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown on malformed inputs: containers, Matrix Market files, vector files.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using bytes = std::vector<uint8_t>;

inline void append_u8(bytes& out, uint8_t v) { out.push_back(v); }

inline void append_u32(bytes& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

inline void append_u64(bytes& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(uint8_t(v >> (8 * i)));
}

// Cursor over a byte buffer; every read is bounds-checked.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(data_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }
    std::span<const uint8_t> take(size_t n) {
        need(n);
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    size_t remaining() const { return data_.size() - pos_; }
    size_t position() const { return pos_; }

private:
    void need(size_t n) const {
        if (data_.size() - pos_ < n) throw format_error("truncated input");
    }
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

}  // namespace vermat
