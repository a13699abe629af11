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

// Transparent pairing backend over (Z_q, +) with e(x, y) = x*y mod q.
// Bilinear and non-degenerate by construction, and discrete logs are free,
// which is exactly what makes it useful as a test oracle.  It is insecure by
// design and says so in its tag.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vermat/common.hpp"
#include "vermat/counters.hpp"
#include "vermat/rng.hpp"

namespace vermat {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t q) {
    return uint64_t((__uint128_t)a * b % q);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t q) {
    uint64_t acc = 1 % q;
    base %= q;
    while (e) {
        if (e & 1) acc = mulmod_u64(acc, base, q);
        base = mulmod_u64(base, base, q);
        e >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Prime field with a runtime word-size modulus.  Arithmetic bumps the
// field-op counter of the enclosing role scope.
class SmallPrimeField {
public:
    using Elt = uint64_t;

    explicit SmallPrimeField(uint64_t q) : q_(q) {}

    uint64_t modulus() const { return q_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1 % q_; }
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }

    Elt add(Elt a, Elt b) const {
        count_field();
        Elt s = a + b;  // q < 2^63 in practice; still guard
        if (s >= q_ || s < a) s -= q_;
        return s;
    }
    Elt sub(Elt a, Elt b) const {
        count_field();
        return a >= b ? a - b : a + (q_ - b);
    }
    Elt neg(Elt a) const {
        count_field();
        return a == 0 ? 0 : q_ - a;
    }
    Elt mul(Elt a, Elt b) const {
        count_field();
        return mulmod_u64(a, b, q_);
    }
    Elt inv(Elt a) const {
        if (a == 0) throw param_error("field inverse of zero");
        count_field();
        return powmod_u64(a, q_ - 2, q_);
    }

    Elt from_u64(uint64_t v) const { return v % q_; }
    Elt from_i64(int64_t v) const {
        int64_t r = v % int64_t(q_);
        if (r < 0) r += int64_t(q_);
        return uint64_t(r);
    }
    Elt from_decimal(const std::string& s) const {
        if (s.empty()) throw format_error("empty number");
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) throw format_error("bad number '" + s + "'");
        uint64_t acc = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw format_error("bad number '" + s + "'");
            acc = (mulmod_u64(acc, 10, q_) + uint64_t(s[i] - '0')) % q_;
        }
        return s[0] == '-' ? (acc ? q_ - acc : 0) : acc;
    }

    Elt random(SeededRng& rng) const { return rng.uniform_below(q_); }
    Elt random_nonzero(SeededRng& rng) const {
        return 1 + rng.uniform_below(q_ - 1);
    }

    // Candidate = low bits(q) bits of a 256-bit XOF block; nullopt rejects.
    std::optional<Elt> try_from_block(const uint8_t block[32]) const {
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(block[i]) << (8 * i);
        size_t bits = 0;
        for (uint64_t t = q_; t; t >>= 1) ++bits;
        if (bits < 64) v &= (uint64_t(1) << bits) - 1;
        if (v >= q_) return std::nullopt;
        return v;
    }

    static constexpr size_t kEncodedSize = 8;
    void encode(Elt a, bytes& out) const { append_u64(out, a); }
    Elt decode(ByteReader& in) const {
        uint64_t v = in.u64();
        if (v >= q_) throw format_error("field element out of range");
        return v;
    }

    // Little-endian bytes of a value already known to be < q.
    Elt from_canonical_le(std::span<const uint8_t> le) const {
        uint64_t v = 0;
        for (size_t i = 0; i < le.size(); ++i) {
            if (i >= 8) {
                if (le[i] != 0) throw param_error("value exceeds field modulus");
                continue;
            }
            v |= uint64_t(le[i]) << (8 * i);
        }
        if (v >= q_) throw param_error("value exceeds field modulus");
        return v;
    }

    std::string to_string(Elt a) const { return std::to_string(a); }

private:
    uint64_t q_;
};

class ToySuite {
public:
    static constexpr bool kIsToy = true;

    using Field = SmallPrimeField;
    struct G1Elt {
        uint64_t v;
        bool operator==(const G1Elt&) const = default;
    };
    struct G2Elt {
        uint64_t v;
        bool operator==(const G2Elt&) const = default;
    };
    struct GTElt {
        uint64_t v;
        bool operator==(const GTElt&) const = default;
    };

    explicit ToySuite(uint64_t q) : q_(q) {
        if (!is_prime_u64(q) || q < 3) throw param_error("toy modulus must be a prime >= 3");
    }

    std::string backend_name() const { return "toy(insecure)"; }
    uint64_t modulus() const { return q_; }
    std::string group_order_dec() const { return std::to_string(q_); }
    size_t scalar_bits() const {
        size_t b = 0;
        for (uint64_t v = q_; v; v >>= 1) ++b;
        return b;
    }

    Field scalar_field() const { return Field(q_); }

    // Generators: g1 = g2 = 1 in (Z_q, +), gT = e(g1, g2) = 1.
    G1Elt g1() const { return {1 % q_}; }
    G2Elt g2() const { return {1 % q_}; }
    GTElt gt() const { return {1 % q_}; }
    G1Elt g1_id() const { return {0}; }
    G2Elt g2_id() const { return {0}; }
    GTElt gt_id() const { return {0}; }

    // Group law, written multiplicatively by callers.
    G1Elt g1_op(G1Elt a, G1Elt b) const { return {addq(a.v, b.v)}; }
    G2Elt g2_op(G2Elt a, G2Elt b) const { return {addq(a.v, b.v)}; }
    GTElt gt_op(GTElt a, GTElt b) const { return {addq(a.v, b.v)}; }
    G1Elt g1_inv(G1Elt a) const { return {a.v ? q_ - a.v : 0}; }
    GTElt gt_inv(GTElt a) const { return {a.v ? q_ - a.v : 0}; }

    G1Elt g1_exp(G1Elt base, Field::Elt e) const {
        if (e != 0) count_g1_exp();
        return {mulmod_u64(base.v, e, q_)};
    }
    G2Elt g2_exp(G2Elt base, Field::Elt e) const {
        if (e != 0) count_g2_exp();
        return {mulmod_u64(base.v, e, q_)};
    }
    GTElt gt_exp(GTElt base, Field::Elt e) const {
        if (e != 0) count_gt_exp();
        return {mulmod_u64(base.v, e, q_)};
    }

    G1Elt g1_multi_exp(std::span<const G1Elt> bases,
                       std::span<const Field::Elt> exps) const {
        if (bases.size() != exps.size())
            throw dim_error("multi_exp length mismatch");
        uint64_t acc = 0;
        for (size_t i = 0; i < bases.size(); ++i) {
            if (exps[i] == 0) continue;  // identity factor, not counted
            count_g1_exp();
            acc = addq(acc, mulmod_u64(bases[i].v, exps[i], q_));
        }
        return {acc};
    }
    G2Elt g2_multi_exp(std::span<const G2Elt> bases,
                       std::span<const Field::Elt> exps) const {
        if (bases.size() != exps.size())
            throw dim_error("multi_exp length mismatch");
        uint64_t acc = 0;
        for (size_t i = 0; i < bases.size(); ++i) {
            if (exps[i] == 0) continue;
            count_g2_exp();
            acc = addq(acc, mulmod_u64(bases[i].v, exps[i], q_));
        }
        return {acc};
    }

    GTElt pair(G1Elt a, G2Elt b) const {
        count_pairing();
        return {mulmod_u64(a.v, b.v, q_)};
    }

    G1Elt g1_random(SeededRng& rng) const { return {rng.uniform_below(q_)}; }
    G2Elt g2_random(SeededRng& rng) const { return {rng.uniform_below(q_)}; }
    GTElt gt_random(SeededRng& rng) const { return {rng.uniform_below(q_)}; }

    // Free discrete logs relative to the generators; the whole point of the
    // toy backend.
    uint64_t dlog_g1(G1Elt a) const { return a.v; }
    uint64_t dlog_g2(G2Elt a) const { return a.v; }
    uint64_t dlog_gt(GTElt a) const { return a.v; }

    // Canonical encoding: 1-byte group tag, then 8-byte LE residue.
    void encode_g1(G1Elt a, bytes& out) const { encode_tagged(0x01, a.v, out); }
    void encode_g2(G2Elt a, bytes& out) const { encode_tagged(0x02, a.v, out); }
    void encode_gt(GTElt a, bytes& out) const { encode_tagged(0x03, a.v, out); }
    G1Elt decode_g1(ByteReader& in) const { return {decode_tagged(0x01, in)}; }
    G2Elt decode_g2(ByteReader& in) const { return {decode_tagged(0x02, in)}; }
    GTElt decode_gt(ByteReader& in) const { return {decode_tagged(0x03, in)}; }

private:
    uint64_t addq(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        if (s >= q_) s -= q_;
        return s;
    }
    void encode_tagged(uint8_t tag, uint64_t v, bytes& out) const {
        append_u8(out, tag);
        append_u64(out, v);
    }
    uint64_t decode_tagged(uint8_t tag, ByteReader& in) const {
        uint8_t t = in.u8();
        if (t != tag) throw format_error("group tag mismatch");
        uint64_t v = in.u64();
        if (v >= q_) throw format_error("group element out of range");
        return v;
    }

    uint64_t q_;
};

// suite_toy(q): the spec-level constructor name.
inline ToySuite suite_toy(uint64_t q) { return ToySuite(q); }

}  // namespace vermat
