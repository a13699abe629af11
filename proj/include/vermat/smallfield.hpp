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

// Small-data-field variant of the interactive protocol: y = A x is computed
// and verified over the integers, and the verifier reduces mod p at the end.
// KeyGen avoids any large-scalar matrix product by structuring the
// projection as u_l = alpha * r_i * s_j (l = i*ceil(sqrt(m)) + j) with r, s
// small, so u^T A costs O(sqrt(m) n) small-value ops plus O(n) large-value
// ops.  The group order must exceed m n p^4 so nothing wraps.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "vermat/suite_ops.hpp"
#include "vermat/toy_suite.hpp"

namespace vermat {

using bigint = boost::multiprecision::cpp_int;

inline unsigned bigint_bits(const bigint& v) {
    return v <= 0 ? 0 : unsigned(boost::multiprecision::msb(v)) + 1;
}

// Uniform in [0, bound] by rejection on bit length.
inline bigint random_bigint_upto(SeededRng& rng, const bigint& bound) {
    if (bound <= 0) return 0;
    unsigned bits = bigint_bits(bound);
    for (;;) {
        bigint v = 0;
        for (unsigned got = 0; got < bits; got += 64) {
            v <<= 64;
            v |= rng.next_u64();
        }
        v >>= (64 - bits % 64) % 64;
        if (v <= bound) return v;
    }
}

inline bytes bigint_le_bytes(const bigint& v) {
    bytes out;
    boost::multiprecision::export_bits(v, std::back_inserter(out), 8, false);
    if (out.empty()) out.push_back(0);
    return out;
}

// Visits every stored entry (all of a dense matrix, the nonzeros of a
// sparse one).
template <class F, class Fn>
void for_each_entry(const Matrix<F>& A, Fn&& fn) {
    if (const auto* sp = A.sparse()) {
        for (const auto& t : sp->entries()) fn(t.i, t.j, t.v);
    } else {
        const auto& d = *A.dense();
        for (size_t i = 0; i < d.rows(); ++i)
            for (size_t j = 0; j < d.cols(); ++j) fn(i, j, d.at(i, j));
    }
}

template <class Suite>
struct SmallFieldKeys {
    uint64_t p = 0;  // small data-field modulus
    size_t m = 0, n = 0, sqrt_m = 0;
    bigint q;  // group order
    bigint alpha;
    std::vector<uint64_t> r, s;  // small values in [1, p), length ceil(sqrt(m))
    std::vector<bigint> u;       // u_l = alpha r_i s_j, length m
    std::vector<bigint> t;       // masks in [0, t_max]
    bigint t_max;
    std::vector<typename Suite::G1Elt> omega;  // g1^{u^T A + t^T}, over Z
    // Two conservative security estimates reported, neither asserted:
    // half the bits of alpha, and half the bits of the t sampling range.
    unsigned sec_bits_alpha = 0, sec_bits_t = 0;
};

inline bigint sf_required_bound(size_t m, size_t n, uint64_t p) {
    return bigint(m) * n * boost::multiprecision::pow(bigint(p), 4);
}

// Budget split guaranteeing the checked exponent (u^T A + t^T) x stays
// strictly below q even at the minimal legal q:
//   alpha_max * mn(p-1)^4 <= (q-1)/2 when possible, t^T x gets the rest.
struct SfBudget {
    bigint alpha_max;
    bigint t_max;
};

inline SfBudget sf_budget(const bigint& q, size_t m, size_t n, uint64_t p) {
    const bigint per_alpha =
        bigint(m) * n * boost::multiprecision::pow(bigint(p - 1), 4);
    bigint alpha_max = (q - 1) / (2 * per_alpha);
    if (alpha_max < 1) alpha_max = 1;
    bigint rest = q - 1 - alpha_max * per_alpha;
    if (rest < 0) throw param_error("smallfield: internal budget underflow");
    bigint t_max = rest / (bigint(n) * (p - 1));
    return {alpha_max, t_max};
}

template <class Suite>
SmallFieldKeys<Suite> sf_keygen_with(const Suite& suite,
                                     const Matrix<SmallPrimeField>& A,
                                     std::vector<uint64_t> r,
                                     std::vector<uint64_t> s, bigint alpha,
                                     std::vector<bigint> t) {
    const uint64_t p = A.field().modulus();
    const size_t m = A.rows(), n = A.cols();
    if (p > (1ull << 16)) throw param_error("smallfield: p must be <= 2^16");
    SmallFieldKeys<Suite> k;
    k.p = p;
    k.m = m;
    k.n = n;
    k.q = bigint(suite.group_order_dec());
    const bigint bound = sf_required_bound(m, n, p);
    if (k.q <= bound)
        throw param_error("smallfield: group order q=" + k.q.str() +
                          " must exceed m*n*p^4 = " + bound.str());

    k.sqrt_m = 1;
    while (k.sqrt_m * k.sqrt_m < m) ++k.sqrt_m;
    if (r.size() != k.sqrt_m || s.size() != k.sqrt_m || t.size() != n)
        throw dim_error("sf_keygen: secret sizes must be (ceil(sqrt(m)), n)");
    k.r = std::move(r);
    k.s = std::move(s);
    k.alpha = std::move(alpha);
    k.t = std::move(t);

    auto budget = sf_budget(k.q, m, n, p);
    if (k.alpha < 1 || k.alpha > budget.alpha_max)
        throw param_error("sf_keygen: alpha outside no-overflow budget");
    for (const auto& tv : k.t)
        if (tv < 0 || tv > budget.t_max)
            throw param_error("sf_keygen: t entry outside no-overflow budget");
    for (size_t i = 0; i < k.sqrt_m; ++i)
        if (k.r[i] < 1 || k.r[i] >= p || k.s[i] < 1 || k.s[i] >= p)
            throw param_error("sf_keygen: r, s entries must lie in [1, p)");
    k.t_max = budget.t_max;
    k.sec_bits_alpha = bigint_bits(k.alpha) / 2;
    k.sec_bits_t = bigint_bits(k.t_max) / 2;

    k.u.resize(m);
    for (size_t l = 0; l < m; ++l)
        k.u[l] = k.alpha * k.r[l / k.sqrt_m] * k.s[l % k.sqrt_m];

    // (r s^T) A by sqrt(m) groups of small matvecs, then one scaling by
    // alpha: never an O(mn) large-value product.
    std::vector<uint64_t> B(k.sqrt_m * n, 0);  // B[i][k] = sum_j s_j A[i*sq+j, k]
    for_each_entry(A, [&](size_t row, size_t col, uint64_t val) {
        size_t i = row / k.sqrt_m, j = row % k.sqrt_m;
        count_field(2);
        B[i * n + col] += k.s[j] * val;
    });
    std::vector<bigint> uTA(n);
    for (size_t col = 0; col < n; ++col) {
        unsigned __int128 acc = 0;
        for (size_t i = 0; i < k.sqrt_m; ++i) {
            count_field(2);
            acc += (unsigned __int128)k.r[i] * B[i * n + col];
        }
        count_big();
        uTA[col] = k.alpha * bigint((uint64_t)(acc >> 64)) * (bigint(1) << 64) +
                   k.alpha * bigint((uint64_t)acc);
    }

    auto field = suite.scalar_field();
    k.omega.reserve(n);
    const auto g = suite.g1();
    for (size_t col = 0; col < n; ++col) {
        count_big();
        bigint e = uTA[col] + k.t[col];
        auto le = bigint_le_bytes(e);
        k.omega.push_back(suite.g1_exp(g, field.from_canonical_le(le)));
    }
    return k;
}

template <class Suite>
SmallFieldKeys<Suite> sf_keygen(const Suite& suite,
                                const Matrix<SmallPrimeField>& A,
                                SeededRng& rng) {
    const uint64_t p = A.field().modulus();
    const size_t m = A.rows(), n = A.cols();
    if (p > (1ull << 16)) throw param_error("smallfield: p must be <= 2^16");
    const bigint q(suite.group_order_dec());
    const bigint bound = sf_required_bound(m, n, p);
    if (q <= bound)
        throw param_error("smallfield: group order q=" + q.str() +
                          " must exceed m*n*p^4 = " + bound.str());
    size_t sqrt_m = 1;
    while (sqrt_m * sqrt_m < m) ++sqrt_m;

    std::vector<uint64_t> r(sqrt_m), s(sqrt_m);
    for (auto& v : r) v = 1 + rng.uniform_below(p - 1);
    for (auto& v : s) v = 1 + rng.uniform_below(p - 1);

    auto budget = sf_budget(q, m, n, p);
    // alpha lands in the top half of its admissible range ("a randomly
    // chosen large value"), t anywhere below its cap.
    bigint half = budget.alpha_max / 2;
    bigint alpha = half + random_bigint_upto(rng, budget.alpha_max - half);
    if (alpha < 1) alpha = 1;
    std::vector<bigint> t(n);
    for (auto& tv : t) tv = random_bigint_upto(rng, budget.t_max);
    return sf_keygen_with(suite, A, std::move(r), std::move(s), std::move(alpha),
                          std::move(t));
}

template <class Suite>
struct SfProof {
    std::vector<bigint> y;  // y = A x over Z
    typename Suite::G1Elt zeta{};
};

template <class Suite>
struct SfResponse {
    bigint h;  // u^T y over Z
    bigint d;  // t^T x over Z
    typename Suite::GTElt eta{};
};

inline void sf_check_range(const Vec<SmallPrimeField>& v, uint64_t p) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] >= p) throw param_error("smallfield: input outside [0, p)");
}

template <class Suite>
SfProof<Suite> sf_compute(const Suite& suite, const Matrix<SmallPrimeField>& A,
                          std::span<const typename Suite::G1Elt> omega,
                          const Vec<SmallPrimeField>& x) {
    if (x.size() != A.cols() || omega.size() != A.cols())
        throw dim_error("sf_compute: dimension mismatch");
    sf_check_range(x, A.field().modulus());
    SfProof<Suite> pf;
    std::vector<unsigned __int128> acc(A.rows(), 0);
    for_each_entry(A, [&](size_t i, size_t j, uint64_t val) {
        count_field(2);
        acc[i] += (unsigned __int128)val * x[j];
    });
    pf.y.reserve(A.rows());
    for (auto v : acc)
        pf.y.push_back(bigint((uint64_t)(v >> 64)) * (bigint(1) << 64) +
                       bigint((uint64_t)v));
    auto field = suite.scalar_field();
    std::vector<typename Suite::Field::Elt> exps(x.size());
    for (size_t j = 0; j < x.size(); ++j) exps[j] = field.from_u64(x[j]);
    pf.zeta = suite.g1_multi_exp(omega, std::span(exps));
    return pf;
}

template <class Suite>
SfResponse<Suite> sf_trustee(const Suite& suite, const SmallFieldKeys<Suite>& k,
                             const Vec<SmallPrimeField>& x,
                             const std::vector<bigint>& y) {
    if (x.size() != k.n || y.size() != k.m)
        throw dim_error("sf_trustee: dimension mismatch");
    SfResponse<Suite> r;
    for (size_t l = 0; l < k.m; ++l) {
        count_big(2);
        r.h += k.u[l] * y[l];
    }
    for (size_t j = 0; j < k.n; ++j) {
        count_big(2);
        r.d += k.t[j] * bigint(x[j]);
    }
    bigint e = (r.h + r.d) % k.q;
    if (e < 0) e += k.q;
    auto field = suite.scalar_field();
    r.eta = suite.gt_exp(suite.gt(), field.from_canonical_le(bigint_le_bytes(e)));
    return r;
}

// Accepts iff e(zeta; g2) == eta; the verifier then reduces y mod p.
template <class Suite>
std::optional<Vec<SmallPrimeField>> sf_verify(const Suite& suite, uint64_t p,
                                              const SfProof<Suite>& pf,
                                              const SfResponse<Suite>& resp) {
    if (!(suite.pair(pf.zeta, suite.g2()) == resp.eta)) return std::nullopt;
    SmallPrimeField fp(p);
    Vec<SmallPrimeField> y(fp, pf.y.size());
    for (size_t i = 0; i < pf.y.size(); ++i)
        y[i] = uint64_t(pf.y[i] % p);
    return y;
}

// Honest end-to-end flow for one input.
template <class Suite>
std::optional<Vec<SmallPrimeField>> sf_verify_flow(
    const Suite& suite, const SmallFieldKeys<Suite>& k,
    const Matrix<SmallPrimeField>& A, const Vec<SmallPrimeField>& x) {
    auto pf = sf_compute(suite, A, std::span(k.omega), x);
    auto resp = sf_trustee(suite, k, x, pf.y);
    return sf_verify(suite, k.p, pf, resp);
}

}  // namespace vermat
