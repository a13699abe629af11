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

// The full publicly delegatable matrix-vector protocol.  KeyGen masks the
// projection as omega^T = g1^{u^T A + t^T + gamma delta v^T} where u is
// rank-1 (mu eta^T), t is rank-2 (rho1 tau1^T + rho2 tau2^T) and v is dense;
// Compute answers with y and four vectorized group products; Verify runs
// three Freivalds projections, one masked-component check, and the final
// pairing equation e(zeta; g2) == H D1 D2 e(Trace(C); g2^gamma).
// ProbGen is the identity: no per-input trusted work remains.

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "vermat/dotprod.hpp"
#include "vermat/suite_ops.hpp"

namespace vermat {

struct PvmatParams {
    size_t m = 0, n = 0;
    size_t b1 = 0, b2 = 0;  // b1*b2 >= m, b1+b2 ~ sqrt(m)
    size_t c1 = 0, c2 = 0;  // c1*c2 >= n
    size_t d1 = 0, d2 = 0;  // d1*d2 >= n, d1 ~ n^{1/3}
};

inline void pvmat_check_params(const PvmatParams& p) {
    if (p.m == 0 || p.n == 0 || p.b1 == 0 || p.b2 == 0 || p.c1 == 0 ||
        p.c2 == 0 || p.d1 == 0 || p.d2 == 0)
        throw param_error("pvmat: all dims must be >= 1");
    if (p.b1 * p.b2 < p.m || p.c1 * p.c2 < p.n || p.d1 * p.d2 < p.n)
        throw param_error("pvmat: block products must cover (m, n)");
}

// Unbalanced defaults: b1 = ceil(sqrt(m)/10), b2 = ceil(10 sqrt(m)),
// c likewise over n, d1 = ceil(n^{1/3}/3), d2 = ceil(3 n^{2/3}); products
// bumped up to cover m and n after rounding.
inline PvmatParams pvmat_default_params(size_t m, size_t n) {
    PvmatParams p;
    p.m = m;
    p.n = n;
    double sm = std::sqrt(double(m)), sn = std::sqrt(double(n));
    double cn = std::cbrt(double(n));
    p.b1 = std::max<size_t>(1, size_t(std::ceil(sm / 10.0)));
    p.b2 = std::max<size_t>(1, size_t(std::ceil(10.0 * sm)));
    while (p.b1 * p.b2 < m) ++p.b2;
    p.c1 = std::max<size_t>(1, size_t(std::ceil(sn / 10.0)));
    p.c2 = std::max<size_t>(1, size_t(std::ceil(10.0 * sn)));
    while (p.c1 * p.c2 < n) ++p.c2;
    p.d1 = std::max<size_t>(1, size_t(std::ceil(cn / 3.0)));
    p.d2 = std::max<size_t>(1, size_t(std::ceil(3.0 * cn * cn)));
    while (p.d1 * p.d2 < n) ++p.d2;
    pvmat_check_params(p);
    return p;
}

template <class Suite>
struct PvmatSecrets {
    using F = typename Suite::Field;
    Vec<F> mu, eta;          // b1, b2
    Vec<F> rho1, rho2;       // c1
    Vec<F> tau1, tau2;       // c2
    Vec<F> varpi;            // d1
    typename F::Elt gamma{}, delta{};  // sampled from F \ {0}
    Vec<F> v;                // n
};

template <class Suite>
struct PvmatEvalKey {
    PvmatParams prm;
    Matrix<typename Suite::Field> A;
    std::vector<typename Suite::G1Elt> omega;    // n
    std::vector<typename Suite::G1Elt> g1_tau1;  // c2
    std::vector<typename Suite::G1Elt> g1_tau2;  // c2
    std::vector<typename Suite::G1Elt> g1_eta;   // b2
    GroupMat<typename Suite::G1Elt> g1_deltaV;   // d1 x d2
};

// Group elements and dims only: the verifier never sees u, t or v.
template <class Suite>
struct PvmatVerifKey {
    PvmatParams prm;
    std::vector<typename Suite::G1Elt> g1_tau1;         // c2
    std::vector<typename Suite::G1Elt> g1_tau2;         // c2
    std::vector<typename Suite::G2Elt> g2_rho1;         // c1
    std::vector<typename Suite::G2Elt> g2_rho2;         // c1
    std::vector<typename Suite::G1Elt> g1_eta;          // b2
    std::vector<typename Suite::G2Elt> g2_mu;           // b1
    std::vector<typename Suite::G1Elt> g1_delta_varpiV; // d2
    std::vector<typename Suite::G2Elt> g2_gamma_varpi;  // d1
    typename Suite::G2Elt g2_gamma{};
};

template <class Suite>
struct PvmatKeys {
    PvmatEvalKey<Suite> ek;
    PvmatVerifKey<Suite> vk;
    PvmatSecrets<Suite> secrets;  // kept for tests and audits, never shipped
};

template <class Suite>
struct PvmatProof {
    Vec<typename Suite::Field> y;             // m
    typename Suite::G1Elt zeta{};
    std::vector<typename Suite::G1Elt> s1, s2;  // c1
    std::vector<typename Suite::G1Elt> z;       // b1
    GroupMat<typename Suite::G1Elt> C;          // d1 x d1
};

template <class Suite>
PvmatSecrets<Suite> pvmat_sample_secrets(const Suite& suite,
                                         const PvmatParams& p, SeededRng& rng) {
    using F = typename Suite::Field;
    auto field = suite.scalar_field();
    PvmatSecrets<Suite> s{Vec<F>::random(field, p.b1, rng),
                          Vec<F>::random(field, p.b2, rng),
                          Vec<F>::random(field, p.c1, rng),
                          Vec<F>::random(field, p.c1, rng),
                          Vec<F>::random(field, p.c2, rng),
                          Vec<F>::random(field, p.c2, rng),
                          Vec<F>::random(field, p.d1, rng),
                          field.zero(),
                          field.zero(),
                          Vec<F>::random(field, p.n, rng)};
    // A zero mask would void the v-component's binding.
    s.gamma = field.random_nonzero(rng);
    s.delta = field.random_nonzero(rng);
    return s;
}

template <class Suite>
PvmatKeys<Suite> pvmat_keygen_with(const Suite& suite,
                                   Matrix<typename Suite::Field> A,
                                   const PvmatParams& p,
                                   PvmatSecrets<Suite> sec) {
    using F = typename Suite::Field;
    pvmat_check_params(p);
    if (A.rows() != p.m || A.cols() != p.n)
        throw dim_error("pvmat_keygen: A must be m x n");
    auto field = suite.scalar_field();

    // u = vec(mu eta^T) truncated to m; t = vec(rho1 tau1^T + rho2 tau2^T).
    Vec<F> u(field, p.m);
    for (size_t l = 0; l < p.m; ++l)
        u[l] = field.mul(sec.mu[l / p.b2], sec.eta[l % p.b2]);
    Vec<F> t(field, p.n);
    for (size_t l = 0; l < p.n; ++l) {
        size_t i = l / p.c2, j = l % p.c2;
        t[l] = field.add(field.mul(sec.rho1[i], sec.tau1[j]),
                         field.mul(sec.rho2[i], sec.tau2[j]));
    }

    // omega^T = g1^{u^T A + t^T + gamma delta v^T}.
    Vec<F> w = A.tmatvec(u).add(t);
    auto gd = field.mul(sec.gamma, sec.delta);
    for (size_t l = 0; l < p.n; ++l)
        w[l] = field.add(w[l], field.mul(gd, sec.v[l]));

    PvmatKeys<Suite> keys{PvmatEvalKey<Suite>{p, std::move(A), {}, {}, {}, {}, {}},
                          PvmatVerifKey<Suite>{p},
                          std::move(sec)};
    const auto& s = keys.secrets;
    keys.ek.omega = g1_powers(suite, w);
    keys.ek.g1_tau1 = g1_powers(suite, s.tau1);
    keys.ek.g1_tau2 = g1_powers(suite, s.tau2);
    keys.ek.g1_eta = g1_powers(suite, s.eta);

    DenseMat<F> V = reshape_lhs(s.v, p.d1, p.d2);
    GroupMat<typename Suite::G1Elt> g1dV(p.d1, p.d2, suite.g1_id());
    const auto g = suite.g1();
    for (size_t i = 0; i < p.d1; ++i)
        for (size_t j = 0; j < p.d2; ++j)
            g1dV.at(i, j) = suite.g1_exp(g, field.mul(s.delta, V.at(i, j)));
    keys.ek.g1_deltaV = std::move(g1dV);

    keys.vk.g1_tau1 = keys.ek.g1_tau1;
    keys.vk.g1_tau2 = keys.ek.g1_tau2;
    keys.vk.g2_rho1 = g2_powers(suite, s.rho1);
    keys.vk.g2_rho2 = g2_powers(suite, s.rho2);
    keys.vk.g1_eta = keys.ek.g1_eta;
    keys.vk.g2_mu = g2_powers(suite, s.mu);
    Vec<F> varpiV = V.tmatvec(s.varpi).scaled(s.delta);  // delta varpi^T V
    keys.vk.g1_delta_varpiV = g1_powers(suite, varpiV);
    keys.vk.g2_gamma_varpi = g2_powers(suite, s.varpi.scaled(s.gamma));
    keys.vk.g2_gamma = suite.g2_exp(suite.g2(), s.gamma);
    return keys;
}

template <class Suite>
PvmatKeys<Suite> pvmat_keygen(const Suite& suite,
                              Matrix<typename Suite::Field> A,
                              const PvmatParams& p, SeededRng& rng) {
    return pvmat_keygen_with(suite, std::move(A), p,
                             pvmat_sample_secrets(suite, p, rng));
}

// ProbGen(x) = x: public delegatability, zero cost.
template <class F>
const Vec<F>& pvmat_probgen(const Vec<F>& x) {
    return x;
}

template <class Suite>
PvmatProof<Suite> pvmat_compute(const Suite& suite,
                                const PvmatEvalKey<Suite>& ek,
                                const Vec<typename Suite::Field>& x) {
    const auto& p = ek.prm;
    if (x.size() != p.n) throw dim_error("pvmat_compute: |x| != n");
    PvmatProof<Suite> pf{ek.A.matvec(x), {}, {}, {}, {}, {}};
    pf.zeta = gvec_star(suite, std::span(ek.omega), x);
    auto Xc = reshape_rhs(x, p.c2, p.c1);
    pf.s1 = grow_star_mat(suite, std::span(ek.g1_tau1), Xc);
    pf.s2 = grow_star_mat(suite, std::span(ek.g1_tau2), Xc);
    auto Y = reshape_rhs(pf.y, p.b2, p.b1);
    pf.z = grow_star_mat(suite, std::span(ek.g1_eta), Y);
    auto Xd = reshape_rhs(x, p.d2, p.d1);
    pf.C = gmat_star_mat(suite, ek.g1_deltaV, Xd);
    return pf;
}

enum class PvmatVerifyMode {
    production,  // short-circuit on the first failed check
    testing      // evaluate all five checks, for per-check statistics
};

template <class Suite>
struct PvmatVerifyResult {
    std::optional<Vec<typename Suite::Field>> y;
    int first_failed = 0;             // 0 = accepted, else 1..5
    std::array<bool, 5> passed{};     // meaningful in testing mode
    bool accepted() const { return y.has_value(); }
};

template <class Suite>
PvmatVerifyResult<Suite> pvmat_verify(
    const Suite& suite, const PvmatVerifKey<Suite>& vk,
    const Vec<typename Suite::Field>& x, const PvmatProof<Suite>& pf,
    SeededRng& rng, PvmatVerifyMode mode = PvmatVerifyMode::production) {
    using F = typename Suite::Field;
    const auto& p = vk.prm;
    if (x.size() != p.n || pf.y.size() != p.m || pf.s1.size() != p.c1 ||
        pf.s2.size() != p.c1 || pf.z.size() != p.b1 || pf.C.rows != p.d1 ||
        pf.C.cols != p.d1)
        throw dim_error("pvmat_verify: shape mismatch");
    auto field = suite.scalar_field();

    auto v1 = Vec<F>::random(field, p.c1, rng);
    auto v2 = Vec<F>::random(field, p.c1, rng);
    auto v3 = Vec<F>::random(field, p.b1, rng);
    auto v4 = Vec<F>::random(field, p.d1, rng);

    auto Xc = reshape_rhs(x, p.c2, p.c1);
    auto Y = reshape_rhs(pf.y, p.b2, p.b1);
    auto Xd = reshape_rhs(x, p.d2, p.d1);

    PvmatVerifyResult<Suite> res;
    auto record = [&](int idx, bool ok) {
        res.passed[idx - 1] = ok;
        if (!ok && res.first_failed == 0) res.first_failed = idx;
        return ok || mode == PvmatVerifyMode::testing;
    };

    // (1),(2): s_i^T * v_i == g1^{tau_i^T} * (X v_i)
    if (!record(1, dp_freivalds_ok(suite, std::span(pf.s1), std::span(vk.g1_tau1), Xc, v1)))
        return res;
    if (!record(2, dp_freivalds_ok(suite, std::span(pf.s2), std::span(vk.g1_tau2), Xc, v2)))
        return res;
    // (3): z^T * v3 == g1^{eta^T} * (Y v3)
    if (!record(3, dp_freivalds_ok(suite, std::span(pf.z), std::span(vk.g1_eta), Y, v3)))
        return res;
    // (4): theta = C * v4; prod e(theta[i]; g2^{gamma varpi[i]})
    //      == e(g1^{delta varpi^T V} * (X v4); g2^gamma)
    {
        auto theta = gmat_star_vec(suite, pf.C, v4);
        auto lhs = pair_fold(suite, std::span(theta), std::span(vk.g2_gamma_varpi));
        auto rhs = suite.pair(
            gvec_star(suite, std::span(vk.g1_delta_varpiV), Xd.matvec(v4)),
            vk.g2_gamma);
        if (!record(4, lhs == rhs)) return res;
    }
    // (5): e(zeta; g2) == H D1 D2 e(Trace(C); g2^gamma)
    {
        auto H = pair_fold(suite, std::span(pf.z), std::span(vk.g2_mu));
        auto D1 = pair_fold(suite, std::span(pf.s1), std::span(vk.g2_rho1));
        auto D2 = pair_fold(suite, std::span(pf.s2), std::span(vk.g2_rho2));
        auto rhs = suite.gt_op(
            suite.gt_op(H, suite.gt_op(D1, D2)),
            suite.pair(trace_group(suite, pf.C), vk.g2_gamma));
        auto lhs = suite.pair(pf.zeta, suite.g2());
        if (!record(5, lhs == rhs)) return res;
    }
    if (res.first_failed == 0) res.y = pf.y;
    return res;
}

}  // namespace vermat
