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

// Benchmark harness: per-phase wall clocks and op-counter snapshots, one CSV
// row per (protocol, size, phase).  The standalone y = A x time is always
// reported next to Compute, because that row is the baseline of every
// overhead claim; Compute is timed around its own matvec so the sub-time can
// never exceed the total.

#include <chrono>
#include <sstream>

#include "vermat/dotprod.hpp"
#include "vermat/fg.hpp"
#include "vermat/freivalds.hpp"
#include "vermat/pvmat.hpp"
#include "vermat/smallfield.hpp"
#include "vermat/spmv.hpp"

namespace vermat {

struct BenchRow {
    std::string protocol;
    size_t m = 0, n = 0;
    std::string phase;
    double wall_ms = 0;
    OpCounters counts;
    double overhead_ratio = 0;  // compute rows: compute / matvec
    double speedup_vs_fg = 0;   // pvmat compute rows, when fg was measured
};

class WallTimer {
public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string bench_csv_header() {
    return "protocol,m,n,phase,wall_ms,field_ops,g1_exp,g2_exp,gt_exp,pairings,"
           "overhead_ratio,speedup_vs_fg";
}

inline std::string bench_csv_row(const BenchRow& r) {
    std::ostringstream os;
    os << r.protocol << ',' << r.m << ',' << r.n << ',' << r.phase << ','
       << r.wall_ms << ',' << r.counts.field_ops << ',' << r.counts.g1_exp << ','
       << r.counts.g2_exp << ',' << r.counts.gt_exp << ',' << r.counts.pairings
       << ',';
    if (r.overhead_ratio > 0) os << r.overhead_ratio;
    os << ',';
    if (r.speedup_vs_fg > 0) os << r.speedup_vs_fg;
    return os.str();
}

namespace bench_detail {

template <class Fn>
std::pair<double, OpCounters> timed(Fn&& fn, int reps) {
    double total = 0;
    OpCounters counts;
    for (int r = 0; r < reps; ++r) {
        CounterScope sc;
        WallTimer t;
        fn();
        total += t.ms();
        counts = sc.counts();
    }
    return {total / reps, counts};
}

}  // namespace bench_detail

// Benchmarks one protocol at one size over a deterministic dense instance.
// The instance depends on (seed, m, n) only, so every protocol at a size
// sees the same matrix and input.
template <class Suite>
std::vector<BenchRow> bench_protocol(const Suite& suite,
                                     const std::string& protocol, size_t m,
                                     size_t n, int reps, uint64_t seed) {
    using F = typename Suite::Field;
    auto field = suite.scalar_field();
    SeededRng inst_rng(seed ^ (uint64_t(m) << 24) ^ uint64_t(n));
    Matrix<F> A(DenseMat<F>::random(field, m, n, inst_rng));
    auto x = Vec<F>::random(field, n, inst_rng);
    SeededRng rng = inst_rng.fork();

    std::vector<BenchRow> rows;
    auto push = [&](const std::string& phase, double ms, OpCounters c) {
        rows.push_back({protocol, m, n, phase, ms, c, 0, 0});
    };
    double matvec_ms = 0, compute_ms = 0;

    // The unverified baseline, timed standalone.
    {
        auto [ms, c] = bench_detail::timed([&] { A.matvec(x); }, reps);
        matvec_ms = ms;
        push("matvec", ms, c);
    }

    if (protocol == "freivalds") {
        FreivaldsChallenge<F> ch = challenge_private(A, rng);
        {
            auto [ms, c] =
                bench_detail::timed([&] { challenge_private(A, rng); }, reps);
            push("probgen", ms, c);
        }
        auto y = A.matvec(x);
        {
            auto [ms, c] = bench_detail::timed([&] { A.matvec(x); }, reps);
            compute_ms = ms;
            push("compute", ms, c);
        }
        {
            auto [ms, c] =
                bench_detail::timed([&] { verify_one(ch, x, y); }, reps);
            push("verify", ms, c);
        }
    } else if (protocol == "fg") {
        FgKeys<Suite> keys{GroupMat<typename Suite::G1Elt>{}, {}, FgSecrets<Suite>{{}, {Vec<F>(field), Vec<F>(field), Vec<F>(field), Vec<F>(field)}}};
        {
            auto [ms, c] =
                bench_detail::timed([&] { keys = fg_keygen(suite, A, rng); }, 1);
            push("keygen", ms, c);
        }
        auto vkx = fg_probgen(suite, keys.secrets.trustee, x);
        {
            auto [ms, c] = bench_detail::timed(
                [&] { fg_probgen(suite, keys.secrets.trustee, x); }, reps);
            push("probgen", ms, c);
        }
        FgProof<Suite> pf{Vec<F>(field), {}};
        {
            auto [ms, c] = bench_detail::timed(
                [&] { pf = fg_compute(suite, A, keys.W, x); }, 1);
            compute_ms = ms;
            push("compute", ms, c);
        }
        {
            auto [ms, c] = bench_detail::timed(
                [&] { fg_verify(suite, keys.a, std::span(vkx), pf); }, reps);
            push("verify", ms, c);
        }
    } else if (protocol == "spmv") {
        SpmvKeys<Suite> keys{{}, {Vec<F>(field), Vec<F>(field)}};
        {
            auto [ms, c] = bench_detail::timed(
                [&] { keys = spmv_keygen(suite, A, rng); }, reps);
            push("keygen", ms, c);
        }
        SpmvProof<Suite> pf{Vec<F>(field), {}};
        {
            auto [ms, c] = bench_detail::timed(
                [&] { pf = spmv_compute(suite, A, std::span(keys.omega), x); },
                reps);
            compute_ms = ms;
            push("compute", ms, c);
        }
        TrusteeResponse<Suite> resp{};
        {
            // The per-input trustee work plays the ProbGen row's part.
            auto [ms, c] = bench_detail::timed(
                [&] { resp = spmv_trustee(suite, keys.secrets, x, pf.y); }, reps);
            push("probgen", ms, c);
        }
        {
            auto [ms, c] = bench_detail::timed(
                [&] { spmv_verify(suite, pf, resp); }, reps);
            push("verify", ms, c);
        }
    } else if (protocol == "rank1dp" || protocol == "gendp" ||
               protocol == "chunked") {
        // Dot products of length m against a secret u; the baseline matvec
        // row doubles as the plain dot-product cost.
        auto y = Vec<F>::random(field, m, rng);
        if (protocol == "rank1dp") {
            Rank1DpKeys<Suite> keys{0, 0, Vec<F>(field), Vec<F>(field), {}, {}};
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { keys = rank1_keygen(suite, m, rng); }, reps);
                push("keygen", ms, c);
            }
            auto Y = reshape_rhs(y, keys.b2, keys.b1);
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { reshape_rhs(y, keys.b2, keys.b1); }, reps);
                push("probgen", ms, c);
            }
            std::vector<typename Suite::G1Elt> z;
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { z = rank1_compute(suite, std::span(keys.ek_eta), Y); },
                    reps);
                compute_ms = ms;
                push("compute", ms, c);
            }
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { rank1_verify(suite, keys, Y, std::span(z), rng); }, reps);
                push("verify", ms, c);
            }
        } else if (protocol == "gendp") {
            auto u = Vec<F>::random(field, m, rng);
            size_t b1 = std::max<size_t>(1, size_t(std::cbrt(double(m))));
            size_t b2 = (m + b1 - 1) / b1;
            while (b1 * b2 < m) ++b2;
            GenDpKeys<Suite> keys{0, 0, Vec<F>(field), {}, {}, {}};
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { keys = gen_keygen(suite, u, b1, b2, rng); }, 1);
                push("keygen", ms, c);
            }
            auto Y = reshape_rhs(y, b2, b1);
            {
                auto [ms, c] =
                    bench_detail::timed([&] { reshape_rhs(y, b2, b1); }, reps);
                push("probgen", ms, c);
            }
            GroupMat<typename Suite::G1Elt> C;
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { C = gen_compute(suite, keys.ek_U, Y); }, 1);
                compute_ms = ms;
                push("compute", ms, c);
            }
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { gen_verify(suite, keys, Y, C, rng); }, reps);
                push("verify", ms, c);
            }
        } else {
            auto u = Vec<F>::random(field, m, rng);
            std::optional<ChunkedDpKeys<Suite>> keys;
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { keys.emplace(chunked_keygen(suite, u, 0.75, rng)); }, 1);
                push("keygen", ms, c);
            }
            std::vector<GroupMat<typename Suite::G1Elt>> proofs;
            {
                auto [ms, c] = bench_detail::timed(
                    [&] { proofs = chunked_compute(suite, *keys, y); }, 1);
                compute_ms = ms;
                push("compute", ms, c);
            }
            {
                auto [ms, c] = bench_detail::timed(
                    [&] {
                        chunked_verify(suite, *keys, y, std::span(proofs), rng);
                    },
                    reps);
                push("verify", ms, c);
            }
        }
    } else if (protocol == "pvmat") {
        auto prm = pvmat_default_params(m, n);
        std::optional<PvmatKeys<Suite>> keys;
        {
            auto [ms, c] = bench_detail::timed(
                [&] { keys.emplace(pvmat_keygen(suite, A, prm, rng)); }, 1);
            push("keygen", ms, c);
        }
        {
            auto [ms, c] = bench_detail::timed([&] { pvmat_probgen(x); }, reps);
            push("probgen", ms, c);  // identity, zero cost
        }
        PvmatProof<Suite> pf{Vec<F>(field), {}, {}, {}, {}, {}};
        {
            auto [ms, c] =
                bench_detail::timed([&] { pf = pvmat_compute(suite, keys->ek, x); }, 1);
            compute_ms = ms;
            push("compute", ms, c);
        }
        {
            auto [ms, c] = bench_detail::timed(
                [&] { pvmat_verify(suite, keys->vk, x, pf, rng); }, reps);
            push("verify", ms, c);
        }
    } else if (protocol == "smallfield") {
        // Data field fixed to a 10-bit prime; group order from the suite.
        SmallPrimeField fp(1021);
        SeededRng srng(seed ^ 0x5f5f5f5f);
        Matrix<SmallPrimeField> As(
            DenseMat<SmallPrimeField>::random(fp, m, n, srng));
        auto xs = Vec<SmallPrimeField>::random(fp, n, srng);
        SmallFieldKeys<Suite> keys;  // default-constructible: plain members
        {
            auto [ms, c] =
                bench_detail::timed([&] { keys = sf_keygen(suite, As, srng); }, 1);
            push("keygen", ms, c);
        }
        SfProof<Suite> pf;
        {
            auto [ms, c] = bench_detail::timed(
                [&] { pf = sf_compute(suite, As, std::span(keys.omega), xs); },
                reps);
            compute_ms = ms;
            push("compute", ms, c);
        }
        SfResponse<Suite> resp;
        {
            auto [ms, c] = bench_detail::timed(
                [&] { resp = sf_trustee(suite, keys, xs, pf.y); }, reps);
            push("probgen", ms, c);
        }
        {
            auto [ms, c] = bench_detail::timed(
                [&] { sf_verify(suite, keys.p, pf, resp); }, reps);
            push("verify", ms, c);
        }
    } else {
        throw param_error("unknown protocol '" + protocol + "'");
    }

    for (auto& r : rows) {
        if (r.phase == "compute" && matvec_ms > 0)
            r.overhead_ratio = compute_ms / matvec_ms;
    }
    return rows;
}

// Fills the pvmat speed-up column wherever fg was measured at the same size.
inline void annotate_speedups(std::vector<BenchRow>& rows) {
    for (auto& r : rows) {
        if (r.protocol != "pvmat" || r.phase != "compute") continue;
        for (const auto& o : rows) {
            if (o.protocol == "fg" && o.phase == "compute" && o.m == r.m &&
                o.n == r.n && r.wall_ms > 0)
                r.speedup_vs_fg = o.wall_ms / r.wall_ms;
        }
    }
}

}  // namespace vermat
