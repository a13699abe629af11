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

// vermat: publicly verifiable outsourced matrix-vector products.
//
// Roles are separate invocations wired through key/proof containers:
//   keygen  -> ek.bin, vk.bin [, trustee.bin]
//   probgen -> per-input encodings (fg: VK_x; pvmat: identity copy)
//   compute -> proof.bin
//   trustee -> per-input trustee responses (spmv, smallfield) or
//              Fiat-Shamir challenges (freivalds)
//   verify  -> y on stdout, exit 0; exit 1 on rejection
//   bench   -> CSV timing/op-count report
//
// Exit codes: 0 accept, 1 reject, 2 malformed input, 3 parameter error.

#include <CLI11.hpp>
#include <atomic>
#include <iostream>
#include <thread>

#include "vermat/bench.hpp"
#include "vermat/bn256_suite.hpp"
#include "vermat/mmio.hpp"
#include "vermat/protocol_io.hpp"
#include "vermat/toy_suite.hpp"

namespace {

using namespace vermat;

struct Options {
    std::string protocol;
    std::string backend = "real";
    uint64_t modulus = 101;
    uint64_t seed = 1;
    std::string matrix_file, x_file, out_file;
    std::vector<std::string> xs_files, ys_files;
    std::string ek_file = "ek.bin", vk_file = "vk.bin",
                trustee_file = "trustee.bin";
    std::string proof_file = "proof.bin", resp_file, vkx_file, challenge_file,
                y_file;
    uint64_t m = 0;
    uint64_t p_small = 0;
    uint64_t b1 = 0, b2 = 0, c1 = 0, c2 = 0, d1 = 0, d2 = 0;
    double chunk_a = 0;
    std::string protocols_csv = "pvmat", sizes_csv = "64";
    int reps = 1;
    bool parallel = false;
};

std::string to_hex(const bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * b.size());
    for (uint8_t c : b) {
        s += digits[c >> 4];
        s += digits[c & 15];
    }
    return s;
}

template <class Fn>
int with_suite(const Options& opt, Fn&& fn) {
    if (opt.backend == "toy") {
        ToySuite suite(opt.modulus);
        return fn(suite);
    }
    if (opt.backend == "real") {
        Bn256Suite suite;
        return fn(suite);
    }
    throw param_error("unknown backend '" + opt.backend + "' (real|toy)");
}

template <class Suite>
PvmatParams pvmat_params_for(const Options& opt, size_t m, size_t n) {
    PvmatParams p = pvmat_default_params(m, n);
    if (opt.b1) p.b1 = opt.b1;
    if (opt.b2) p.b2 = opt.b2;
    if (opt.c1) p.c1 = opt.c1;
    if (opt.c2) p.c2 = opt.c2;
    if (opt.d1) p.d1 = opt.d1;
    if (opt.d2) p.d2 = opt.d2;
    pvmat_check_params(p);
    return p;
}

template <class Suite>
int cmd_keygen(const Suite& suite, const Options& opt) {
    auto field = suite.scalar_field();
    SeededRng rng(opt.seed);
    Protocol proto = protocol_from_name(opt.protocol);
    switch (proto) {
        case Protocol::fg: {
            auto A = read_matrix_market_file(opt.matrix_file, field);
            auto keys = fg_keygen(suite, A, rng);
            write_file(opt.ek_file, save_fg_ek(suite, A, keys.W));
            write_file(opt.vk_file,
                       save_fg_vk(suite, A.rows(), A.cols(), keys.a));
            write_file(opt.trustee_file,
                       save_fg_trustee(suite, keys.secrets.trustee));
            return 0;
        }
        case Protocol::spmv: {
            auto A = read_matrix_market_file(opt.matrix_file, field);
            auto keys = spmv_keygen(suite, A, rng);
            write_file(opt.ek_file, save_spmv_ek(suite, A, std::span(keys.omega)));
            write_file(opt.vk_file, save_spmv_vk(suite, A.rows(), A.cols()));
            write_file(opt.trustee_file, save_spmv_trustee(suite, keys.secrets));
            return 0;
        }
        case Protocol::pvmat: {
            auto A = read_matrix_market_file(opt.matrix_file, field);
            auto prm = pvmat_params_for<Suite>(opt, A.rows(), A.cols());
            auto keys = pvmat_keygen(suite, std::move(A), prm, rng);
            write_file(opt.ek_file, save_pvmat_ek(suite, keys.ek));
            write_file(opt.vk_file, save_pvmat_vk(suite, keys.vk));
            return 0;
        }
        case Protocol::rank1dp: {
            if (opt.m == 0) throw param_error("rank1dp keygen needs --m");
            auto keys = rank1_keygen(suite, opt.m, rng);
            write_file(opt.ek_file, save_rank1_ek(suite, keys));
            write_file(opt.vk_file, save_rank1_vk(suite, keys));
            return 0;
        }
        case Protocol::gendp: {
            if (opt.m == 0) throw param_error("gendp keygen needs --m");
            auto u = Vec<typename Suite::Field>::random(field, opt.m, rng);
            if (opt.chunk_a > 0) {
                auto keys = chunked_keygen(suite, u, opt.chunk_a, rng);
                write_file(opt.ek_file, save_chunked_ek(suite, keys));
                write_file(opt.vk_file, save_chunked_vk(suite, keys));
                return 0;
            }
            size_t b1 = opt.b1, b2 = opt.b2;
            if (!b1) b1 = std::max<size_t>(1, size_t(std::cbrt(double(opt.m))));
            if (!b2) {
                b2 = (opt.m + b1 - 1) / b1;
                while (b1 * b2 < opt.m) ++b2;
            }
            auto keys = gen_keygen(suite, u, b1, b2, rng);
            write_file(opt.ek_file, save_gendp_ek(suite, keys));
            write_file(opt.vk_file, save_gendp_vk(suite, keys));
            return 0;
        }
        case Protocol::smallfield: {
            if (opt.p_small == 0)
                throw param_error("smallfield keygen needs --p (small prime)");
            if (!is_prime_u64(opt.p_small))
                throw param_error("--p must be prime");
            SmallPrimeField fp(opt.p_small);
            auto A = read_matrix_market_file(opt.matrix_file, fp);
            auto keys = sf_keygen<Suite>(suite, A, rng);
            write_file(opt.ek_file, save_sf_ek(suite, A, keys));
            write_file(opt.vk_file, save_sf_vk(suite, keys));
            write_file(opt.trustee_file, save_sf_trustee(suite, keys));
            return 0;
        }
        case Protocol::freivalds:
            throw param_error(
                "freivalds needs no keygen; use 'trustee' to derive a "
                "Fiat-Shamir challenge or 'verify --matrix' for a private check");
    }
    throw param_error("unhandled protocol");
}

template <class Suite>
int cmd_probgen(const Suite& suite, const Options& opt) {
    auto field = suite.scalar_field();
    Protocol proto = protocol_from_name(opt.protocol);
    if (proto == Protocol::fg) {
        auto tk = load_fg_trustee(suite, read_file(opt.trustee_file));
        auto x = read_vector_file(opt.x_file, field);
        auto vkx = fg_probgen(suite, tk, x);
        write_file(opt.out_file.empty() ? "vkx.bin" : opt.out_file,
                   save_fg_vkx(suite, std::span(vkx)));
        return 0;
    }
    if (proto == Protocol::pvmat) {
        // sigma_x = x: public delegatability, the encoding is the input.
        auto x = read_vector_file(opt.x_file, field);
        write_vector_file(opt.out_file.empty() ? "sigma_x.txt" : opt.out_file,
                          pvmat_probgen(x));
        return 0;
    }
    throw param_error("probgen applies to fg and pvmat; spmv and smallfield "
                      "use 'trustee' after compute");
}

template <class Suite>
int cmd_compute(const Suite& suite, const Options& opt) {
    auto field = suite.scalar_field();
    Protocol proto = protocol_from_name(opt.protocol);
    const std::string out = opt.out_file.empty() ? "proof.bin" : opt.out_file;
    switch (proto) {
        case Protocol::fg: {
            auto ek = load_fg_ek(suite, read_file(opt.ek_file));
            auto x = read_vector_file(opt.x_file, field);
            write_file(out, save_fg_proof(suite, fg_compute(suite, ek.A, ek.W, x)));
            return 0;
        }
        case Protocol::spmv: {
            auto ek = load_spmv_ek(suite, read_file(opt.ek_file));
            auto x = read_vector_file(opt.x_file, field);
            write_file(out, save_spmv_proof(
                                suite, spmv_compute(suite, ek.A,
                                                    std::span(ek.omega), x)));
            return 0;
        }
        case Protocol::pvmat: {
            auto ek = load_pvmat_ek(suite, read_file(opt.ek_file));
            auto x = read_vector_file(opt.x_file, field);
            write_file(out, save_pvmat_proof(suite, pvmat_compute(suite, ek, x)));
            return 0;
        }
        case Protocol::rank1dp: {
            uint64_t b1 = 0, b2 = 0;
            auto ek = load_rank1_ek(suite, read_file(opt.ek_file), b1, b2);
            auto y = read_vector_file(opt.x_file, field);
            auto Y = reshape_rhs(y, b2, b1);
            auto z = rank1_compute(suite, std::span(ek), Y);
            write_file(out, save_rank1_proof(suite, std::span(z)));
            return 0;
        }
        case Protocol::gendp: {
            auto data = read_file(opt.ek_file);
            auto y = read_vector_file(opt.x_file, field);
            if (peek_header(data).dims.size() == 5) {
                auto keys = load_chunked_ek(suite, data);
                auto proofs = chunked_compute(suite, keys, y);
                write_file(out, save_chunked_proof(suite, keys, std::span(proofs)));
            } else {
                auto U = load_gendp_ek(suite, data);
                auto Y = reshape_rhs(y, U.cols, U.rows);
                write_file(out, save_gendp_proof(suite, gen_compute(suite, U, Y)));
            }
            return 0;
        }
        case Protocol::smallfield: {
            auto [A, omega] = load_sf_ek(suite, read_file(opt.ek_file));
            auto x = read_vector_file(opt.x_file, A.field());
            write_file(out, save_sf_proof(suite, sf_compute(suite, A,
                                                            std::span(omega), x)));
            return 0;
        }
        default:
            throw param_error("compute does not apply to this protocol");
    }
}

template <class Suite>
int cmd_trustee(const Suite& suite, const Options& opt) {
    auto field = suite.scalar_field();
    Protocol proto = protocol_from_name(opt.protocol);
    const std::string out = opt.out_file.empty() ? "resp.bin" : opt.out_file;
    if (proto == Protocol::spmv) {
        auto sec = load_spmv_trustee(suite, read_file(opt.trustee_file));
        auto x = read_vector_file(opt.x_file, field);
        auto pf = load_spmv_proof(suite, read_file(opt.proof_file));
        write_file(out, save_spmv_response(
                            suite, spmv_trustee(suite, sec, x, pf.y)));
        return 0;
    }
    if (proto == Protocol::smallfield) {
        auto keys = load_sf_trustee(suite, read_file(opt.trustee_file));
        SmallPrimeField fp(keys.p);
        auto x = read_vector_file(opt.x_file, fp);
        auto pf = load_sf_proof(suite, read_file(opt.proof_file));
        write_file(out, save_sf_response(suite, sf_trustee(suite, keys, x, pf.y)));
        return 0;
    }
    if (proto == Protocol::freivalds) {
        auto A = read_matrix_market_file(opt.matrix_file, field);
        if (opt.xs_files.size() != opt.ys_files.size() || opt.xs_files.empty())
            throw param_error("freivalds trustee needs matching --x/--y lists");
        std::vector<Vec<typename Suite::Field>> xs, ys;
        for (const auto& f : opt.xs_files) xs.push_back(read_vector_file(f, field));
        for (const auto& f : opt.ys_files) ys.push_back(read_vector_file(f, field));
        auto ch = challenge_fs(A, xs, ys);
        write_file(opt.out_file.empty() ? "challenge.bin" : opt.out_file,
                   save_fs_challenge(suite, ch));
        return 0;
    }
    if (proto == Protocol::fg)
        throw param_error("the fg trustee step is 'probgen'");
    throw param_error("trustee does not apply to this protocol");
}

template <class F>
void print_vector(const Vec<F>& y) {
    write_vector(std::cout, y);
}

template <class Suite>
int cmd_verify(const Suite& suite, const Options& opt) {
    auto field = suite.scalar_field();
    Protocol proto = protocol_from_name(opt.protocol);
    SeededRng rng(opt.seed);
    switch (proto) {
        case Protocol::fg: {
            auto a = load_fg_vk(suite, read_file(opt.vk_file));
            auto vkx = load_fg_vkx(suite, read_file(opt.vkx_file));
            auto pf = load_fg_proof(suite, read_file(opt.proof_file));
            auto y = fg_verify(suite, a, std::span(vkx), pf);
            if (!y) return 1;
            print_vector(*y);
            return 0;
        }
        case Protocol::spmv: {
            // vk pins the suite and dims; verification itself is one pairing.
            ContainerReader<Suite>(suite, read_file(opt.vk_file), Protocol::spmv,
                                   ContainerRole::verification_key);
            auto pf = load_spmv_proof(suite, read_file(opt.proof_file));
            auto resp = load_spmv_response(suite, read_file(opt.resp_file));
            auto y = spmv_verify(suite, pf, resp);
            if (!y) return 1;
            print_vector(*y);
            return 0;
        }
        case Protocol::pvmat: {
            auto vk = load_pvmat_vk(suite, read_file(opt.vk_file));
            auto x = read_vector_file(opt.x_file, field);
            auto pf = load_pvmat_proof(suite, read_file(opt.proof_file));
            auto res = pvmat_verify(suite, vk, x, pf, rng);
            if (!res.accepted()) return 1;
            print_vector(*res.y);
            return 0;
        }
        case Protocol::rank1dp: {
            auto keys = load_rank1_vk(suite, read_file(opt.vk_file));
            auto y = read_vector_file(opt.x_file, field);
            auto Y = reshape_rhs(y, keys.b2, keys.b1);
            auto z = load_rank1_proof(suite, read_file(opt.proof_file));
            auto out = rank1_verify(suite, keys, Y, std::span(z), rng);
            if (!out) return 1;
            bytes enc;
            suite.encode_gt(*out, enc);
            std::cout << to_hex(enc) << "\n";
            return 0;
        }
        case Protocol::gendp: {
            auto vkdata = read_file(opt.vk_file);
            auto y = read_vector_file(opt.x_file, field);
            bytes enc;
            if (peek_header(vkdata).dims.size() == 5) {
                auto keys = load_chunked_vk(suite, vkdata);
                auto proofs =
                    load_chunked_proof(suite, read_file(opt.proof_file), keys);
                auto out =
                    chunked_verify(suite, keys, y, std::span(proofs), rng);
                if (!out) return 1;
                suite.encode_g1(*out, enc);
            } else {
                auto keys = load_gendp_vk(suite, vkdata);
                auto Y = reshape_rhs(y, keys.b2, keys.b1);
                auto C = load_gendp_proof(suite, read_file(opt.proof_file));
                auto out = gen_verify(suite, keys, Y, C, rng);
                if (!out) return 1;
                suite.encode_g1(*out, enc);
            }
            std::cout << to_hex(enc) << "\n";
            return 0;
        }
        case Protocol::smallfield: {
            auto vkdata = read_file(opt.vk_file);
            ContainerReader<Suite> vk(suite, vkdata, Protocol::smallfield,
                                      ContainerRole::verification_key);
            uint64_t p = vk.header().dims.at(2);
            auto pf = load_sf_proof(suite, read_file(opt.proof_file));
            auto resp = load_sf_response(suite, read_file(opt.resp_file));
            auto y = sf_verify(suite, p, pf, resp);
            if (!y) return 1;
            print_vector(*y);
            return 0;
        }
        case Protocol::freivalds: {
            auto x = read_vector_file(opt.x_file, field);
            auto y = read_vector_file(opt.y_file, field);
            bool ok;
            if (!opt.challenge_file.empty()) {
                auto ch = load_fs_challenge(suite, read_file(opt.challenge_file));
                ok = verify_one(ch, x, y);
            } else {
                auto A = read_matrix_market_file(opt.matrix_file, field);
                auto ch = challenge_private(A, rng);
                ok = verify_one(ch, x, y);
            }
            if (!ok) return 1;
            print_vector(y);
            return 0;
        }
    }
    throw param_error("unhandled protocol");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

template <class Suite>
int cmd_bench(const Suite& suite, const Options& opt) {
    auto protocols = split_csv(opt.protocols_csv);
    std::vector<size_t> sizes;
    for (const auto& s : split_csv(opt.sizes_csv)) {
        long long v = std::stoll(s);
        if (v <= 0) throw param_error("sizes must be positive");
        sizes.push_back(size_t(v));
    }
    struct Cell {
        std::string proto;
        size_t size;
        std::vector<BenchRow> rows;
    };
    std::vector<Cell> cells;
    for (const auto& proto : protocols) {
        (void)protocol_from_name(proto == "chunked" ? "gendp" : proto);
        for (size_t sz : sizes) cells.push_back({proto, sz, {}});
    }
    if (opt.parallel) {
        // Correctness sweeps only: cells run concurrently (per-thread
        // counter scopes stay disjoint), wall clocks contend for cores.
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        size_t nthreads = std::min<size_t>(
            cells.size(), std::max(1u, std::thread::hardware_concurrency()));
        for (size_t t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < cells.size();
                     i = next.fetch_add(1)) {
                    cells[i].rows = bench_protocol(suite, cells[i].proto,
                                                   cells[i].size, cells[i].size,
                                                   opt.reps, opt.seed);
                }
            });
        }
        for (auto& th : pool) th.join();
    } else {
        for (auto& c : cells)
            c.rows = bench_protocol(suite, c.proto, c.size, c.size, opt.reps,
                                    opt.seed);
    }
    std::vector<BenchRow> rows;
    for (auto& c : cells) rows.insert(rows.end(), c.rows.begin(), c.rows.end());
    annotate_speedups(rows);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.out_file.empty()) {
        file.open(opt.out_file);
        if (!file) throw format_error("cannot write '" + opt.out_file + "'");
        os = &file;
    }
    *os << bench_csv_header() << "\n";
    for (const auto& r : rows) *os << bench_csv_row(r) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"publicly verifiable outsourced matrix-vector products"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--protocol", opt.protocol,
                        "freivalds|fg|spmv|rank1dp|gendp|pvmat|smallfield");
        sub->add_option("--backend", opt.backend, "real|toy (default real)");
        sub->add_option("--modulus", opt.modulus, "toy backend modulus (prime)");
        sub->add_option("--seed", opt.seed, "deterministic seed");
    };

    auto* kg = app.add_subcommand("keygen", "prepare keys for a matrix");
    add_common(kg);
    kg->add_option("--matrix", opt.matrix_file, "Matrix Market file");
    kg->add_option("--m", opt.m, "dot-product length (rank1dp/gendp)");
    kg->add_option("--p", opt.p_small, "small data-field prime (smallfield)");
    kg->add_option("--ek", opt.ek_file, "evaluation key output");
    kg->add_option("--vk", opt.vk_file, "verification key output");
    kg->add_option("--trustee", opt.trustee_file, "trustee key output");
    kg->add_option("--b1", opt.b1);
    kg->add_option("--b2", opt.b2);
    kg->add_option("--c1", opt.c1);
    kg->add_option("--c2", opt.c2);
    kg->add_option("--d1", opt.d1);
    kg->add_option("--d2", opt.d2);
    kg->add_option("--chunk-a", opt.chunk_a, "chunk exponent a in (0,1] (gendp)");

    auto* pg = app.add_subcommand("probgen", "per-input preparation");
    add_common(pg);
    pg->add_option("--trustee", opt.trustee_file);
    pg->add_option("--x", opt.x_file, "input vector file");
    pg->add_option("--out", opt.out_file);

    auto* cp = app.add_subcommand("compute", "prover: answer with a proof");
    add_common(cp);
    cp->add_option("--ek", opt.ek_file);
    cp->add_option("--x", opt.x_file, "input vector file");
    cp->add_option("--out", opt.out_file);

    auto* tr = app.add_subcommand("trustee", "per-input trustee step");
    add_common(tr);
    tr->add_option("--trustee", opt.trustee_file);
    tr->add_option("--matrix", opt.matrix_file, "matrix (freivalds)");
    tr->add_option("--x", opt.xs_files, "input vector file(s)")->take_all();
    tr->add_option("--y", opt.ys_files, "claimed output file(s)")->take_all();
    tr->add_option("--proof", opt.proof_file);
    tr->add_option("--out", opt.out_file);

    auto* vf = app.add_subcommand("verify", "check a proof, print y");
    add_common(vf);
    vf->add_option("--vk", opt.vk_file);
    vf->add_option("--x", opt.x_file);
    vf->add_option("--y", opt.y_file, "claimed output (freivalds)");
    vf->add_option("--proof", opt.proof_file);
    vf->add_option("--resp", opt.resp_file, "trustee response (spmv/smallfield)");
    vf->add_option("--vkx", opt.vkx_file, "per-input key (fg)");
    vf->add_option("--matrix", opt.matrix_file, "matrix (freivalds private)");
    vf->add_option("--challenge", opt.challenge_file, "FS challenge (freivalds)");

    auto* bn = app.add_subcommand("bench", "timing/op-count CSV report");
    add_common(bn);
    bn->add_option("--protocols", opt.protocols_csv, "comma-separated list");
    bn->add_option("--sizes", opt.sizes_csv, "comma-separated m=n sizes");
    bn->add_option("--reps", opt.reps, "repetitions per phase");
    bn->add_option("--out", opt.out_file, "CSV output file (default stdout)");
    bn->add_flag("--parallel", opt.parallel,
                 "run cells concurrently (correctness sweeps only; distorts "
                 "timings)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 3;
    }

    try {
        // The trustee subcommand reuses xs_files for its single --x too.
        if (vf->parsed() || cp->parsed() || pg->parsed() || tr->parsed()) {
            if (opt.x_file.empty() && !opt.xs_files.empty())
                opt.x_file = opt.xs_files.front();
        }
        if (kg->parsed()) return with_suite(opt, [&](auto& s) { return cmd_keygen(s, opt); });
        if (pg->parsed()) return with_suite(opt, [&](auto& s) { return cmd_probgen(s, opt); });
        if (cp->parsed()) return with_suite(opt, [&](auto& s) { return cmd_compute(s, opt); });
        if (tr->parsed()) return with_suite(opt, [&](auto& s) { return cmd_trustee(s, opt); });
        if (vf->parsed()) return with_suite(opt, [&](auto& s) { return cmd_verify(s, opt); });
        if (bn->parsed()) return with_suite(opt, [&](auto& s) { return cmd_bench(s, opt); });
        return 3;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {  // param_error, dim_error
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
