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

// Container layouts for every protocol's key, proof and response bundles.

#include "vermat/container.hpp"
#include "vermat/dotprod.hpp"
#include "vermat/fg.hpp"
#include "vermat/freivalds.hpp"
#include "vermat/pvmat.hpp"
#include "vermat/smallfield.hpp"
#include "vermat/spmv.hpp"

namespace vermat {

//------------------------------------------------------------- freivalds

template <class Suite>
bytes save_fs_challenge(const Suite& suite,
                        const FreivaldsChallenge<typename Suite::Field>& ch) {
    uint64_t dims[3] = {ch.u.size(), ch.w.size(), ch.pair_digests.size()};
    ContainerWriter<Suite> w(suite, Protocol::freivalds, ContainerRole::challenge,
                             dims);
    w.add_scalars(ch.u);
    w.add_scalars(ch.w);
    w.add_blobs32(std::span(&ch.transcript_digest, 1));
    w.add_blobs32(std::span(ch.pair_digests));
    return w.finish();
}

template <class Suite>
FreivaldsChallenge<typename Suite::Field> load_fs_challenge(
    const Suite& suite, std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::freivalds,
                             ContainerRole::challenge);
    FreivaldsChallenge<typename Suite::Field> ch{
        FreivaldsMode::fiat_shamir, r.scalars(), r.scalars(), {}, {}};
    auto td = r.blobs32();
    if (td.size() != 1) throw format_error("challenge: bad transcript digest");
    ch.transcript_digest = td[0];
    ch.pair_digests = r.blobs32();
    return ch;
}

//------------------------------------------------------------- fg

template <class Suite>
struct FgEvalKey {
    Matrix<typename Suite::Field> A;
    GroupMat<typename Suite::G1Elt> W;
};

template <class Suite>
bytes save_fg_ek(const Suite& suite, const Matrix<typename Suite::Field>& A,
                 const GroupMat<typename Suite::G1Elt>& W) {
    uint64_t dims[2] = {A.rows(), A.cols()};
    ContainerWriter<Suite> w(suite, Protocol::fg, ContainerRole::evaluation_key,
                             dims);
    w.add_matrix(A);
    w.add_g1(std::span(W.e));
    return w.finish();
}

template <class Suite>
FgEvalKey<Suite> load_fg_ek(const Suite& suite, std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::fg,
                             ContainerRole::evaluation_key);
    auto A = r.matrix();
    GroupMat<typename Suite::G1Elt> W;
    W.rows = r.header().dims.at(0);
    W.cols = r.header().dims.at(1);
    W.e = r.g1();
    if (W.e.size() != W.rows * W.cols || A.rows() != W.rows || A.cols() != W.cols)
        throw format_error("fg ek: inconsistent shapes");
    return {std::move(A), std::move(W)};
}

template <class Suite>
bytes save_fg_vk(const Suite& suite, size_t m, size_t n,
                 const typename Suite::GTElt& a) {
    uint64_t dims[2] = {m, n};
    ContainerWriter<Suite> w(suite, Protocol::fg,
                             ContainerRole::verification_key, dims);
    w.add_gt(std::span(&a, 1));
    return w.finish();
}

template <class Suite>
typename Suite::GTElt load_fg_vk(const Suite& suite,
                                 std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::fg,
                             ContainerRole::verification_key);
    auto v = r.gt();
    if (v.size() != 1) throw format_error("fg vk: bad payload");
    return v[0];
}

template <class Suite>
bytes save_fg_trustee(const Suite& suite, const FgTrusteeKey<Suite>& tk) {
    uint64_t dims[2] = {tk.s.size(), tk.t.size()};
    ContainerWriter<Suite> w(suite, Protocol::fg, ContainerRole::trustee_key,
                             dims);
    w.add_scalars(tk.s);
    w.add_scalars(tk.rho);
    w.add_scalars(tk.t);
    w.add_scalars(tk.tau);
    return w.finish();
}

template <class Suite>
FgTrusteeKey<Suite> load_fg_trustee(const Suite& suite,
                                    std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::fg,
                             ContainerRole::trustee_key);
    auto s = r.scalars();
    auto rho = r.scalars();
    auto t = r.scalars();
    auto tau = r.scalars();
    return {std::move(s), std::move(rho), std::move(t), std::move(tau)};
}

template <class Suite>
bytes save_fg_vkx(const Suite& suite,
                  std::span<const typename Suite::GTElt> vkx) {
    uint64_t dims[1] = {vkx.size()};
    ContainerWriter<Suite> w(suite, Protocol::fg, ContainerRole::input_vkx, dims);
    w.add_gt(vkx);
    return w.finish();
}

template <class Suite>
std::vector<typename Suite::GTElt> load_fg_vkx(const Suite& suite,
                                               std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::fg, ContainerRole::input_vkx);
    return r.gt();
}

template <class Suite>
bytes save_fg_proof(const Suite& suite, const FgProof<Suite>& p) {
    uint64_t dims[1] = {p.y.size()};
    ContainerWriter<Suite> w(suite, Protocol::fg, ContainerRole::proof, dims);
    w.add_scalars(p.y);
    w.add_g1(std::span(p.z));
    return w.finish();
}

template <class Suite>
FgProof<Suite> load_fg_proof(const Suite& suite, std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::fg, ContainerRole::proof);
    auto y = r.scalars();
    auto z = r.g1();
    return {std::move(y), std::move(z)};
}

//------------------------------------------------------------- spmv

template <class Suite>
struct SpmvEvalKey {
    Matrix<typename Suite::Field> A;
    std::vector<typename Suite::G1Elt> omega;
};

template <class Suite>
bytes save_spmv_ek(const Suite& suite, const Matrix<typename Suite::Field>& A,
                   std::span<const typename Suite::G1Elt> omega) {
    uint64_t dims[2] = {A.rows(), A.cols()};
    ContainerWriter<Suite> w(suite, Protocol::spmv, ContainerRole::evaluation_key,
                             dims);
    w.add_matrix(A);
    w.add_g1(omega);
    return w.finish();
}

template <class Suite>
SpmvEvalKey<Suite> load_spmv_ek(const Suite& suite,
                                std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::spmv,
                             ContainerRole::evaluation_key);
    auto A = r.matrix();
    auto omega = r.g1();
    if (omega.size() != A.cols()) throw format_error("spmv ek: bad omega length");
    return {std::move(A), std::move(omega)};
}

template <class Suite>
bytes save_spmv_vk(const Suite& suite, size_t m, size_t n) {
    // Public verification needs only the suite; dims are carried for shape
    // checks.
    uint64_t dims[2] = {m, n};
    ContainerWriter<Suite> w(suite, Protocol::spmv,
                             ContainerRole::verification_key, dims);
    return w.finish();
}

template <class Suite>
bytes save_spmv_trustee(const Suite& suite, const SpmvSecrets<Suite>& sec) {
    uint64_t dims[2] = {sec.u.size(), sec.t.size()};
    ContainerWriter<Suite> w(suite, Protocol::spmv, ContainerRole::trustee_key,
                             dims);
    w.add_scalars(sec.u);
    w.add_scalars(sec.t);
    return w.finish();
}

template <class Suite>
SpmvSecrets<Suite> load_spmv_trustee(const Suite& suite,
                                     std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::spmv,
                             ContainerRole::trustee_key);
    auto u = r.scalars();
    auto t = r.scalars();
    return {std::move(u), std::move(t)};
}

template <class Suite>
bytes save_spmv_proof(const Suite& suite, const SpmvProof<Suite>& p) {
    uint64_t dims[1] = {p.y.size()};
    ContainerWriter<Suite> w(suite, Protocol::spmv, ContainerRole::proof, dims);
    w.add_scalars(p.y);
    w.add_g1(std::span(&p.zeta, 1));
    return w.finish();
}

template <class Suite>
SpmvProof<Suite> load_spmv_proof(const Suite& suite,
                                 std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::spmv, ContainerRole::proof);
    auto y = r.scalars();
    auto z = r.g1();
    if (z.size() != 1) throw format_error("spmv proof: bad zeta");
    return {std::move(y), z[0]};
}

template <class Suite>
bytes save_spmv_response(const Suite& suite, const TrusteeResponse<Suite>& resp) {
    uint64_t dims[0] = {};
    ContainerWriter<Suite> w(suite, Protocol::spmv, ContainerRole::response,
                             std::span<const uint64_t>(dims, 0));
    auto field = suite.scalar_field();
    Vec<typename Suite::Field> hd(field, 2);
    hd[0] = resp.h;
    hd[1] = resp.d;
    w.add_scalars(hd);
    w.add_gt(std::span(&resp.eta, 1));
    return w.finish();
}

template <class Suite>
TrusteeResponse<Suite> load_spmv_response(const Suite& suite,
                                          std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::spmv, ContainerRole::response);
    auto hd = r.scalars();
    auto eta = r.gt();
    if (hd.size() != 2 || eta.size() != 1)
        throw format_error("spmv response: bad payload");
    return {hd[0], hd[1], eta[0]};
}

//------------------------------------------------------------- rank1dp / gendp

template <class Suite>
bytes save_rank1_vk(const Suite& suite, const Rank1DpKeys<Suite>& k) {
    uint64_t dims[2] = {k.b1, k.b2};
    ContainerWriter<Suite> w(suite, Protocol::rank1dp,
                             ContainerRole::verification_key, dims);
    w.add_g1(std::span(k.ek_eta));
    w.add_g2(std::span(k.vk_mu));
    return w.finish();
}

// The loaded bundle carries the public halves only; mu and eta stay with the
// function owner.
template <class Suite>
Rank1DpKeys<Suite> load_rank1_vk(const Suite& suite,
                                 std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::rank1dp,
                             ContainerRole::verification_key);
    auto field = suite.scalar_field();
    Rank1DpKeys<Suite> k{r.header().dims.at(0), r.header().dims.at(1),
                         Vec<typename Suite::Field>(field),
                         Vec<typename Suite::Field>(field), {}, {}};
    k.ek_eta = r.g1();
    k.vk_mu = r.g2();
    if (k.ek_eta.size() != k.b2 || k.vk_mu.size() != k.b1)
        throw format_error("rank1dp vk: inconsistent shapes");
    return k;
}

template <class Suite>
bytes save_rank1_ek(const Suite& suite, const Rank1DpKeys<Suite>& k) {
    uint64_t dims[2] = {k.b1, k.b2};
    ContainerWriter<Suite> w(suite, Protocol::rank1dp,
                             ContainerRole::evaluation_key, dims);
    w.add_g1(std::span(k.ek_eta));
    return w.finish();
}

template <class Suite>
std::vector<typename Suite::G1Elt> load_rank1_ek(const Suite& suite,
                                                 std::span<const uint8_t> data,
                                                 uint64_t& b1, uint64_t& b2) {
    ContainerReader<Suite> r(suite, data, Protocol::rank1dp,
                             ContainerRole::evaluation_key);
    b1 = r.header().dims.at(0);
    b2 = r.header().dims.at(1);
    return r.g1();
}

template <class Suite>
bytes save_rank1_proof(const Suite& suite,
                       std::span<const typename Suite::G1Elt> z) {
    uint64_t dims[1] = {z.size()};
    ContainerWriter<Suite> w(suite, Protocol::rank1dp, ContainerRole::proof, dims);
    w.add_g1(z);
    return w.finish();
}

template <class Suite>
std::vector<typename Suite::G1Elt> load_rank1_proof(
    const Suite& suite, std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::rank1dp, ContainerRole::proof);
    return r.g1();
}

template <class Suite>
bytes save_gendp_vk(const Suite& suite, const GenDpKeys<Suite>& k) {
    uint64_t dims[2] = {k.b1, k.b2};
    ContainerWriter<Suite> w(suite, Protocol::gendp,
                             ContainerRole::verification_key, dims);
    w.add_g1(std::span(k.vk_wU));
    w.add_g2(std::span(k.vk_w));
    return w.finish();
}

template <class Suite>
GenDpKeys<Suite> load_gendp_vk(const Suite& suite,
                               std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::gendp,
                             ContainerRole::verification_key);
    auto field = suite.scalar_field();
    GenDpKeys<Suite> k{r.header().dims.at(0), r.header().dims.at(1),
                       Vec<typename Suite::Field>(field), {}, {}, {}};
    k.vk_wU = r.g1();
    k.vk_w = r.g2();
    if (k.vk_wU.size() != k.b2 || k.vk_w.size() != k.b1)
        throw format_error("gendp vk: inconsistent shapes");
    return k;
}

template <class Suite>
bytes save_gendp_ek(const Suite& suite, const GenDpKeys<Suite>& k) {
    uint64_t dims[2] = {k.b1, k.b2};
    ContainerWriter<Suite> w(suite, Protocol::gendp,
                             ContainerRole::evaluation_key, dims);
    w.add_g1(std::span(k.ek_U.e));
    return w.finish();
}

template <class Suite>
GroupMat<typename Suite::G1Elt> load_gendp_ek(const Suite& suite,
                                              std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::gendp,
                             ContainerRole::evaluation_key);
    GroupMat<typename Suite::G1Elt> U;
    U.rows = r.header().dims.at(0);
    U.cols = r.header().dims.at(1);
    U.e = r.g1();
    if (U.e.size() != U.rows * U.cols)
        throw format_error("gendp ek: inconsistent shapes");
    return U;
}

template <class Suite>
bytes save_gendp_proof(const Suite& suite,
                       const GroupMat<typename Suite::G1Elt>& C) {
    uint64_t dims[2] = {C.rows, C.cols};
    ContainerWriter<Suite> w(suite, Protocol::gendp, ContainerRole::proof, dims);
    w.add_g1(std::span(C.e));
    return w.finish();
}

template <class Suite>
GroupMat<typename Suite::G1Elt> load_gendp_proof(const Suite& suite,
                                                 std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::gendp, ContainerRole::proof);
    GroupMat<typename Suite::G1Elt> C;
    C.rows = r.header().dims.at(0);
    C.cols = r.header().dims.at(1);
    C.e = r.g1();
    if (C.e.size() != C.rows * C.cols)
        throw format_error("gendp proof: inconsistent shapes");
    return C;
}

// Chunked dot-product bundles share the gendp protocol tag; the 5-entry dims
// block {n, k, b1, b2, nchunks} tells them apart from the 2-entry plain one.

template <class Suite>
bytes save_chunked_ek(const Suite& suite, const ChunkedDpKeys<Suite>& keys) {
    uint64_t dims[5] = {keys.n, keys.params.k, keys.params.b1, keys.params.b2,
                        keys.chunks.size()};
    ContainerWriter<Suite> w(suite, Protocol::gendp, ContainerRole::evaluation_key,
                             dims);
    for (const auto& c : keys.chunks) w.add_g1(std::span(c.ek_U.e));
    return w.finish();
}

template <class Suite>
ChunkedDpKeys<Suite> load_chunked_frame(const ContainerHeader& h,
                                        const Suite& suite) {
    if (h.dims.size() != 5) throw format_error("chunked: bad dims block");
    ChunkedDpKeys<Suite> keys;
    keys.n = h.dims[0];
    keys.params.k = h.dims[1];
    keys.params.b1 = h.dims[2];
    keys.params.b2 = h.dims[3];
    auto field = suite.scalar_field();
    keys.chunks.assign(
        h.dims[4],
        GenDpKeys<Suite>{keys.params.b1, keys.params.b2,
                         Vec<typename Suite::Field>(field), {}, {}, {}});
    return keys;
}

template <class Suite>
ChunkedDpKeys<Suite> load_chunked_ek(const Suite& suite,
                                     std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::gendp,
                             ContainerRole::evaluation_key);
    auto keys = load_chunked_frame(r.header(), suite);
    for (auto& c : keys.chunks) {
        c.ek_U.rows = keys.params.b1;
        c.ek_U.cols = keys.params.b2;
        c.ek_U.e = r.g1();
        if (c.ek_U.e.size() != c.ek_U.rows * c.ek_U.cols)
            throw format_error("chunked ek: inconsistent shapes");
    }
    return keys;
}

template <class Suite>
bytes save_chunked_vk(const Suite& suite, const ChunkedDpKeys<Suite>& keys) {
    uint64_t dims[5] = {keys.n, keys.params.k, keys.params.b1, keys.params.b2,
                        keys.chunks.size()};
    ContainerWriter<Suite> w(suite, Protocol::gendp,
                             ContainerRole::verification_key, dims);
    for (const auto& c : keys.chunks) {
        w.add_g1(std::span(c.vk_wU));
        w.add_g2(std::span(c.vk_w));
    }
    return w.finish();
}

template <class Suite>
ChunkedDpKeys<Suite> load_chunked_vk(const Suite& suite,
                                     std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::gendp,
                             ContainerRole::verification_key);
    auto keys = load_chunked_frame(r.header(), suite);
    for (auto& c : keys.chunks) {
        c.vk_wU = r.g1();
        c.vk_w = r.g2();
        if (c.vk_wU.size() != keys.params.b2 || c.vk_w.size() != keys.params.b1)
            throw format_error("chunked vk: inconsistent shapes");
    }
    return keys;
}

template <class Suite>
bytes save_chunked_proof(const Suite& suite, const ChunkedDpKeys<Suite>& keys,
                         std::span<const GroupMat<typename Suite::G1Elt>> pfs) {
    uint64_t dims[5] = {keys.n, keys.params.k, keys.params.b1, keys.params.b2,
                        pfs.size()};
    ContainerWriter<Suite> w(suite, Protocol::gendp, ContainerRole::proof, dims);
    for (const auto& C : pfs) w.add_g1(std::span(C.e));
    return w.finish();
}

template <class Suite>
std::vector<GroupMat<typename Suite::G1Elt>> load_chunked_proof(
    const Suite& suite, std::span<const uint8_t> data,
    const ChunkedDpKeys<Suite>& keys) {
    ContainerReader<Suite> r(suite, data, Protocol::gendp, ContainerRole::proof);
    if (r.header().dims.size() != 5) throw format_error("chunked proof: bad dims");
    std::vector<GroupMat<typename Suite::G1Elt>> pfs(r.header().dims[4]);
    for (auto& C : pfs) {
        C.rows = keys.params.b1;
        C.cols = keys.params.b1;
        C.e = r.g1();
        if (C.e.size() != C.rows * C.cols)
            throw format_error("chunked proof: inconsistent shapes");
    }
    return pfs;
}

//------------------------------------------------------------- pvmat

template <class Suite>
bytes save_pvmat_ek(const Suite& suite, const PvmatEvalKey<Suite>& ek) {
    const auto& p = ek.prm;
    uint64_t dims[8] = {p.m, p.n, p.b1, p.b2, p.c1, p.c2, p.d1, p.d2};
    ContainerWriter<Suite> w(suite, Protocol::pvmat, ContainerRole::evaluation_key,
                             dims);
    w.add_matrix(ek.A);
    w.add_g1(std::span(ek.omega));
    w.add_g1(std::span(ek.g1_tau1));
    w.add_g1(std::span(ek.g1_tau2));
    w.add_g1(std::span(ek.g1_eta));
    w.add_g1(std::span(ek.g1_deltaV.e));
    return w.finish();
}

inline PvmatParams pvmat_params_from_dims(const std::vector<uint64_t>& d) {
    if (d.size() != 8) throw format_error("pvmat: bad dims block");
    PvmatParams p{d[0], d[1], d[2], d[3], d[4], d[5], d[6], d[7]};
    pvmat_check_params(p);
    return p;
}

template <class Suite>
PvmatEvalKey<Suite> load_pvmat_ek(const Suite& suite,
                                  std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::pvmat,
                             ContainerRole::evaluation_key);
    auto p = pvmat_params_from_dims(r.header().dims);
    PvmatEvalKey<Suite> ek{p, r.matrix(), {}, {}, {}, {}, {}};
    ek.omega = r.g1();
    ek.g1_tau1 = r.g1();
    ek.g1_tau2 = r.g1();
    ek.g1_eta = r.g1();
    ek.g1_deltaV.rows = p.d1;
    ek.g1_deltaV.cols = p.d2;
    ek.g1_deltaV.e = r.g1();
    if (ek.A.rows() != p.m || ek.A.cols() != p.n || ek.omega.size() != p.n ||
        ek.g1_tau1.size() != p.c2 || ek.g1_tau2.size() != p.c2 ||
        ek.g1_eta.size() != p.b2 || ek.g1_deltaV.e.size() != p.d1 * p.d2)
        throw format_error("pvmat ek: inconsistent shapes");
    return ek;
}

template <class Suite>
bytes save_pvmat_vk(const Suite& suite, const PvmatVerifKey<Suite>& vk) {
    const auto& p = vk.prm;
    uint64_t dims[8] = {p.m, p.n, p.b1, p.b2, p.c1, p.c2, p.d1, p.d2};
    ContainerWriter<Suite> w(suite, Protocol::pvmat,
                             ContainerRole::verification_key, dims);
    w.add_g1(std::span(vk.g1_tau1));
    w.add_g1(std::span(vk.g1_tau2));
    w.add_g2(std::span(vk.g2_rho1));
    w.add_g2(std::span(vk.g2_rho2));
    w.add_g1(std::span(vk.g1_eta));
    w.add_g2(std::span(vk.g2_mu));
    w.add_g1(std::span(vk.g1_delta_varpiV));
    w.add_g2(std::span(vk.g2_gamma_varpi));
    w.add_g2(std::span(&vk.g2_gamma, 1));
    return w.finish();
}

template <class Suite>
PvmatVerifKey<Suite> load_pvmat_vk(const Suite& suite,
                                   std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::pvmat,
                             ContainerRole::verification_key);
    auto p = pvmat_params_from_dims(r.header().dims);
    PvmatVerifKey<Suite> vk{p};
    vk.g1_tau1 = r.g1();
    vk.g1_tau2 = r.g1();
    vk.g2_rho1 = r.g2();
    vk.g2_rho2 = r.g2();
    vk.g1_eta = r.g1();
    vk.g2_mu = r.g2();
    vk.g1_delta_varpiV = r.g1();
    vk.g2_gamma_varpi = r.g2();
    auto gg = r.g2();
    if (gg.size() != 1 || vk.g1_tau1.size() != p.c2 || vk.g1_tau2.size() != p.c2 ||
        vk.g2_rho1.size() != p.c1 || vk.g2_rho2.size() != p.c1 ||
        vk.g1_eta.size() != p.b2 || vk.g2_mu.size() != p.b1 ||
        vk.g1_delta_varpiV.size() != p.d2 || vk.g2_gamma_varpi.size() != p.d1)
        throw format_error("pvmat vk: inconsistent shapes");
    vk.g2_gamma = gg[0];
    return vk;
}

template <class Suite>
bytes save_pvmat_proof(const Suite& suite, const PvmatProof<Suite>& pf) {
    uint64_t dims[4] = {pf.y.size(), pf.s1.size(), pf.z.size(), pf.C.rows};
    ContainerWriter<Suite> w(suite, Protocol::pvmat, ContainerRole::proof, dims);
    w.add_scalars(pf.y);
    w.add_g1(std::span(&pf.zeta, 1));
    w.add_g1(std::span(pf.s1));
    w.add_g1(std::span(pf.s2));
    w.add_g1(std::span(pf.z));
    w.add_g1(std::span(pf.C.e));
    return w.finish();
}

template <class Suite>
PvmatProof<Suite> load_pvmat_proof(const Suite& suite,
                                   std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::pvmat, ContainerRole::proof);
    PvmatProof<Suite> pf{r.scalars(), {}, {}, {}, {}, {}};
    auto zeta = r.g1();
    if (zeta.size() != 1) throw format_error("pvmat proof: bad zeta");
    pf.zeta = zeta[0];
    pf.s1 = r.g1();
    pf.s2 = r.g1();
    pf.z = r.g1();
    pf.C.rows = r.header().dims.at(3);
    pf.C.cols = pf.C.rows;
    pf.C.e = r.g1();
    if (pf.C.e.size() != pf.C.rows * pf.C.cols)
        throw format_error("pvmat proof: inconsistent C");
    return pf;
}

//------------------------------------------------------------- smallfield

template <class Suite>
bytes save_sf_ek(const Suite& suite, const Matrix<SmallPrimeField>& A,
                 const SmallFieldKeys<Suite>& k) {
    uint64_t dims[3] = {k.m, k.n, k.p};
    ContainerWriter<Suite> w(suite, Protocol::smallfield,
                             ContainerRole::evaluation_key, dims);
    bytes mat;
    encode_matrix(A, mat);
    std::vector<bytes> one{std::move(mat)};
    w.add_bigint_bytes(std::span(one));  // opaque small-field matrix blob
    w.add_g1(std::span(k.omega));
    return w.finish();
}

template <class Suite>
std::pair<Matrix<SmallPrimeField>, std::vector<typename Suite::G1Elt>> load_sf_ek(
    const Suite& suite, std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::smallfield,
                             ContainerRole::evaluation_key);
    uint64_t p = r.header().dims.at(2);
    auto blobs = r.bigint_bytes();
    if (blobs.size() != 1) throw format_error("smallfield ek: bad matrix blob");
    ByteReader mat(blobs[0]);
    auto A = decode_matrix(SmallPrimeField(p), mat);
    auto omega = r.g1();
    if (omega.size() != A.cols()) throw format_error("smallfield ek: bad omega");
    return {std::move(A), std::move(omega)};
}

template <class Suite>
bytes save_sf_trustee(const Suite& suite, const SmallFieldKeys<Suite>& k) {
    // Header records (p, q-bits, bound-check ok) alongside the dims.
    uint64_t dims[5] = {k.m, k.n, k.p, bigint_bits(k.q), 1 /* bound verified */};
    ContainerWriter<Suite> w(suite, Protocol::smallfield,
                             ContainerRole::trustee_key, dims);
    std::vector<bytes> u, t;
    for (const auto& v : k.u) u.push_back(bigint_le_bytes(v));
    for (const auto& v : k.t) t.push_back(bigint_le_bytes(v));
    w.add_bigint_bytes(std::span(u));
    w.add_bigint_bytes(std::span(t));
    return w.finish();
}

template <class Suite>
SmallFieldKeys<Suite> load_sf_trustee(const Suite& suite,
                                      std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::smallfield,
                             ContainerRole::trustee_key);
    SmallFieldKeys<Suite> k;
    k.m = r.header().dims.at(0);
    k.n = r.header().dims.at(1);
    k.p = r.header().dims.at(2);
    k.q = bigint(suite.group_order_dec());
    for (auto& b : r.bigint_bytes()) {
        bigint v;
        boost::multiprecision::import_bits(v, b.begin(), b.end(), 8, false);
        k.u.push_back(v);
    }
    for (auto& b : r.bigint_bytes()) {
        bigint v;
        boost::multiprecision::import_bits(v, b.begin(), b.end(), 8, false);
        k.t.push_back(v);
    }
    if (k.u.size() != k.m || k.t.size() != k.n)
        throw format_error("smallfield trustee: inconsistent shapes");
    return k;
}

template <class Suite>
bytes save_sf_vk(const Suite& suite, const SmallFieldKeys<Suite>& k) {
    uint64_t dims[5] = {k.m, k.n, k.p, bigint_bits(k.q), 1};
    ContainerWriter<Suite> w(suite, Protocol::smallfield,
                             ContainerRole::verification_key, dims);
    return w.finish();
}

template <class Suite>
bytes save_sf_proof(const Suite& suite, const SfProof<Suite>& pf) {
    uint64_t dims[1] = {pf.y.size()};
    ContainerWriter<Suite> w(suite, Protocol::smallfield, ContainerRole::proof,
                             dims);
    std::vector<bytes> y;
    for (const auto& v : pf.y) y.push_back(bigint_le_bytes(v));
    w.add_bigint_bytes(std::span(y));
    w.add_g1(std::span(&pf.zeta, 1));
    return w.finish();
}

template <class Suite>
SfProof<Suite> load_sf_proof(const Suite& suite, std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::smallfield,
                             ContainerRole::proof);
    SfProof<Suite> pf;
    for (auto& b : r.bigint_bytes()) {
        bigint v;
        boost::multiprecision::import_bits(v, b.begin(), b.end(), 8, false);
        pf.y.push_back(v);
    }
    auto z = r.g1();
    if (z.size() != 1) throw format_error("smallfield proof: bad zeta");
    pf.zeta = z[0];
    return pf;
}

template <class Suite>
bytes save_sf_response(const Suite& suite, const SfResponse<Suite>& resp) {
    uint64_t dims[0] = {};
    ContainerWriter<Suite> w(suite, Protocol::smallfield, ContainerRole::response,
                             std::span<const uint64_t>(dims, 0));
    std::vector<bytes> hd{bigint_le_bytes(resp.h), bigint_le_bytes(resp.d)};
    w.add_bigint_bytes(std::span(hd));
    w.add_gt(std::span(&resp.eta, 1));
    return w.finish();
}

template <class Suite>
SfResponse<Suite> load_sf_response(const Suite& suite,
                                   std::span<const uint8_t> data) {
    ContainerReader<Suite> r(suite, data, Protocol::smallfield,
                             ContainerRole::response);
    auto hd = r.bigint_bytes();
    auto eta = r.gt();
    if (hd.size() != 2 || eta.size() != 1)
        throw format_error("smallfield response: bad payload");
    SfResponse<Suite> resp;
    boost::multiprecision::import_bits(resp.h, hd[0].begin(), hd[0].end(), 8, false);
    boost::multiprecision::import_bits(resp.d, hd[1].begin(), hd[1].end(), 8, false);
    resp.eta = eta[0];
    return resp;
}

}  // namespace vermat
