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
#include <string>

namespace vermat {

// Operation tallies for one role scope.  Field ops count scalar-field
// add/sub/mul/inv; exponentiation counters count one per nonzero exponent,
// never the underlying curve arithmetic.
struct OpCounters {
    uint64_t field_ops = 0;
    uint64_t g1_exp = 0;
    uint64_t g2_exp = 0;
    uint64_t gt_exp = 0;
    uint64_t pairings = 0;
    uint64_t big_ops = 0;  // large-value integer ops (small-field variant)

    uint64_t group_exps() const { return g1_exp + g2_exp + gt_exp; }

    OpCounters& operator+=(const OpCounters& o) {
        field_ops += o.field_ops;
        g1_exp += o.g1_exp;
        g2_exp += o.g2_exp;
        gt_exp += o.gt_exp;
        pairings += o.pairings;
        big_ops += o.big_ops;
        return *this;
    }
};

enum class Role { none, preparator, trustee, prover, verifier };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::preparator: return "preparator";
        case Role::trustee: return "trustee";
        case Role::prover: return "prover";
        case Role::verifier: return "verifier";
        default: return "none";
    }
}

namespace detail {
inline thread_local OpCounters* tl_counters = nullptr;
}

inline void count_field(uint64_t n = 1) {
    if (detail::tl_counters) detail::tl_counters->field_ops += n;
}
inline void count_g1_exp(uint64_t n = 1) {
    if (detail::tl_counters) detail::tl_counters->g1_exp += n;
}
inline void count_g2_exp(uint64_t n = 1) {
    if (detail::tl_counters) detail::tl_counters->g2_exp += n;
}
inline void count_gt_exp(uint64_t n = 1) {
    if (detail::tl_counters) detail::tl_counters->gt_exp += n;
}
inline void count_pairing(uint64_t n = 1) {
    if (detail::tl_counters) detail::tl_counters->pairings += n;
}
inline void count_big(uint64_t n = 1) {
    if (detail::tl_counters) detail::tl_counters->big_ops += n;
}

// RAII role scope.  Ops on the current thread accumulate into this scope;
// on close the tally is merged into the enclosing scope, so an outer
// benchmark scope still sees nested per-role work.  Scopes on different
// threads never share an accumulator.
class CounterScope {
public:
    explicit CounterScope(Role role = Role::none)
        : role_(role), parent_(detail::tl_counters) {
        detail::tl_counters = &counts_;
    }
    ~CounterScope() {
        detail::tl_counters = parent_;
        if (parent_) *parent_ += counts_;
    }
    CounterScope(const CounterScope&) = delete;
    CounterScope& operator=(const CounterScope&) = delete;

    const OpCounters& counts() const { return counts_; }
    Role role() const { return role_; }

private:
    Role role_;
    OpCounters counts_;
    OpCounters* parent_;
};

}  // namespace vermat
