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
#include <random>

namespace vermat {

// Deterministic RNG for key material and challenges.  uniform_below uses
// rejection, not reduction, so draws are exactly uniform and reproducible
// across standard libraries (no std::uniform_int_distribution).
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, bound), bound >= 1.
    uint64_t uniform_below(uint64_t bound) {
        if (bound == 0) return 0;
        if ((bound & (bound - 1)) == 0) return gen_() & (bound - 1);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % bound;
    }

    // Derive an independent child stream (for per-instance seeding).
    SeededRng fork() { return SeededRng(gen_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 gen_;
};

}  // namespace vermat
