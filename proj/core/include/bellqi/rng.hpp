// Copyright 2026 The bellqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELLQI_RNG_HPP
#define BELLQI_RNG_HPP

#include <cstdint>
#include <random>

namespace bellqi {

// All randomized routines take an explicit engine (or a seed plus stream
// index) so results are reproducible bit-for-bit for a fixed seed, stream
// layout and build.
using Rng = std::mt19937_64;

// SplitMix64 step; used only to expand user seeds into substream seeds.
inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Substream rule: substream k of seed s is an mt19937_64 seeded with the
// (k+1)-th SplitMix64 output of s. Parallel estimators give substream k to
// worker k; single-stream callers use substream 0.
inline Rng make_rng(uint64_t seed, uint64_t stream = 0) {
    uint64_t state = seed;
    uint64_t out = 0;
    for (uint64_t i = 0; i <= stream; ++i) {
        out = splitmix64_next(state);
    }
    return Rng(out);
}

}  // namespace bellqi

#endif
