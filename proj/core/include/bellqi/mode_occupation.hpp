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

#ifndef BELLQI_MODE_OCCUPATION_HPP
#define BELLQI_MODE_OCCUPATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace bellqi {

/// Photon counts per mode for one spatial register. Plays the role of a
/// number-basis label component; the scalar total() is the component sum.
struct ModeOccupation {
    std::vector<uint32_t> counts;

    ModeOccupation() = default;
    explicit ModeOccupation(std::vector<uint32_t> c) : counts(std::move(c)) {}
    ModeOccupation(std::initializer_list<uint32_t> c) : counts(c) {}

    static ModeOccupation zeros(size_t modes) {
        return ModeOccupation(std::vector<uint32_t>(modes, 0));
    }

    /// Single photon in mode `i`, vacuum elsewhere.
    static ModeOccupation unit(size_t modes, size_t i) {
        ModeOccupation occ = zeros(modes);
        occ.counts[i] = 1;
        return occ;
    }

    size_t modes() const { return counts.size(); }
    bool empty() const { return counts.empty(); }
    uint32_t operator[](size_t i) const { return counts[i]; }

    uint64_t total() const {
        return std::accumulate(counts.begin(), counts.end(), uint64_t{0});
    }

    bool is_vacuum() const { return total() == 0; }

    /// Componentwise <=.
    bool leq(const ModeOccupation& other) const {
        if (counts.size() != other.counts.size()) return false;
        for (size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] > other.counts[i]) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < counts.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(counts[i]);
        }
        s += ')';
        return s;
    }

    // Lexicographic order; gives deterministic basis-label iteration.
    auto operator<=>(const ModeOccupation&) const = default;
};

}  // namespace bellqi

#endif
