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

#include "bellqi/sparse_ket.hpp"

#include <cmath>
#include <stdexcept>

namespace bellqi {

SparseKet SparseKet::zero(size_t modes, bool with_environment) {
    return SparseKet(modes, with_environment, AmplitudeMap{});
}

SparseKet::SparseKet(size_t modes, bool with_environment, AmplitudeMap amplitudes,
                     double prune_threshold)
    : modes_(modes), with_environment_(with_environment) {
    for (auto it = amplitudes.begin(); it != amplitudes.end();) {
        const BasisLabel& label = it->first;
        if (label.idler.modes() != modes_ || label.signal.modes() != modes_) {
            throw std::invalid_argument("SparseKet: register size mismatch at label " +
                                        label.idler.to_string() + label.signal.to_string());
        }
        if (label.has_environment() != with_environment_ ||
            (with_environment_ && label.environment.modes() != modes_)) {
            throw std::invalid_argument("SparseKet: environment register mismatch");
        }
        if (std::abs(it->second) < prune_threshold) {
            it = amplitudes.erase(it);
        } else {
            ++it;
        }
    }
    amplitudes_ = std::move(amplitudes);
}

Complex SparseKet::amplitude(const BasisLabel& label) const {
    auto it = amplitudes_.find(label);
    return it == amplitudes_.end() ? Complex{0.0, 0.0} : it->second;
}

double SparseKet::norm2() const {
    double sum = 0.0;
    for (const auto& [label, amp] : amplitudes_) {
        sum += std::norm(amp);
    }
    return sum;
}

SparseKet SparseKet::scaled(Complex factor) const {
    AmplitudeMap scaled;
    for (const auto& [label, amp] : amplitudes_) {
        scaled.emplace(label, amp * factor);
    }
    return SparseKet(modes_, with_environment_, std::move(scaled));
}

Complex inner(const SparseKet& a, const SparseKet& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("inner: register shapes differ");
    }
    // Walk the smaller map, probe the larger.
    const SparseKet& small = a.term_count() <= b.term_count() ? a : b;
    const SparseKet& large = a.term_count() <= b.term_count() ? b : a;
    Complex sum{0.0, 0.0};
    for (const auto& [label, amp] : small.amplitudes()) {
        Complex other = large.amplitude(label);
        if (other == Complex{0.0, 0.0}) continue;
        if (&small == &a) {
            sum += std::conj(amp) * other;
        } else {
            sum += std::conj(other) * amp;
        }
    }
    return sum;
}

}  // namespace bellqi
