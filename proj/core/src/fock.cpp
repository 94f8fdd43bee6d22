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

#include "bellqi/fock.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace bellqi {

namespace detail {

namespace {
constexpr unsigned kMaxFactorial = 170;  // 171! overflows double

std::array<double, kMaxFactorial + 1> build_factorials() {
    std::array<double, kMaxFactorial + 1> table{};
    table[0] = 1.0;
    for (unsigned n = 1; n <= kMaxFactorial; ++n) {
        table[n] = table[n - 1] * n;
    }
    return table;
}
}  // namespace

double factorial(unsigned n) {
    static const auto table = build_factorials();
    if (n > kMaxFactorial) {
        throw std::invalid_argument("factorial: argument exceeds double range");
    }
    return table[n];
}

}  // namespace detail

SparseKet make_bell_state(size_t modes) {
    if (modes == 0) {
        throw std::invalid_argument("make_bell_state: mode count must be positive");
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(modes));
    SparseKet::AmplitudeMap amps;
    for (size_t i = 0; i < modes; ++i) {
        ModeOccupation e_i = ModeOccupation::unit(modes, i);
        amps.emplace(BasisLabel(e_i, e_i), Complex{amp, 0.0});
    }
    return SparseKet(modes, /*with_environment=*/false, std::move(amps));
}

SparseKet beamsplitter_pair(const SparseKet& ket, size_t signal_mode, size_t env_mode,
                            double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("beamsplitter_pair: eta must lie in (0, 1]");
    }
    if (!ket.with_environment()) {
        throw std::invalid_argument("beamsplitter_pair: ket has no environment register");
    }
    if (signal_mode >= ket.modes() || env_mode >= ket.modes()) {
        throw std::invalid_argument("beamsplitter_pair: mode index out of range");
    }

    const double rt = std::sqrt(eta);
    const double rr = std::sqrt(1.0 - eta);

    SparseKet::AmplitudeMap out;
    for (const auto& [label, amp] : ket.amplitudes()) {
        const uint32_t s = label.signal[signal_mode];
        const uint32_t n = label.environment[env_mode];
        const uint32_t total = s + n;

        // |s>_S |n>_E = (a_S+)^s (a_E+)^n / sqrt(s! n!) |0,0>. Substitute the
        // transformed operators, expand both binomials and group terms by the
        // output signal count p; the environment keeps total - p.
        for (uint32_t p = 0; p <= total; ++p) {
            double coeff = 0.0;
            const uint32_t j_min = p > n ? p - n : 0;
            const uint32_t j_max = std::min(p, s);
            for (uint32_t j = j_min; j <= j_max; ++j) {
                const uint32_t k = p - j;  // k <= n by construction
                double term = detail::factorial(s) /
                              (detail::factorial(j) * detail::factorial(s - j));
                term *= detail::factorial(n) /
                        (detail::factorial(k) * detail::factorial(n - k));
                term *= std::pow(rt, j) * std::pow(rr, s - j);
                term *= std::pow(rr, k) * std::pow(-rt, n - k);
                coeff += term;
            }
            if (coeff == 0.0) continue;
            coeff *= std::sqrt(detail::factorial(p) * detail::factorial(total - p) /
                               (detail::factorial(s) * detail::factorial(n)));

            BasisLabel moved = label;
            moved.signal.counts[signal_mode] = p;
            moved.environment.counts[env_mode] = total - p;
            out[moved] += amp * coeff;
        }
    }
    return SparseKet(ket.modes(), /*with_environment=*/true, std::move(out));
}

}  // namespace bellqi
