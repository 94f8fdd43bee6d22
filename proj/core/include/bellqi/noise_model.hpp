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

#ifndef BELLQI_NOISE_MODEL_HPP
#define BELLQI_NOISE_MODEL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellqi/mode_occupation.hpp"
#include "bellqi/rng.hpp"

namespace bellqi {

enum class NoiseKind { vacuum, thermal, poisson, finite };

/// Per-mode photon-number distribution of the background environment.
/// Modes are i.i.d.; the joint pmf over an M-mode occupation is the product
/// of per-mode pmfs. Immutable.
///
/// Thermal uses the Bose-Einstein pmf mean^n / (1+mean)^(n+1); poisson the
/// usual e^-mean mean^n / n!; finite an explicit table over 0..K.
class NoiseModel {
  public:
    static NoiseModel vacuum();
    static NoiseModel thermal(double mean);
    static NoiseModel poisson(double mean);
    static NoiseModel finite_pmf(std::vector<double> table);

    /// Parses the CLI grammar: `vacuum`, `thermal:<mean>`, `poisson:<mean>`,
    /// `pmf:<p0,p1,...>`. Throws std::invalid_argument on malformed specs.
    static NoiseModel parse(std::string_view spec);

    NoiseKind kind() const { return kind_; }
    double mean_per_mode() const { return mean_; }

    /// P(n photons in one mode).
    double pmf(uint32_t n) const;

    /// Product of per-mode pmfs across the occupation.
    double joint_pmf(const ModeOccupation& occ) const;

    /// Round-trips through parse(); used to echo configs into result files.
    std::string spec_string() const;

    /// Finite-table models: largest n with nonzero table entry; thermal and
    /// poisson have unbounded support and return UINT32_MAX. Vacuum: 0.
    uint32_t max_photons_per_mode() const;

    const std::vector<double>& table() const { return table_; }

    bool operator==(const NoiseModel&) const = default;

  private:
    NoiseModel(NoiseKind kind, double mean, std::vector<double> table)
        : kind_(kind), mean_(mean), table_(std::move(table)) {}

    NoiseKind kind_ = NoiseKind::vacuum;
    double mean_ = 0.0;
    std::vector<double> table_;  // finite kind only
};

/// One i.i.d. per-mode draw across `modes` modes, returned sparsely as
/// (mode index, count) pairs with count >= 1, sorted by index. The number of
/// occupied modes is drawn as Binomial(modes, 1 - pmf(0)) and each occupied
/// mode's count from the pmf conditioned on n >= 1, which keeps the cost
/// proportional to the occupied count rather than to `modes`.
std::vector<std::pair<size_t, uint32_t>> sample_occupation_sparse(const NoiseModel& model,
                                                                  size_t modes, Rng& rng);

/// Total photon count of one i.i.d. draw across `modes` modes, sampled
/// directly from the M-fold convolution: negative binomial for thermal,
/// Poisson(modes * mean) for poisson, multinomial category counts for finite
/// tables. O(1) per draw for thermal/poisson regardless of `modes`.
uint64_t sample_total(const NoiseModel& model, size_t modes, Rng& rng);

/// pmf of the total photon count across `modes` i.i.d. modes, for totals
/// 0..max_total inclusive. Closed-form recurrences for thermal (negative
/// binomial) and poisson; iterated convolution for finite tables (guarded to
/// modes <= 4096).
std::vector<double> total_pmf(const NoiseModel& model, size_t modes, uint64_t max_total);

/// Smallest K with P(total photons across `modes` modes > K) < tail_tol.
/// Throws std::invalid_argument unless 0 < tail_tol < 1.
uint64_t truncation_cutoff(const NoiseModel& model, size_t modes, double tail_tol);

}  // namespace bellqi

#endif
