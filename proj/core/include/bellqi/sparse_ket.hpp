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

#ifndef BELLQI_SPARSE_KET_HPP
#define BELLQI_SPARSE_KET_HPP

#include <complex>
#include <cstddef>
#include <map>

#include "bellqi/mode_occupation.hpp"

namespace bellqi {

using Complex = std::complex<double>;

// Amplitudes below this magnitude are dropped after each transformation.
// Small enough not to disturb 1e-10-level assertions, large enough to
// absorb round-off left by destructive interference.
inline constexpr double kPruneThreshold = 1e-14;

/// Joint number-basis label over the idler, signal and (optionally)
/// environment registers. All present registers share the same mode count;
/// an empty environment means the register is absent.
struct BasisLabel {
    ModeOccupation idler;
    ModeOccupation signal;
    ModeOccupation environment;

    BasisLabel() = default;
    BasisLabel(ModeOccupation i, ModeOccupation s)
        : idler(std::move(i)), signal(std::move(s)) {}
    BasisLabel(ModeOccupation i, ModeOccupation s, ModeOccupation e)
        : idler(std::move(i)), signal(std::move(s)), environment(std::move(e)) {}

    bool has_environment() const { return !environment.empty(); }

    // (idler, signal, environment) lexicographic.
    auto operator<=>(const BasisLabel&) const = default;
};

/// Pure state stored as a map from number-basis labels to complex
/// amplitudes; only nonzero entries are kept. Immutable after construction,
/// so values can be shared read-only across threads.
class SparseKet {
  public:
    using AmplitudeMap = std::map<BasisLabel, Complex>;

    /// Zero ket of the given register shape; a valid result for branches
    /// whose amplitude vanishes identically.
    static SparseKet zero(size_t modes, bool with_environment = false);

    /// Validates that every label matches (modes, with_environment) and
    /// prunes entries with |amplitude| < prune_threshold.
    /// Throws std::invalid_argument on a register-shape mismatch.
    SparseKet(size_t modes, bool with_environment, AmplitudeMap amplitudes,
              double prune_threshold = kPruneThreshold);

    size_t modes() const { return modes_; }
    bool with_environment() const { return with_environment_; }
    const AmplitudeMap& amplitudes() const { return amplitudes_; }
    size_t term_count() const { return amplitudes_.size(); }
    bool is_zero() const { return amplitudes_.empty(); }

    /// Stored amplitude for `label`, or 0 if absent.
    Complex amplitude(const BasisLabel& label) const;

    /// Sum of |amplitude|^2.
    double norm2() const;

    SparseKet scaled(Complex factor) const;

    bool same_shape(const SparseKet& other) const {
        return modes_ == other.modes_ && with_environment_ == other.with_environment_;
    }

  private:
    size_t modes_ = 0;
    bool with_environment_ = false;
    AmplitudeMap amplitudes_;
};

/// Sesquilinear inner product <a|b> (conjugate-linear in `a`).
/// Throws std::invalid_argument if the register shapes differ.
Complex inner(const SparseKet& a, const SparseKet& b);

}  // namespace bellqi

#endif
