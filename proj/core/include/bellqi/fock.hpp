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

#ifndef BELLQI_FOCK_HPP
#define BELLQI_FOCK_HPP

#include <cstddef>

#include "bellqi/sparse_ket.hpp"

namespace bellqi {

/// M-mode Bell state with uniform phase:
///   (1/sqrt(M)) * sum_i |e_i, e_i>  over idler (x) signal.
/// Exactly M entries, each amplitude 1/sqrt(M). Throws for M = 0.
SparseKet make_bell_state(size_t modes);

/// Two-mode beam splitter of reflectivity eta in (0, 1], acting on the pair
/// (signal mode `signal_mode`, environment mode `env_mode`) in the photon
/// number basis. Creation operators transform as
///
///   a_S+ -> sqrt(eta) a_S+ + sqrt(1-eta) a_E+
///   a_E+ -> sqrt(1-eta) a_S+ - sqrt(eta) a_E+
///
/// and the resulting polynomial is expanded over number states. The
/// substitution matrix is a real involution, so applying the transform twice
/// is the identity and the adjoint equals the transform itself.
///
/// Norm and the photon total of the (signal, environment) pair are preserved.
/// Throws std::invalid_argument for eta outside (0, 1], a missing environment
/// register, or mode indices out of range.
SparseKet beamsplitter_pair(const SparseKet& ket, size_t signal_mode, size_t env_mode,
                            double eta);

namespace detail {
/// n! as a double, for n <= 170.
double factorial(unsigned n);
}  // namespace detail

}  // namespace bellqi

#endif
