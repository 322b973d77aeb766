// Copyright 2026 The graphbell Authors
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


#include "graphbell/state_vector.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "graphbell/errors.h"

namespace graphbell {

StateVector build_state_vector(const GraphSpec &g) {
    if (g.n > kMaxStateVectorQubits) {
        throw InvalidInput("dense state vectors support n <= " + std::to_string(kMaxStateVectorQubits) +
                           ", got " + std::to_string(g.n));
    }
    size_t dim = size_t{1} << g.n;
    double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    StateVector out(dim, amp);
    for (auto [a, b] : g.edges) {
        size_t both = (size_t{1} << (a - 1)) | (size_t{1} << (b - 1));
        for (size_t k = 0; k < dim; k++) {
            if ((k & both) == both) {
                out[k] = -out[k];
            }
        }
    }
    return out;
}

double expectation(const StateVector &state, const PauliString &p) {
    size_t dim = size_t{1} << p.num_qubits();
    if (state.size() != dim) {
        throw std::invalid_argument("state has " + std::to_string(state.size()) + " amplitudes but the operator acts on " +
                                    std::to_string(p.num_qubits()) + " qubits");
    }
    static const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    uint32_t x = p.x_mask();
    uint32_t z = p.z_mask();
    // Y = i X Z, so the bare letter product is i^{#Y} X^x Z^z.
    std::complex<double> scale = kIPow[(p.phase_exp() + std::popcount(x & z)) & 3];
    std::complex<double> acc = 0;
    for (size_t b = 0; b < dim; b++) {
        double s = (std::popcount(static_cast<uint32_t>(b) & z) & 1) ? -1.0 : 1.0;
        acc += std::conj(state[b ^ x]) * s * state[b];
    }
    return (scale * acc).real();
}

double expectation(const StateVector &state, const StabilizerElement &s) {
    return expectation(state, s.pauli);
}

}  // namespace graphbell
