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


#ifndef GRAPHBELL_STATE_VECTOR_H
#define GRAPHBELL_STATE_VECTOR_H

#include <complex>
#include <vector>

#include "graphbell/graph.h"
#include "graphbell/pauli_string.h"
#include "graphbell/stabilizer_group.h"

namespace graphbell {

/// Amplitudes indexed by basis state; qubit q is bit q of the index.
using StateVector = std::vector<std::complex<double>>;

constexpr size_t kMaxStateVectorQubits = 12;

/// |+>^n followed by a controlled-Z on every edge.
StateVector build_state_vector(const GraphSpec &g);

/// <psi| P |psi> including the phase of P. Throws std::invalid_argument on a
/// dimension mismatch.
double expectation(const StateVector &state, const PauliString &p);
double expectation(const StateVector &state, const StabilizerElement &s);

}  // namespace graphbell

#endif  // GRAPHBELL_STATE_VECTOR_H
