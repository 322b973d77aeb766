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


#include "graphbell/stabilizer_group.h"

#include <bit>

#include "graphbell/errors.h"

namespace graphbell {

std::vector<StabilizerElement> generators_from_graph(const GraphSpec &g) {
    std::vector<StabilizerElement> out;
    out.reserve(g.n);
    for (size_t i = 0; i < g.n; i++) {
        uint32_t z = g.neighbor_mask(static_cast<int>(i + 1));
        out.push_back({1u << i, PauliString(g.n, 1u << i, z, 0), +1});
    }
    return out;
}

StabilizerGroup::StabilizerGroup(std::vector<StabilizerElement> generators)
    : num_qubits_(0), generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw InvalidInput("stabilizer group needs at least one generator");
    }
    num_qubits_ = generators_[0].pauli.num_qubits();
    if (generators_.size() > PauliString::kMaxQubits) {
        throw InvalidInput("too many generators");
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (!commutes(generators_[i].pauli, generators_[j].pauli)) {
                throw ConsistencyError("generators " + generators_[i].pauli.str() + " and " +
                                       generators_[j].pauli.str() + " anticommute");
            }
        }
    }
    size_t count = size_t{1} << generators_.size();
    elements_.reserve(count);
    elements_.push_back({0, PauliString(num_qubits_), +1});
    for (uint32_t mask = 1; mask < count; mask++) {
        int top = 31 - std::countl_zero(mask);
        uint32_t rest = mask & ~(1u << top);
        PauliString p = elements_[rest].pauli * generators_[top].pauli;
        elements_.push_back({mask, p, p.hermitian_sign()});
    }
}

StabilizerGroup stabilizer_group(const std::vector<StabilizerElement> &generators) {
    return StabilizerGroup(generators);
}

StabilizerGroup stabilizer_group(const GraphSpec &g) {
    return StabilizerGroup(generators_from_graph(g));
}

}  // namespace graphbell
