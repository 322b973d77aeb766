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


#ifndef GRAPHBELL_STABILIZER_GROUP_H
#define GRAPHBELL_STABILIZER_GROUP_H

#include <cstdint>
#include <vector>

#include "graphbell/graph.h"
#include "graphbell/pauli_string.h"

namespace graphbell {

/// s_I: the ordered product of the generators g_i for i in index_set.
struct StabilizerElement {
    uint32_t index_set = 0;
    PauliString pauli{1};
    int sign = +1;

    bool operator==(const StabilizerElement &other) const = default;
};

/// g_i = X_i times Z_j on every neighbour j of i, with index_set = {i}.
std::vector<StabilizerElement> generators_from_graph(const GraphSpec &g);

/// The 2^n elements of a stabilizer group, indexed by generator mask.
class StabilizerGroup {
   public:
    explicit StabilizerGroup(std::vector<StabilizerElement> generators);

    size_t num_qubits() const { return num_qubits_; }
    size_t size() const { return elements_.size(); }
    const std::vector<StabilizerElement> &generators() const { return generators_; }
    const std::vector<StabilizerElement> &elements() const { return elements_; }
    const StabilizerElement &operator[](uint32_t mask) const { return elements_.at(mask); }

   private:
    size_t num_qubits_;
    std::vector<StabilizerElement> generators_;
    std::vector<StabilizerElement> elements_;
};

/// Throws ConsistencyError when two generators anticommute.
StabilizerGroup stabilizer_group(const std::vector<StabilizerElement> &generators);
StabilizerGroup stabilizer_group(const GraphSpec &g);

}  // namespace graphbell

#endif  // GRAPHBELL_STABILIZER_GROUP_H
