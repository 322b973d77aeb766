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


#ifndef GRAPHBELL_SEARCH_ENGINE_H
#define GRAPHBELL_SEARCH_ENGINE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphbell/rational.h"

namespace graphbell::detail {

/// Units are the atoms of the search (single terms, or whole orbits). A
/// candidate operator is a set of units.
constexpr size_t kMaxUnits = 256;
using UnitSet = std::array<uint64_t, kMaxUnits / 64>;

inline bool unit_in(const UnitSet &s, size_t o) {
    return s[o / 64] >> (o % 64) & 1;
}

struct EngineProblem {
    size_t num_units = 0;
    std::vector<int> unit_size;
    size_t num_codewords = 0;
    /// counts[c * num_units + o]: terms of unit o satisfied by codeword c.
    std::vector<int> counts;
};

struct EngineOptions {
    size_t workers = 1;
    std::optional<size_t> max_q;
    uint64_t node_budget = 0;
};

struct EngineSolution {
    /// Every unit set reaching the best ratio, sorted.
    std::vector<UnitSet> optima;
    Rational best{1};
    bool complete = true;
    uint64_t nodes = 0;
    uint64_t lp_calls = 0;
    uint64_t cuts = 0;
};

/// Exact maximization of q / (2p - q) over non-empty unit sets, where q is the
/// total unit size and p the best codeword count.
EngineSolution run_engine(const EngineProblem &problem, const EngineOptions &options);

}  // namespace graphbell::detail

#endif  // GRAPHBELL_SEARCH_ENGINE_H
