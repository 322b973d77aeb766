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


#ifndef GRAPHBELL_GRAPH_H
#define GRAPHBELL_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphbell {

/// Simple undirected graph on vertices 1..n.
struct GraphSpec {
    static constexpr size_t kMaxVertices = 16;

    size_t n = 0;
    /// 1-based vertex pairs, normalized to (small, large) and sorted.
    std::vector<std::pair<int, int>> edges;
    std::string name;

    /// Bit j-1 set iff vertex j is adjacent to vertex v (v is 1-based).
    uint32_t neighbor_mask(int v) const;
    bool is_connected() const;
    std::string edge_list_str() const;

    bool operator==(const GraphSpec &other) const = default;
};

/// Validates and normalizes. Throws InvalidInput on self-loops, duplicate
/// edges, out-of-range vertices, or n outside 1..16.
GraphSpec make_graph(size_t n, std::vector<std::pair<int, int>> edges, std::string name = "");

/// Parses the text graph format:
///
///     # comment
///     n 4
///     e 1 2
///     e 2 3
GraphSpec parse_graph_text(std::string_view text, std::string name = "");
GraphSpec load_graph_file(const std::string &path);

/// A vertex permutation preserving the edge set. perm[v] is the image of
/// vertex v, both 0-based.
struct Automorphism {
    std::vector<uint8_t> perm;

    uint32_t apply_to_mask(uint32_t mask) const;
    Automorphism compose(const Automorphism &after) const;
    bool operator==(const Automorphism &other) const = default;
};

/// All automorphisms, identity first, remaining ones in lexicographic
/// permutation order. Brute force; n <= 8.
std::vector<Automorphism> automorphisms(const GraphSpec &g);

/// Orbits of the non-identity index masks 1..2^n-1 under the group. Each orbit
/// is sorted; orbits are ordered by their minimum element.
std::vector<std::vector<uint32_t>> mask_orbits(const std::vector<Automorphism> &autos, size_t n);

}  // namespace graphbell

#endif  // GRAPHBELL_GRAPH_H
