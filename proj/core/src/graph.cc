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


#include "graphbell/graph.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "graphbell/errors.h"

namespace graphbell {

uint32_t GraphSpec::neighbor_mask(int v) const {
    uint32_t mask = 0;
    for (auto [a, b] : edges) {
        if (a == v) {
            mask |= 1u << (b - 1);
        } else if (b == v) {
            mask |= 1u << (a - 1);
        }
    }
    return mask;
}

bool GraphSpec::is_connected() const {
    if (n <= 1) {
        return true;
    }
    uint32_t seen = 1;
    uint32_t frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (size_t v = 0; v < n; v++) {
            if (frontier >> v & 1) {
                next |= neighbor_mask(static_cast<int>(v + 1));
            }
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

std::string GraphSpec::edge_list_str() const {
    std::string out;
    for (auto [a, b] : edges) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(a) + "-" + std::to_string(b);
    }
    return out;
}

GraphSpec make_graph(size_t n, std::vector<std::pair<int, int>> edges, std::string name) {
    if (n == 0 || n > GraphSpec::kMaxVertices) {
        throw InvalidInput("graph must have 1.." + std::to_string(GraphSpec::kMaxVertices) + " vertices, got " +
                           std::to_string(n));
    }
    for (auto &[a, b] : edges) {
        if (a < 1 || b < 1 || a > static_cast<int>(n) || b > static_cast<int>(n)) {
            throw InvalidInput("edge " + std::to_string(a) + "-" + std::to_string(b) + " is outside 1.." +
                               std::to_string(n));
        }
        if (a == b) {
            throw InvalidInput("self-loop at vertex " + std::to_string(a));
        }
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        throw InvalidInput("duplicate edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));
    }
    GraphSpec g;
    g.n = n;
    g.edges = std::move(edges);
    g.name = std::move(name);
    return g;
}

GraphSpec parse_graph_text(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) {
            continue;
        }
        auto fail = [&](const std::string &why) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + why);
        };
        if (tag == "n") {
            if (n >= 0) {
                fail("repeated 'n' line");
            }
            if (!(fields >> n) || n <= 0) {
                fail("expected 'n <count>'");
            }
        } else if (tag == "e") {
            int a, b;
            if (!(fields >> a >> b)) {
                fail("expected 'e <i> <j>'");
            }
            edges.emplace_back(a, b);
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (fields >> extra) {
            fail("trailing text '" + extra + "'");
        }
    }
    if (n < 0) {
        throw InvalidInput("missing 'n <count>' line");
    }
    return make_graph(static_cast<size_t>(n), std::move(edges), std::move(name));
}

GraphSpec load_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open graph file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string stem = path;
    auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) {
        stem = stem.substr(slash + 1);
    }
    return parse_graph_text(buf.str(), stem);
}

uint32_t Automorphism::apply_to_mask(uint32_t mask) const {
    uint32_t out = 0;
    for (size_t v = 0; v < perm.size(); v++) {
        if (mask >> v & 1) {
            out |= 1u << perm[v];
        }
    }
    return out;
}

Automorphism Automorphism::compose(const Automorphism &after) const {
    Automorphism out;
    out.perm.resize(perm.size());
    for (size_t v = 0; v < perm.size(); v++) {
        out.perm[v] = after.perm[perm[v]];
    }
    return out;
}

std::vector<Automorphism> automorphisms(const GraphSpec &g) {
    if (g.n > 8) {
        throw InvalidInput("automorphism enumeration supports n <= 8, got " + std::to_string(g.n));
    }
    std::vector<uint32_t> adj(g.n);
    for (size_t v = 0; v < g.n; v++) {
        adj[v] = g.neighbor_mask(static_cast<int>(v + 1));
    }
    std::vector<uint8_t> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Automorphism> out;
    do {
        Automorphism a{perm};
        bool ok = true;
        for (size_t v = 0; v < g.n && ok; v++) {
            ok = a.apply_to_mask(adj[v]) == adj[perm[v]];
        }
        if (ok) {
            out.push_back(std::move(a));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::vector<uint32_t>> mask_orbits(const std::vector<Automorphism> &autos, size_t n) {
    uint32_t full = (1u << n) - 1;
    std::vector<char> seen(size_t{full} + 1, 0);
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t m = 1; m <= full; m++) {
        if (seen[m]) {
            continue;
        }
        std::set<uint32_t> orbit;
        for (const auto &a : autos) {
            orbit.insert(a.apply_to_mask(m));
        }
        orbit.insert(m);
        for (uint32_t x : orbit) {
            seen[x] = 1;
        }
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

}  // namespace graphbell
