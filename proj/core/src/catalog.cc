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


#include "graphbell/catalog.h"

#include "graphbell/errors.h"
#include "graphbell/stabilizer_group.h"

namespace graphbell {

namespace {

using Edges = std::vector<std::pair<int, int>>;

Edges star(int n) {
    Edges e;
    for (int v = 2; v <= n; v++) {
        e.emplace_back(1, v);
    }
    return e;
}

Edges path(int n) {
    Edges e;
    for (int v = 1; v < n; v++) {
        e.emplace_back(v, v + 1);
    }
    return e;
}

Edges ring(int n) {
    Edges e = path(n);
    e.emplace_back(1, n);
    return e;
}

CatalogEntry entry(int number, std::string alias, size_t n, Edges edges, std::vector<std::string> printed) {
    CatalogEntry out;
    out.number = number;
    out.name = "no" + std::to_string(number);
    out.alias = std::move(alias);
    out.graph = make_graph(n, std::move(edges), out.display_name());
    out.printed_generators = std::move(printed);
    return out;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back(entry(2, "ghz3", 3, star(3), {"XZZ", "ZXI", "ZIX"}));
    c.push_back(entry(3, "ghz4", 4, star(4), {"XZZZ", "ZXII", "ZIXI", "ZIIX"}));
    c.push_back(entry(4, "lc4", 4, path(4), {"XZII", "ZXZI", "IZXZ", "IIZX"}));
    c.push_back(entry(5, "ghz5", 5, star(5), {"XZZZZ", "ZXIII", "ZIXII", "ZIIXI", "ZIIIX"}));
    // The printed g2 has no Z3 although g3 has Z2.
    c.push_back(entry(6, "y5", 5, {{1, 2}, {2, 3}, {2, 5}, {3, 4}}, {"XZIII", "ZXIIZ", "IZXZI", "IIZXI", "IZIIX"}));
    c.push_back(entry(7, "lc5", 5, path(5), {"XZIII", "ZXZII", "IZXZI", "IIZXZ", "IIIZX"}));
    c.push_back(entry(8, "rc5", 5, ring(5), {"XZIIZ", "ZXZII", "IZXZI", "IIZXZ", "ZIIZX"}));
    c.push_back(entry(9, "ghz6", 6, star(6), {"XZZZZZ", "ZXIIII", "ZIXIII", "ZIIXII", "ZIIIXI", "ZIIIIX"}));
    c.push_back(entry(10, "", 6, {{1, 6}, {2, 6}, {3, 6}, {4, 5}, {5, 6}},
                      {"XIIIIZ", "IXIIIZ", "IIXIIZ", "IIIXZI", "IIIZXZ", "ZZZIZX"}));
    // The printed g5 and g6 omit the 5-6 crossbar.
    c.push_back(entry(11, "h6", 6, {{1, 6}, {2, 6}, {3, 5}, {4, 5}, {5, 6}},
                      {"XIIIIZ", "IXIIIZ", "IIXIZI", "IIIXZI", "IIZZXI", "ZZIIIX"}));
    c.push_back(entry(12, "y6", 6, {{1, 2}, {2, 3}, {2, 6}, {3, 4}, {4, 5}},
                      {"XZIIII", "ZXZIIZ", "IZXZII", "IIZXZI", "IIIZXI", "IZIIIX"}));
    c.push_back(entry(13, "e6", 6, {{1, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5}},
                      {"XZIIII", "ZXZIII", "IZXZIZ", "IIZXZI", "IIIZXI", "IIZIIX"}));
    c.push_back(entry(14, "lc6", 6, path(6), {"XZIIII", "ZXZIII", "IZXZII", "IIZXZI", "IIIZXZ", "IIIIZX"}));
    c.push_back(entry(15, "", 6, {{1, 6}, {2, 4}, {3, 4}, {3, 6}, {4, 5}, {5, 6}},
                      {"XIIIIZ", "IXIZII", "IIXZIZ", "IZZXZI", "IIIZXZ", "ZIZIZX"}));
    c.push_back(entry(16, "", 6, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 6}, {4, 5}},
                      {"XZIIII", "ZXZZII", "IZXZIZ", "IZZXZI", "IIIZXI", "IIZIIX"}));
    // The printed g1 has no Z5 although g5 has Z1.
    c.push_back(entry(17, "", 6, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {4, 5}},
                      {"XZIIIZ", "ZXZIII", "IZXZII", "IIZXZI", "ZIIZXI", "ZIIIIX"}));
    c.push_back(entry(18, "rc6", 6, ring(6), {"XZIIIZ", "ZXZIII", "IZXZII", "IIZXZI", "IIIZXZ", "ZIIIZX"}));
    c.push_back(entry(19, "", 6, {{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}},
                      {"XZZIIZ", "ZXZIZI", "ZZXZII", "IIZXZZ", "IZIZXZ", "ZIIZZX"}));
    return c;
}

}  // namespace

const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry &catalog_entry(std::string_view name) {
    for (const auto &e : catalog()) {
        if (e.name == name || (!e.alias.empty() && e.alias == name)) {
            return e;
        }
    }
    throw InvalidInput("unknown catalog graph '" + std::string(name) + "'");
}

GraphSpec catalog_lookup(std::string_view name) {
    return catalog_entry(name).graph;
}

std::vector<GeneratorDiscrepancy> validate_entry(const CatalogEntry &entry) {
    std::vector<GeneratorDiscrepancy> out;
    auto gens = generators_from_graph(entry.graph);
    for (size_t i = 0; i < gens.size(); i++) {
        std::string derived = gens[i].pauli.str().substr(1);
        const std::string &printed = i < entry.printed_generators.size() ? entry.printed_generators[i] : "";
        if (derived != printed) {
            out.push_back({entry.display_name(), static_cast<int>(i + 1), derived, printed});
        }
    }
    return out;
}

std::vector<GeneratorDiscrepancy> validate_catalog() {
    std::vector<GeneratorDiscrepancy> out;
    for (const auto &e : catalog()) {
        auto d = validate_entry(e);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

}  // namespace graphbell
