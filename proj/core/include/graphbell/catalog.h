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


#ifndef GRAPHBELL_CATALOG_H
#define GRAPHBELL_CATALOG_H

#include <string>
#include <string_view>
#include <vector>

#include "graphbell/graph.h"

namespace graphbell {

struct CatalogEntry {
    /// "no2" .. "no19".
    std::string name;
    /// Family name such as "ghz3" or "rc6"; empty when the class has none.
    std::string alias;
    int number = 0;
    GraphSpec graph;
    /// Generators exactly as printed in the published tables, one letter per
    /// qubit. Reference data only; the edge list is authoritative.
    std::vector<std::string> printed_generators;

    /// alias when present, otherwise name.
    const std::string &display_name() const { return alias.empty() ? name : alias; }
};

/// Entries no2..no19 in order.
const std::vector<CatalogEntry> &catalog();

/// Accepts either "noK" or the alias. Throws InvalidInput on unknown names.
const CatalogEntry &catalog_entry(std::string_view name);
GraphSpec catalog_lookup(std::string_view name);

struct GeneratorDiscrepancy {
    std::string graph;
    /// 1-based generator index.
    int generator = 0;
    std::string derived;
    std::string printed;
};

/// Compares derived generators against printed ones for every entry.
std::vector<GeneratorDiscrepancy> validate_catalog();
std::vector<GeneratorDiscrepancy> validate_entry(const CatalogEntry &entry);

}  // namespace graphbell

#endif  // GRAPHBELL_CATALOG_H
