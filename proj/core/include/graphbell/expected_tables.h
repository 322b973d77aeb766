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


#ifndef GRAPHBELL_EXPECTED_TABLES_H
#define GRAPHBELL_EXPECTED_TABLES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphbell/bell_search.h"
#include "graphbell/rational.h"

namespace graphbell {

/// Published optimum for one catalog graph.
struct ExpectedRow {
    std::string graph;
    SearchMode mode = SearchMode::kSymmetric;
    Rational D;
    int bound = 0;
    /// Absent where the printed operator does not expand to a consistent q.
    std::optional<int> q;
    /// Printed settings signatures; a match against any one counts.
    std::vector<std::string> settings;
    /// Compare settings as multisets (rows printed with free qubit labels).
    bool settings_as_multiset = false;
    /// Number of optimal operators written out explicitly.
    int listed = 1;
    /// The "and N more" count, when printed.
    std::optional<int> more;
    /// Set for rows whose printed data is internally inconsistent.
    bool annotated = false;
    std::string note;
};

const std::vector<ExpectedRow> &expected_rows();
/// Accepts the catalog name or alias. Throws InvalidInput when unknown.
const ExpectedRow &expected_row(std::string_view graph);

bool settings_match(const ExpectedRow &row, const std::vector<int> &settings);

}  // namespace graphbell

#endif  // GRAPHBELL_EXPECTED_TABLES_H
