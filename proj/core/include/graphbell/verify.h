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


#ifndef GRAPHBELL_VERIFY_H
#define GRAPHBELL_VERIFY_H

#include <optional>
#include <string>
#include <vector>

#include "graphbell/bell_search.h"
#include "graphbell/catalog.h"
#include "graphbell/expected_tables.h"

namespace graphbell {

struct VerifyRow {
    ExpectedRow expected;
    SearchResult result;
    bool d_ok = false;
    bool bound_ok = false;
    /// Unset when the row has no consistent q to compare.
    std::optional<bool> q_ok;
    bool settings_ok = false;
    /// Which tally, if any, equals listed + more: "raw", "classes" or "none".
    std::string tally_convention;
    std::vector<std::string> warnings;

    bool ok() const { return d_ok && bound_ok && q_ok.value_or(true); }
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    std::vector<GeneratorDiscrepancy> discrepancies;

    bool ok() const;
    int exit_code() const;
};

/// Searches every catalog graph (or only `only`) in its designated mode and
/// compares against the expected rows.
VerifyReport run_verify(const std::optional<std::string> &only = std::nullopt, size_t workers = 1);

VerifyRow verify_row(const ExpectedRow &expected, size_t workers = 1);

std::string render_verify(const VerifyReport &report);

}  // namespace graphbell

#endif  // GRAPHBELL_VERIFY_H
