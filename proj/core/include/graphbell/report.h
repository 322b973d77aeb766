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


#ifndef GRAPHBELL_REPORT_H
#define GRAPHBELL_REPORT_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphbell/bell_search.h"
#include "graphbell/rational.h"

namespace graphbell {

/// CLI exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitInvalidInput = 2,
    kExitBudgetExceeded = 3,
};

/// A search result that has been re-checked for presentation: every record's
/// quantum value and classical bound were recomputed when it was built.
struct ResultDocument {
    SearchResult result;
};

/// Throws ConsistencyError if any record fails the re-check.
ResultDocument make_document(SearchResult result);

/// "g1 + g1·g2 + g1·g3 + g1·g2·g3".
std::string render_generator_products(const BellOperator &op);

/// "+XZZ +YYZ +YZY -XYY".
std::string render_pauli_terms(const BellOperator &op);

std::string render_text(const ResultDocument &doc, bool include_stats = false);

/// JSON document, one object per record. Schedule-dependent statistics are
/// only written when include_stats is set.
std::string render_machine(const ResultDocument &doc, bool include_stats = false);

struct ParsedRecord {
    std::vector<uint32_t> term_masks;
    int q = 0;
    int p = 0;
    int bound = 0;
    Rational D;
    std::vector<int> settings;
    std::string witness;
    std::vector<uint32_t> canonical_masks;
    size_t orbit_size = 0;
    size_t orbit_class = 0;

    bool operator==(const ParsedRecord &other) const = default;
};

struct ParsedDocument {
    std::string graph;
    size_t n = 0;
    std::vector<std::pair<int, int>> edges;
    std::string mode;
    bool complete = true;
    Rational best_D;
    int min_q = 0;
    size_t raw_count = 0;
    size_t class_count = 0;
    std::map<int, size_t> count_by_q;
    std::vector<ParsedRecord> records;

    bool operator==(const ParsedDocument &other) const = default;
};

/// Throws InvalidInput on malformed documents.
ParsedDocument parse_machine(std::string_view text);

/// The parsed view of a document, for round-trip comparisons.
ParsedDocument to_parsed(const ResultDocument &doc);

}  // namespace graphbell

#endif  // GRAPHBELL_REPORT_H
