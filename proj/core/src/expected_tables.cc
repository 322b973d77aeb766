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


#include "graphbell/expected_tables.h"

#include <algorithm>

#include "graphbell/catalog.h"
#include "graphbell/errors.h"
#include "graphbell/metrics.h"

namespace graphbell {

namespace {

ExpectedRow row(std::string graph, Rational d, int bound, std::optional<int> q, std::vector<std::string> settings) {
    ExpectedRow r;
    r.graph = std::move(graph);
    r.mode = catalog_entry(r.graph).graph.n <= 5 ? SearchMode::kExhaustive : SearchMode::kSymmetric;
    r.D = d;
    r.bound = bound;
    r.q = q;
    r.settings = std::move(settings);
    return r;
}

std::vector<ExpectedRow> build_rows() {
    std::vector<ExpectedRow> rows;
    rows.push_back(row("ghz3", 2, 2, 4, {"2-2-2"}));

    rows.push_back(row("ghz4", 2, 2, 4, {"1-2-2-2", "2-2-2-1"}));
    rows.back().settings_as_multiset = true;

    rows.push_back(row("lc4", 2, 2, 4, {"2-2-2-1", "2-2-1-2", "1-2-2-2", "2-1-2-2"}));

    rows.push_back(row("ghz5", 4, 4, 16, {"2-2-2-2-2"}));

    rows.push_back(row("y5", Rational(15, 7), 7, 15, {"3-3-3-3-2", "3-3-3-3-3"}));
    rows.back().listed = 4;
    rows.back().more = 32;
    rows.back().annotated = true;
    rows.back().note = "printed g2 and g3 disagree on the 2-3 edge";

    rows.push_back(row("lc5", Rational(5, 2), 8, 20, {"3-3-3-3-3"}));

    rows.push_back(row("rc5", Rational(7, 3), 9, 21, {"3-3-3-3-3"}));
    rows.back().listed = 6;
    rows.back().more = 105;

    rows.push_back(row("ghz6", 4, 4, 16, {"1-2-2-2-2-2"}));

    rows.push_back(row("no10", 4, 4, 16, {"2-2-2-1-2-2", "2-2-2-2-1-2"}));

    rows.push_back(row("h6", 4, 4, 16, {"1-2-3-3-3-2", "2-1-3-3-3-2", "3-3-1-2-2-3", "3-3-2-1-2-3"}));
    rows.back().annotated = true;
    rows.back().note = "printed g5 and g6 omit the 5-6 edge";

    rows.push_back(row("y6", 4, 4, 16, {"2-2-1-2-2-2"}));

    rows.push_back(row("e6", 3, 8, 24, {"2-3-3-3-2-2"}));
    rows.back().more = 37;

    rows.push_back(row("lc6", 4, 4, 16, {"2-2-3-3-2-2"}));

    rows.push_back(row("no15", Rational(5, 2), 16, 40, {"3-3-3-3-3-3"}));
    rows.back().more = 6;

    rows.push_back(row("no16", 3, 12, std::nullopt, {"3-3-3-3-3-3"}));
    rows.back().more = 3;
    rows.back().annotated = true;
    rows.back().note = "printed operator expands to 30 terms, inconsistent with bound 12 and D=3";

    rows.push_back(row("no17", 3, 8, 24, {"3-3-3-3-3-3"}));
    rows.back().annotated = true;
    rows.back().note = "printed g1 omits Z5 although g5 has Z1";

    rows.push_back(row("rc6", Rational(55, 19), 19, 55, {"3-3-3-3-3-3"}));

    rows.push_back(row("no19", Rational(7, 3), 9, 21, {"3-3-3-3-3-3"}));
    return rows;
}

}  // namespace

const std::vector<ExpectedRow> &expected_rows() {
    static const std::vector<ExpectedRow> rows = build_rows();
    return rows;
}

const ExpectedRow &expected_row(std::string_view graph) {
    const auto &entry = catalog_entry(graph);
    for (const auto &r : expected_rows()) {
        if (r.graph == entry.display_name()) {
            return r;
        }
    }
    throw InvalidInput("no expected row for '" + std::string(graph) + "'");
}

bool settings_match(const ExpectedRow &row, const std::vector<int> &settings) {
    auto key = [&](std::string s) {
        if (row.settings_as_multiset) {
            std::sort(s.begin(), s.end());
        }
        return s;
    };
    std::string found = key(settings_str(settings));
    return std::any_of(row.settings.begin(), row.settings.end(),
                       [&](const std::string &s) { return key(s) == found; });
}

}  // namespace graphbell
