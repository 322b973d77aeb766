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


#include "graphbell/verify.h"

#include <sstream>

#include "graphbell/metrics.h"
#include "graphbell/report.h"

namespace graphbell {

bool VerifyReport::ok() const {
    for (const auto &r : rows) {
        if (!r.ok()) {
            return false;
        }
    }
    return true;
}

int VerifyReport::exit_code() const {
    return ok() ? kExitOk : kExitMismatch;
}

VerifyRow verify_row(const ExpectedRow &expected, size_t workers) {
    const CatalogEntry &entry = catalog_entry(expected.graph);
    SearchConfig cfg;
    cfg.mode = expected.mode;
    cfg.worker_count = workers;
    VerifyRow row{expected, make_document(run_search(entry.graph, cfg)).result};
    const SearchResult &res = row.result;

    row.d_ok = res.best_D == expected.D;
    int found_bound = res.optima.empty() ? 0 : res.optima.front().bound;
    row.bound_ok = found_bound == expected.bound;
    if (expected.q) {
        row.q_ok = res.min_q == *expected.q;
    }
    for (const auto &r : res.optima) {
        row.settings_ok = row.settings_ok || settings_match(expected, r.settings);
    }
    if (expected.more) {
        size_t total = static_cast<size_t>(expected.listed + *expected.more);
        if (res.raw_count == total) {
            row.tally_convention = "raw";
        } else if (res.class_count == total) {
            row.tally_convention = "classes";
        } else {
            row.tally_convention = "none";
        }
    }

    if (expected.annotated) {
        row.warnings.push_back(expected.note);
    }
    for (const auto &d : validate_entry(entry)) {
        row.warnings.push_back("g" + std::to_string(d.generator) + " derived " + d.derived + ", printed " +
                               d.printed);
    }
    if (!expected.q) {
        row.warnings.push_back("q not compared; found q=" + std::to_string(res.min_q));
    }
    if (!row.settings_ok) {
        std::string found;
        for (const auto &r : res.optima) {
            found += (found.empty() ? "" : ", ") + settings_str(r.settings);
            if (found.size() > 60) {
                found += ", ...";
                break;
            }
        }
        row.warnings.push_back("settings " + found + " match no printed variant");
    }
    return row;
}

VerifyReport run_verify(const std::optional<std::string> &only, size_t workers) {
    VerifyReport report;
    if (only) {
        report.rows.push_back(verify_row(expected_row(*only), workers));
        report.discrepancies = validate_entry(catalog_entry(*only));
        return report;
    }
    for (const auto &e : expected_rows()) {
        report.rows.push_back(verify_row(e, workers));
    }
    report.discrepancies = validate_catalog();
    return report;
}

std::string render_verify(const VerifyReport &report) {
    std::ostringstream out;
    size_t matched = 0;
    for (const auto &row : report.rows) {
        const auto &e = row.expected;
        const auto &res = row.result;
        int bound = res.optima.empty() ? 0 : res.optima.front().bound;
        out << (row.ok() ? "ok      " : "MISMATCH") << " " << e.graph << " (" << mode_name(e.mode) << ")"
            << "  D=" << res.best_D << (row.d_ok ? "" : " expected " + e.D.str()) << "  bound=" << bound
            << (row.bound_ok ? "" : " expected " + std::to_string(e.bound)) << "  q=" << res.min_q;
        if (row.q_ok && !*row.q_ok) {
            out << " expected " << *e.q;
        }
        out << "  optima raw=" << res.raw_count << " classes=" << res.class_count;
        if (e.more) {
            out << " (printed " << e.listed << " + " << *e.more << " more; matches " << row.tally_convention
                << ")";
        }
        out << "  settings " << (row.settings_ok ? "match" : "differ") << "\n";
        for (const auto &w : row.warnings) {
            out << "         note: " << w << "\n";
        }
        matched += row.d_ok;
    }
    out << matched << "/" << report.rows.size() << " D values matched; " << (report.ok() ? "PASS" : "FAIL")
        << "\n";
    return out.str();
}

}  // namespace graphbell
