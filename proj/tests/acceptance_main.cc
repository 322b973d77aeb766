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


// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "graphbell/bell_search.h"
#include "graphbell/catalog.h"
#include "graphbell/lhv.h"
#include "graphbell/metrics.h"
#include "graphbell/report.h"
#include "graphbell/state_vector.h"
#include "graphbell/verify.h"

using namespace graphbell;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
    }
};

int failures = 0;

void report(int n, const std::string &title, const Outcome &o, double seconds) {
    std::printf("%s criterion %d: %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", n, title.c_str(), seconds,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
}

template <typename F>
void run(int n, const std::string &title, F body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = body();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(n, title, o, s);
}

const VerifyRow &row_of(const VerifyReport &v, const std::string &graph) {
    for (const auto &r : v.rows) {
        if (r.expected.graph == graph) {
            return r;
        }
    }
    throw std::runtime_error("no verify row for " + graph);
}

std::shared_ptr<const StabilizerGroup> group_of(const GraphSpec &g) {
    return std::make_shared<const StabilizerGroup>(stabilizer_group(g));
}

std::vector<uint32_t> masks_of(uint64_t subset) {
    std::vector<uint32_t> masks;
    for (uint32_t m = 1; subset; m++, subset >>= 1) {
        if (subset & 1) {
            masks.push_back(m);
        }
    }
    return masks;
}

bool compare_oracle(const BellOperator &op, Outcome &o, const std::string &where) {
    auto fast = classical_bound(op);
    auto brute = brute_force_bound(op);
    if (fast.p != brute.p || fast.bound != brute.bound) {
        o.fail(where + ": classical " + std::to_string(fast.p) + " vs brute " + std::to_string(brute.p));
        return false;
    }
    return true;
}

}  // namespace

int main() {
    size_t workers = std::max(1u, std::thread::hardware_concurrency());
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport v = run_verify(std::nullopt, workers);
    double verify_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("catalog searches finished in %.1fs with %zu workers\n", verify_seconds, workers);

    run(1, "D column for all 18 catalog states", [&] {
        const std::vector<std::pair<std::string, Rational>> table{
            {"ghz3", 2},       {"ghz4", 2},  {"lc4", 2},   {"ghz5", 4},         {"y5", {15, 7}}, {"lc5", {5, 2}},
            {"rc5", {7, 3}},   {"ghz6", 4},  {"no10", 4},  {"h6", 4},           {"y6", 4},       {"e6", 3},
            {"lc6", 4},        {"no15", {5, 2}}, {"no16", 3}, {"no17", 3},      {"rc6", {55, 19}}, {"no19", {7, 3}}};
        Outcome o;
        size_t matched = 0;
        for (const auto &[graph, d] : table) {
            const auto &r = row_of(v, graph).result;
            if (r.best_D == d) {
                matched++;
            } else {
                o.fail(graph + " D=" + r.best_D.str() + " expected " + d.str());
            }
        }
        o.detail = std::to_string(matched) + "/18 matched" + (o.detail.empty() ? "" : "; " + o.detail);
        return o;
    });

    run(2, "(q, bound) for consistently printed inequalities", [&] {
        const std::vector<std::tuple<std::string, int, int>> table{
            {"ghz3", 4, 2},   {"ghz4", 4, 2},   {"lc4", 4, 2},    {"ghz5", 16, 4},  {"y5", 15, 7},   {"lc5", 20, 8},
            {"rc5", 21, 9},   {"ghz6", 16, 4},  {"no10", 16, 4},  {"h6", 16, 4},    {"y6", 16, 4},   {"e6", 24, 8},
            {"lc6", 16, 4},   {"no15", 40, 16}, {"no17", 24, 8},  {"rc6", 55, 19},  {"no19", 21, 9}};
        Outcome o;
        for (const auto &[graph, q, bound] : table) {
            const auto &r = row_of(v, graph).result;
            int found = r.optima.empty() ? 0 : r.optima.front().bound;
            if (r.min_q != q || found != bound) {
                o.fail(graph + " (" + std::to_string(r.min_q) + "," + std::to_string(found) + ") expected (" +
                       std::to_string(q) + "," + std::to_string(bound) + ")");
            }
        }
        const auto &no16 = row_of(v, "no16").result;
        int no16_bound = no16.optima.empty() ? 0 : no16.optima.front().bound;
        if (no16_bound != 12 || no16.best_D != Rational(3)) {
            o.fail("no16 bound " + std::to_string(no16_bound) + " D " + no16.best_D.str());
        }
        return o;
    });

    run(3, "Mermin optimum on stars n=3,5", [&] {
        Outcome o;
        for (size_t n : {3, 5}) {
            auto r = search_exhaustive(catalog_lookup("ghz" + std::to_string(n)), {SearchMode::kExhaustive, {}, workers});
            int q = 1 << (n - 1);
            int p = (1 << (n - 2)) + (1 << ((n - 3) / 2));
            const auto &rec = r.optima.front();
            if (rec.q != q || rec.p != p) {
                o.fail("n=" + std::to_string(n) + " (" + std::to_string(rec.q) + "," + std::to_string(rec.p) + ")");
            }
        }
        return o;
    });

    run(4, "classical_bound equals brute force", [&] {
        Outcome o;
        for (const auto &g : {catalog_lookup("ghz3"), make_graph(3, {{1, 2}, {2, 3}}, "lc3")}) {
            auto group = group_of(g);
            for (uint64_t subset = 1; subset < (1u << 7); subset++) {
                if (!compare_oracle(BellOperator(group, masks_of(subset)), o, g.name)) {
                    break;
                }
            }
        }
        // Every subset for n=3 (127) and n=4 (32767), then random draws for n=4.
        std::mt19937_64 rng(4);
        for (const auto &e : catalog()) {
            if (e.graph.n != 4) {
                continue;
            }
            auto group = group_of(e.graph);
            for (uint64_t subset = 1; subset < (1u << 15); subset++) {
                if (!compare_oracle(BellOperator(group, masks_of(subset)), o, e.name)) {
                    break;
                }
            }
            for (int trial = 0; trial < 10000; trial++) {
                uint64_t subset = 1 + rng() % ((1u << 15) - 1);
                if (!compare_oracle(BellOperator(group, masks_of(subset)), o, e.name)) {
                    break;
                }
            }
        }
        return o;
    });

    run(5, "quantum values of optima and stabilizer expectations", [&] {
        Outcome o;
        size_t checked = 0;
        for (const auto &row : v.rows) {
            const auto &g = catalog_lookup(row.expected.graph);
            auto psi = build_state_vector(g);
            for (const auto &rec : row.result.optima) {
                double value = 0;
                for (size_t k = 0; k < rec.op.q(); k++) {
                    value += expectation(psi, rec.op.term(k));
                }
                if (std::abs(value - rec.q) > 1e-9) {
                    o.fail(row.expected.graph + " <beta>=" + std::to_string(value));
                }
                checked++;
            }
        }
        for (const auto &e : catalog()) {
            auto psi = build_state_vector(e.graph);
            auto group = stabilizer_group(e.graph);
            for (const auto &s : group.elements()) {
                double value = expectation(psi, s);
                if (std::abs(value - 1.0) > 1e-12) {
                    o.fail(e.name + " " + s.pauli.str() + " -> " + std::to_string(value));
                }
            }
        }
        o.detail = std::to_string(checked) + " optima" + (o.detail.empty() ? "" : "; " + o.detail);
        return o;
    });

    run(6, "every six-qubit optimum has D > 2", [&] {
        Outcome o;
        for (const auto &row : v.rows) {
            if (row.result.graph.n == 6 && !(row.result.best_D > Rational(2))) {
                o.fail(row.expected.graph + " D=" + row.result.best_D.str());
            }
        }
        return o;
    });

    run(7, "exactly no10, h6, y6, lc6 match GHZ6 at D=4", [&] {
        Outcome o;
        std::set<std::string> found;
        for (const auto &row : v.rows) {
            if (row.result.graph.n == 6 && row.expected.graph != "ghz6" && row.result.best_D == Rational(4)) {
                found.insert(row.expected.graph);
            }
        }
        std::set<std::string> expected{"no10", "h6", "y6", "lc6"};
        if (found != expected) {
            std::string got;
            for (const auto &g : found) {
                got += (got.empty() ? "" : ",") + g;
            }
            o.fail("found {" + got + "}");
        }
        if (row_of(v, "ghz6").result.best_D != Rational(4)) {
            o.fail("ghz6 D=" + row_of(v, "ghz6").result.best_D.str());
        }
        return o;
    });

    run(8, "settings signatures up to qubit permutation", [&] {
        const std::vector<std::pair<std::string, std::vector<int>>> table{
            {"ghz3", {2, 2, 2}}, {"lc5", {3, 3, 3, 3, 3}}, {"h6", {1, 2, 3, 3, 3, 2}}, {"rc6", {3, 3, 3, 3, 3, 3}}};
        Outcome o;
        for (const auto &[graph, want] : table) {
            auto sorted_want = want;
            std::sort(sorted_want.begin(), sorted_want.end());
            bool any = false;
            std::set<std::string> seen;
            for (const auto &rec : row_of(v, graph).result.optima) {
                auto s = rec.settings;
                seen.insert(settings_str(s));
                std::sort(s.begin(), s.end());
                any = any || s == sorted_want;
            }
            if (!any) {
                std::string got;
                for (const auto &s : seen) {
                    got += (got.empty() ? "" : ",") + s;
                }
                o.fail(graph + " found {" + got + "} expected " + settings_str(want));
            }
        }
        return o;
    });

    run(9, "property suite", [&] {
        Outcome o;
        std::mt19937_64 rng(9);
        int cases = 0;
        for (const auto &e : catalog()) {
            auto group = group_of(e.graph);
            for (int trial = 0; trial < 700; trial++, cases++) {
                std::vector<uint32_t> masks;
                uint32_t density = 1 + rng() % 7;
                for (uint32_t m = 1; m < group->size(); m++) {
                    if (rng() % 8 < density) {
                        masks.push_back(m);
                    }
                }
                if (masks.empty()) {
                    continue;
                }
                BellOperator op(group, masks);
                auto r = classical_bound(op);
                if ((r.bound - r.q) % 2 != 0) {
                    o.fail(e.name + " bound parity");
                }
                if (2 * r.p < r.q) {
                    o.fail(e.name + " p < q/2");
                }
                if (satisfied_count(op, r.witness) != r.p) {
                    o.fail(e.name + " witness re-evaluation");
                }
            }
        }
        for (const auto &row : v.rows) {
            auto autos = automorphisms(row.result.graph);
            for (const auto &rec : row.result.optima) {
                for (const auto &a : autos) {
                    std::vector<uint32_t> image;
                    for (auto m : rec.op.term_masks()) {
                        image.push_back(a.apply_to_mask(m));
                    }
                    auto img = classical_bound(BellOperator(rec.op.group_ptr(), image));
                    cases++;
                    if (img.q != rec.q || img.p != rec.p) {
                        o.fail(row.expected.graph + " automorphic image changes (q,p)");
                    }
                }
            }
        }
        for (const char *graph : {"rc5", "y5", "e6", "rc6", "no19"}) {
            const auto &expected = expected_row(graph);
            std::string first;
            for (size_t w : {1, 2, 8}) {
                SearchConfig cfg;
                cfg.mode = expected.mode;
                cfg.worker_count = w;
                auto text = render_machine(make_document(run_search(catalog_lookup(graph), cfg)));
                if (first.empty()) {
                    first = text;
                } else if (text != first) {
                    o.fail(std::string(graph) + " machine output differs at " + std::to_string(w) + " workers");
                }
                cases++;
            }
        }
        o.detail = std::to_string(cases) + " cases" + (o.detail.empty() ? "" : "; " + o.detail);
        if (cases < 10000) {
            o.fail("fewer than 10^4 cases");
        }
        return o;
    });

    run(10, "optimum tallies against the printed counts", [&] {
        Outcome o;
        std::ostringstream out;
        for (const auto &row : v.rows) {
            if (row.result.mode != SearchMode::kExhaustive) {
                continue;
            }
            out << row.expected.graph << " raw=" << row.result.raw_count << " classes=" << row.result.class_count;
            if (row.expected.more) {
                out << " printed=" << row.expected.listed << "+" << *row.expected.more << " convention="
                    << row.tally_convention;
            }
            out << "; ";
        }
        for (const char *graph : {"y5", "rc5"}) {
            const auto &row = row_of(v, graph);
            if (row.tally_convention.empty() || row.result.raw_count == 0 || row.result.class_count == 0) {
                o.fail(std::string(graph) + " comparison missing");
            }
        }
        o.detail = out.str() + o.detail;
        return o;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
