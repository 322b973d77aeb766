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


#include "graphbell/bell_search.h"

#include <set>

#include "gtest/gtest.h"

#include "dense_oracle.h"
#include "graphbell/catalog.h"
#include "graphbell/errors.h"
#include "graphbell/metrics.h"

using namespace graphbell;

namespace {

struct Optimum {
    Rational best_D;
    int min_q = 0;
    size_t raw_count = 0;
    std::set<std::vector<uint32_t>> sets;
};

// Scans every subset of non-identity elements with the dense-matrix LHV oracle.
Optimum oracle_optimum(const GraphSpec &g, size_t max_q = 64) {
    auto group = stabilizer_group(g);
    size_t k = group.size() - 1;
    std::vector<std::pair<int, std::string>> all;
    for (uint32_t m = 1; m <= k; m++) {
        all.push_back({group[m].sign, group[m].pauli.str().substr(1)});
    }
    Optimum best{Rational(0), 0, 0, {}};
    for (uint64_t subset = 1; subset < (uint64_t{1} << k); subset++) {
        std::vector<std::pair<int, std::string>> terms;
        std::vector<uint32_t> masks;
        for (uint32_t j = 0; j < k; j++) {
            if (subset >> j & 1) {
                terms.push_back(all[j]);
                masks.push_back(j + 1);
            }
        }
        if (terms.size() > max_q) {
            continue;
        }
        int q = static_cast<int>(terms.size());
        int bound = 2 * oracle::max_satisfied(terms, g.n) - q;
        if (bound <= 0) {
            continue;
        }
        Rational d(q, bound);
        if (d > best.best_D || (d == best.best_D && q < best.min_q)) {
            best = {d, q, 0, {}};
        }
        if (d == best.best_D && q == best.min_q) {
            best.raw_count++;
            best.sets.insert(masks);
        }
    }
    return best;
}

std::set<std::vector<uint32_t>> optimum_sets(const SearchResult &r) {
    std::set<std::vector<uint32_t>> out;
    for (const auto &rec : r.optima) {
        out.insert(rec.op.term_masks());
    }
    return out;
}

}  // namespace

TEST(bell_search, mode_names) {
    ASSERT_EQ(parse_mode("exhaustive"), SearchMode::kExhaustive);
    ASSERT_EQ(parse_mode("symmetric"), SearchMode::kSymmetric);
    ASSERT_EQ(mode_name(SearchMode::kSymmetric), "symmetric");
    ASSERT_THROW(parse_mode("fast"), InvalidInput);
}

TEST(bell_search, exhaustive_matches_oracle_on_three_qubits) {
    for (const auto &g : {catalog_lookup("ghz3"), make_graph(3, {{1, 2}, {2, 3}}, "lc3")}) {
        auto expected = oracle_optimum(g);
        auto r = search_exhaustive(g);
        ASSERT_TRUE(r.complete);
        ASSERT_EQ(r.best_D, expected.best_D) << g.name;
        ASSERT_EQ(r.min_q, expected.min_q) << g.name;
        ASSERT_EQ(r.raw_count, expected.raw_count) << g.name;
        ASSERT_EQ(optimum_sets(r), expected.sets) << g.name;
    }
}

TEST(bell_search, term_limit_matches_oracle) {
    auto g = catalog_lookup("ghz3");
    for (size_t max_q = 1; max_q <= 4; max_q++) {
        auto expected = oracle_optimum(g, max_q);
        SearchConfig cfg;
        cfg.max_q = max_q;
        auto r = search_exhaustive(g, cfg);
        ASSERT_EQ(r.best_D, expected.best_D) << max_q;
        ASSERT_EQ(r.min_q, expected.min_q) << max_q;
        ASSERT_EQ(optimum_sets(r), expected.sets) << max_q;
    }
}

TEST(bell_search, exhaustive_matches_subset_scan_on_four_qubits) {
    for (const char *name : {"ghz4", "lc4"}) {
        auto spec = catalog_lookup(name);
        auto group = std::make_shared<const StabilizerGroup>(stabilizer_group(spec));
        Rational best(0);
        int min_q = 0;
        std::set<std::vector<uint32_t>> sets;
        for (uint32_t subset = 1; subset < (1u << 15); subset++) {
            std::vector<uint32_t> masks;
            for (uint32_t j = 0; j < 15; j++) {
                if (subset >> j & 1) {
                    masks.push_back(j + 1);
                }
            }
            auto cb = classical_bound(BellOperator(group, masks));
            if (cb.bound <= 0) {
                continue;
            }
            Rational d(cb.q, cb.bound);
            if (d > best || (d == best && cb.q < min_q)) {
                best = d;
                min_q = cb.q;
                sets.clear();
            }
            if (d == best && cb.q == min_q) {
                sets.insert(masks);
            }
        }
        auto r = search_exhaustive(spec);
        ASSERT_EQ(r.best_D, best) << name;
        ASSERT_EQ(r.min_q, min_q) << name;
        ASSERT_EQ(optimum_sets(r), sets) << name;
    }
}

TEST(bell_search, mermin_stars) {
    auto r3 = search_exhaustive(catalog_lookup("ghz3"));
    ASSERT_EQ(r3.optima.front().q, 4);
    ASSERT_EQ(r3.optima.front().p, 3);
    auto r5 = search_exhaustive(catalog_lookup("ghz5"));
    ASSERT_EQ(r5.best_D, Rational(4));
    ASSERT_EQ(r5.optima.front().q, 16);
    ASSERT_EQ(r5.optima.front().p, 10);
}

TEST(bell_search, records_are_consistent) {
    auto spec = catalog_lookup("lc5");
    auto r = search_exhaustive(spec);
    ASSERT_EQ(r.best_D, Rational(5, 2));
    ASSERT_EQ(r.min_q, 20);
    ASSERT_EQ(r.optima.size(), r.raw_count);
    auto autos = automorphisms(spec);
    std::set<size_t> classes;
    for (const auto &rec : r.optima) {
        ASSERT_EQ(rec.q, 20);
        ASSERT_EQ(rec.bound, 8);
        ASSERT_EQ(rec.D, Rational(5, 2));
        ASSERT_EQ(satisfied_count(rec.op, rec.witness), rec.p);
        ASSERT_EQ(rec.settings, settings_signature(rec.op));
        ASSERT_NEAR(verify_quantum_value(rec, spec), 20.0, 1e-9);
        ASSERT_EQ(canonicalize(rec, autos).canonical_masks, rec.canonical_masks);
        classes.insert(rec.orbit_class);
    }
    ASSERT_EQ(classes.size(), r.class_count);
    ASSERT_EQ(r.count_by_q.at(20), r.raw_count);
}

TEST(bell_search, symmetric_optimum_is_a_union_of_orbits) {
    auto spec = catalog_lookup("rc6");
    auto r = search_symmetric(spec);
    ASSERT_EQ(r.best_D, Rational(55, 19));
    ASSERT_EQ(r.min_q, 55);
    auto autos = automorphisms(spec);
    for (const auto &rec : r.optima) {
        std::set<uint32_t> terms(rec.op.term_masks().begin(), rec.op.term_masks().end());
        for (const auto &a : autos) {
            for (auto m : terms) {
                ASSERT_TRUE(terms.count(a.apply_to_mask(m)));
            }
        }
        ASSERT_EQ(rec.orbit_size, 1u);
    }
}

TEST(bell_search, symmetric_never_beats_exhaustive) {
    for (const char *name : {"ghz4", "lc4", "rc5", "y5"}) {
        auto spec = catalog_lookup(name);
        ASSERT_LE(search_symmetric(spec).best_D, search_exhaustive(spec).best_D) << name;
    }
}

TEST(bell_search, worker_counts_agree) {
    auto spec = catalog_lookup("e6");
    SearchConfig one;
    SearchConfig four;
    four.worker_count = 4;
    auto a = search_symmetric(spec, one);
    auto b = search_symmetric(spec, four);
    ASSERT_EQ(a.best_D, b.best_D);
    ASSERT_EQ(a.min_q, b.min_q);
    ASSERT_EQ(optimum_sets(a), optimum_sets(b));
    ASSERT_EQ(a.count_by_q, b.count_by_q);
}

TEST(bell_search, full_group_violates) {
    for (const auto &e : catalog()) {
        auto group = std::make_shared<const StabilizerGroup>(stabilizer_group(e.graph));
        std::vector<uint32_t> masks;
        for (uint32_t m = 1; m < group->size(); m++) {
            masks.push_back(m);
        }
        auto rec = make_record(BellOperator(group, masks));
        ASSERT_GT(rec.D, Rational(1)) << e.name;
    }
}

TEST(bell_search, exhaustive_refused_on_six_qubits) {
    ASSERT_THROW(search_exhaustive(catalog_lookup("lc6")), InvalidInput);
    SearchConfig cfg;
    cfg.max_q = 2;
    ASSERT_NO_THROW(search_exhaustive(catalog_lookup("lc6"), cfg));
}

TEST(bell_search, node_budget) {
    SearchConfig cfg;
    cfg.node_budget = 10;
    try {
        search_exhaustive(catalog_lookup("rc5"), cfg);
        FAIL() << "expected the budget to run out";
    } catch (const SearchBudgetExceeded &e) {
        ASSERT_FALSE(e.partial().complete);
    }
}

TEST(bell_search, translate) {
    auto spec = catalog_lookup("ghz3");
    auto group = std::make_shared<const StabilizerGroup>(stabilizer_group(spec));
    BellOperator op(group, {1, 3, 5, 7});
    ASSERT_EQ(translate(op, 6).term_masks(), op.term_masks());
    ASSERT_EQ(translate(BellOperator(group, {3, 5}), 2).term_masks(), (std::vector<uint32_t>{1, 7}));
    ASSERT_THROW(translate(op, 1), InvalidInput);
    ASSERT_THROW(translate(op, 0), InvalidInput);
    ASSERT_THROW(translate(op, 8), InvalidInput);
    BellOperator op2(group, {2, 3});
    auto t2 = translate(op2, 1);
    ASSERT_EQ(t2.term_masks(), (std::vector<uint32_t>{2, 3}));
    ASSERT_NEAR(verify_quantum_value(make_record(t2), spec), 2.0, 1e-9);
}

TEST(bell_search, canonicalize) {
    auto spec = catalog_lookup("lc4");
    auto group = std::make_shared<const StabilizerGroup>(stabilizer_group(spec));
    auto autos = automorphisms(spec);
    auto c = canonicalize(make_record(BellOperator(group, {4, 8})), autos);
    ASSERT_EQ(c.canonical_masks, (std::vector<uint32_t>{1, 2}));
    ASSERT_EQ(c.op.term_masks(), (std::vector<uint32_t>{1, 2}));
    ASSERT_EQ(c.orbit_size, 2u);
    auto s = canonicalize(make_record(BellOperator(group, {6, 9})), autos);
    ASSERT_EQ(s.orbit_size, 1u);
}

TEST(bell_search, quantum_value_mismatch_detected) {
    auto spec = catalog_lookup("ghz3");
    auto group = std::make_shared<const StabilizerGroup>(stabilizer_group(spec));
    auto rec = make_record(BellOperator(group, {1, 3}));
    ASSERT_THROW(verify_quantum_value(rec, catalog_lookup("lc4")), InvalidInput);
    ASSERT_NO_THROW(verify_quantum_value(rec, spec));
    // Same qubit count, different state: the terms are no longer stabilizers.
    ASSERT_THROW(verify_quantum_value(rec, make_graph(3, {{1, 2}, {2, 3}})), ConsistencyError);
}
