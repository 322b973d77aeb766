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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>

#include "graphbell/errors.h"
#include "graphbell/metrics.h"
#include "graphbell/stabilizer_group.h"
#include "graphbell/state_vector.h"
#include "search_engine.h"

namespace graphbell {

namespace {

constexpr size_t kMaxSearchQubits = 8;
constexpr double kQuantumTol = 1e-9;

struct Prepared {
    std::shared_ptr<const StabilizerGroup> group;
    std::vector<Automorphism> autos;
    std::vector<std::vector<uint32_t>> units;
    detail::EngineProblem problem;
};

Prepared prepare(const GraphSpec &g, bool symmetric) {
    if (g.n > kMaxSearchQubits) {
        throw InvalidInput("search supports n <= " + std::to_string(kMaxSearchQubits) + ", got " +
                           std::to_string(g.n));
    }
    Prepared out;
    out.group = std::make_shared<const StabilizerGroup>(stabilizer_group(g));
    out.autos = automorphisms(g);
    uint32_t full = (1u << g.n) - 1;
    if (symmetric) {
        out.units = mask_orbits(out.autos, g.n);
    } else {
        for (uint32_t m = 1; m <= full; m++) {
            out.units.push_back({m});
        }
    }
    size_t k = out.units.size();
    if (k > detail::kMaxUnits) {
        throw InvalidInput("too many search units (" + std::to_string(k) + ")");
    }

    // Satisfaction vectors of the full group; term j is mask j + 1.
    std::vector<uint32_t> all(full);
    for (uint32_t m = 1; m <= full; m++) {
        all[m - 1] = m;
    }
    AffineCode code = affine_code_reduction(BellOperator(out.group, all));
    std::vector<size_t> unit_of(size_t{full} + 1);
    for (size_t o = 0; o < k; o++) {
        for (uint32_t m : out.units[o]) {
            unit_of[m] = o;
        }
    }
    std::vector<uint64_t> cur = code.offset;
    std::vector<std::vector<uint8_t>> projected;
    projected.reserve(size_t{1} << code.rank());
    auto project = [&]() {
        std::vector<uint8_t> counts(k, 0);
        for (size_t w = 0; w < cur.size(); w++) {
            for (uint64_t bits = cur[w]; bits; bits &= bits - 1) {
                size_t j = w * 64 + static_cast<size_t>(std::countr_zero(bits));
                counts[unit_of[j + 1]]++;
            }
        }
        projected.push_back(std::move(counts));
    };
    project();
    for (uint64_t i = 1; i < (uint64_t{1} << code.rank()); i++) {
        const auto &row = code.basis[static_cast<size_t>(std::countr_zero(i))];
        for (size_t w = 0; w < cur.size(); w++) {
            cur[w] ^= row[w];
        }
        project();
    }
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

    auto &P = out.problem;
    P.num_units = k;
    for (const auto &u : out.units) {
        P.unit_size.push_back(static_cast<int>(u.size()));
    }
    P.num_codewords = projected.size();
    P.counts.reserve(k * projected.size());
    for (const auto &row : projected) {
        P.counts.insert(P.counts.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<uint32_t> image_of(const std::vector<uint32_t> &masks, const Automorphism &a) {
    std::vector<uint32_t> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) {
        out.push_back(a.apply_to_mask(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SearchResult assemble(const GraphSpec &g, const SearchConfig &cfg, const Prepared &prep,
                      const detail::EngineSolution &sol, double seconds) {
    SearchResult res;
    res.graph = g;
    res.mode = cfg.mode;
    res.best_D = sol.best;
    res.complete = sol.complete;
    res.stats.nodes = sol.nodes;
    res.stats.lp_calls = sol.lp_calls;
    res.stats.cuts = sol.cuts;
    res.stats.units = prep.problem.num_units;
    res.stats.codewords = prep.problem.num_codewords;
    res.stats.wall_seconds = seconds;

    std::vector<std::vector<uint32_t>> sets;
    for (const auto &u : sol.optima) {
        std::vector<uint32_t> masks;
        for (size_t o = 0; o < prep.units.size(); o++) {
            if (detail::unit_in(u, o)) {
                masks.insert(masks.end(), prep.units[o].begin(), prep.units[o].end());
            }
        }
        std::sort(masks.begin(), masks.end());
        res.count_by_q[static_cast<int>(masks.size())]++;
        sets.push_back(std::move(masks));
    }
    if (sets.empty()) {
        return res;
    }
    res.min_q = res.count_by_q.begin()->first;
    std::erase_if(sets, [&](const auto &s) { return static_cast<int>(s.size()) != res.min_q; });
    std::sort(sets.begin(), sets.end());
    res.raw_count = sets.size();

    std::vector<std::vector<uint32_t>> canon(sets.size());
    std::vector<size_t> orbit_sizes(sets.size());
    for (size_t i = 0; i < sets.size(); i++) {
        std::set<std::vector<uint32_t>> images;
        for (const auto &a : prep.autos) {
            images.insert(image_of(sets[i], a));
        }
        canon[i] = *images.begin();
        orbit_sizes[i] = images.size();
    }
    std::vector<std::vector<uint32_t>> classes = canon;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    res.class_count = classes.size();

    for (size_t i = 0; i < sets.size(); i++) {
        if (!cfg.report_all_optima && i > 0) {
            break;
        }
        InequalityRecord r = make_record(BellOperator(prep.group, sets[i]));
        if (r.D != res.best_D) {
            throw ConsistencyError("search reported D=" + res.best_D.str() + " but the bound recomputes to " +
                                   r.D.str());
        }
        r.canonical_masks = canon[i];
        r.orbit_size = orbit_sizes[i];
        r.orbit_class = static_cast<size_t>(
            std::lower_bound(classes.begin(), classes.end(), canon[i]) - classes.begin());
        res.optima.push_back(std::move(r));
    }
    return res;
}

SearchResult run_prepared(const GraphSpec &g, const SearchConfig &cfg, const Prepared &prep) {
    auto start = std::chrono::steady_clock::now();
    detail::EngineOptions opt;
    opt.workers = cfg.worker_count;
    opt.max_q = cfg.max_q;
    opt.node_budget = cfg.node_budget;
    detail::EngineSolution sol = detail::run_engine(prep.problem, opt);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (sol.optima.empty() && sol.complete) {
        throw InvalidInput("no candidate operator fits the term limit");
    }
    SearchResult res = assemble(g, cfg, prep, sol, seconds);
    if (!res.complete) {
        throw SearchBudgetExceeded(std::move(res));
    }
    return res;
}

}  // namespace

std::string mode_name(SearchMode mode) {
    return mode == SearchMode::kExhaustive ? "exhaustive" : "symmetric";
}

SearchMode parse_mode(std::string_view text) {
    if (text == "exhaustive") {
        return SearchMode::kExhaustive;
    }
    if (text == "symmetric") {
        return SearchMode::kSymmetric;
    }
    throw InvalidInput("unknown search mode '" + std::string(text) + "'");
}

InequalityRecord make_record(const BellOperator &op) {
    ClassicalBoundResult cb = classical_bound(op);
    InequalityRecord r{op};
    r.q = cb.q;
    r.p = cb.p;
    r.bound = cb.bound;
    r.D = violation_ratio(cb.q, cb.bound);
    r.settings = settings_signature(op);
    r.witness = cb.witness;
    r.canonical_masks = op.term_masks();
    return r;
}

SearchBudgetExceeded::SearchBudgetExceeded(SearchResult partial)
    : std::runtime_error("search node budget exceeded"),
      partial_(std::make_shared<const SearchResult>(std::move(partial))) {
}

SearchResult search_symmetric(const GraphSpec &g, const SearchConfig &cfg) {
    SearchConfig c = cfg;
    c.mode = SearchMode::kSymmetric;
    return run_prepared(g, c, prepare(g, true));
}

SearchResult search_exhaustive(const GraphSpec &g, const SearchConfig &cfg) {
    if (g.n >= 6 && !cfg.max_q && cfg.node_budget == 0) {
        throw InvalidInput("exhaustive search on " + std::to_string(g.n) +
                           " qubits needs a term limit or a node budget");
    }
    SearchConfig c = cfg;
    c.mode = SearchMode::kExhaustive;
    return run_prepared(g, c, prepare(g, false));
}

SearchResult run_search(const GraphSpec &g, const SearchConfig &cfg) {
    return cfg.mode == SearchMode::kExhaustive ? search_exhaustive(g, cfg) : search_symmetric(g, cfg);
}

InequalityRecord canonicalize(const InequalityRecord &record, const std::vector<Automorphism> &autos) {
    const auto &masks = record.op.term_masks();
    std::set<std::vector<uint32_t>> images;
    images.insert(masks);
    for (const auto &a : autos) {
        if (a.perm.size() != record.op.num_qubits()) {
            throw InvalidInput("automorphism does not match the operator's qubit count");
        }
        images.insert(image_of(masks, a));
    }
    InequalityRecord out = make_record(BellOperator(record.op.group_ptr(), *images.begin()));
    out.canonical_masks = *images.begin();
    out.orbit_size = images.size();
    out.orbit_class = record.orbit_class;
    return out;
}

BellOperator translate(const BellOperator &op, uint32_t mask) {
    if (mask == 0) {
        throw InvalidInput("translation needs a non-identity element");
    }
    if (mask >= op.group().size()) {
        throw InvalidInput("translation mask is outside the group");
    }
    std::vector<uint32_t> out;
    out.reserve(op.q());
    for (uint32_t m : op.term_masks()) {
        if ((m ^ mask) == 0) {
            throw InvalidInput("translation would produce an identity term");
        }
        out.push_back(m ^ mask);
    }
    return BellOperator(op.group_ptr(), std::move(out));
}

double verify_quantum_value(const InequalityRecord &record, const GraphSpec &g) {
    if (g.n != record.op.num_qubits()) {
        throw InvalidInput("graph and operator differ in qubit count");
    }
    StateVector psi = build_state_vector(g);
    double total = 0;
    for (size_t k = 0; k < record.op.q(); k++) {
        total += expectation(psi, record.op.term(k));
    }
    if (std::abs(total - record.q) > kQuantumTol) {
        throw ConsistencyError("quantum value " + std::to_string(total) + " differs from q=" +
                               std::to_string(record.q));
    }
    return total;
}

}  // namespace graphbell
