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


#include "graphbell/report.h"

#include <cstdio>
#include <sstream>

#include "graphbell/errors.h"
#include "graphbell/metrics.h"
#include "json.hpp"

namespace graphbell {

namespace {

using nlohmann::json;

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

ResultDocument make_document(SearchResult result) {
    for (const auto &r : result.optima) {
        verify_quantum_value(r, result.graph);
        ClassicalBoundResult cb = classical_bound(r.op);
        if (cb.p != r.p || cb.bound != r.bound || satisfied_count(r.op, r.witness) != r.p) {
            throw ConsistencyError("classical bound of a reported record does not recompute");
        }
    }
    return ResultDocument{std::move(result)};
}

std::string render_generator_products(const BellOperator &op) {
    std::string out;
    for (uint32_t m : op.term_masks()) {
        if (!out.empty()) {
            out += " + ";
        }
        bool first = true;
        for (size_t i = 0; i < op.num_qubits(); i++) {
            if (m >> i & 1) {
                if (!first) {
                    out += "·";
                }
                out += "g" + std::to_string(i + 1);
                first = false;
            }
        }
    }
    return out;
}

std::string render_pauli_terms(const BellOperator &op) {
    std::string out;
    for (size_t k = 0; k < op.q(); k++) {
        const auto &s = op.term(k);
        std::string p = s.pauli.str();
        if ((p[0] == '-') != (s.sign < 0)) {
            throw ConsistencyError("rendered sign of " + p + " disagrees with the element sign");
        }
        if (k) {
            out += ' ';
        }
        out += p;
    }
    return out;
}

std::string render_text(const ResultDocument &doc, bool include_stats) {
    const SearchResult &res = doc.result;
    std::ostringstream out;
    out << "graph " << (res.graph.name.empty() ? "(unnamed)" : res.graph.name) << "  n=" << res.graph.n
        << "  edges " << res.graph.edge_list_str() << "\n";
    out << "mode " << mode_name(res.mode) << (res.complete ? "" : "  (INCOMPLETE)") << "\n";
    out << "best D = " << res.best_D << " at q = " << res.min_q << "\n";
    out << "optimal subsets at q=" << res.min_q << ": " << res.raw_count << " raw, " << res.class_count
        << " up to automorphism\n";
    out << "subsets reaching D by q:";
    for (auto [q, c] : res.count_by_q) {
        out << "  q=" << q << ":" << c;
    }
    out << "\n";
    if (include_stats) {
        out << "stats: units=" << res.stats.units << " codewords=" << res.stats.codewords
            << " nodes=" << res.stats.nodes << " lp=" << res.stats.lp_calls << " cuts=" << res.stats.cuts
            << " time=" << fixed(res.stats.wall_seconds, 3) << "s\n";
    }
    bool eta = eta_crit_applies(res.graph);
    for (size_t i = 0; i < res.optima.size(); i++) {
        const auto &r = res.optima[i];
        out << "\n[" << i + 1 << "] q=" << r.q << " p=" << r.p << " bound=" << r.bound << " D=" << r.D
            << " settings=" << settings_str(r.settings) << " class=" << r.orbit_class
            << " orbit=" << r.orbit_size << "\n";
        out << "    beta = " << render_generator_products(r.op) << "\n";
        out << "    terms: " << render_pauli_terms(r.op) << "\n";
        out << "    witness (XYZ per qubit): " << r.witness.str() << "\n";
        out << "    game=" << game_value(r.p, r.q);
        if (r.D > Rational(1)) {
            out << "  V_crit=" << v_crit(r.D);
        }
        if (eta && r.D > Rational(1)) {
            out << "  eta_crit=" << fixed(eta_crit(r.D), 6);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_machine(const ResultDocument &doc, bool include_stats) {
    const SearchResult &res = doc.result;
    json j;
    j["graph"] = res.graph.name;
    j["n"] = res.graph.n;
    json edges = json::array();
    for (auto [a, b] : res.graph.edges) {
        edges.push_back({a, b});
    }
    j["edges"] = edges;
    j["mode"] = mode_name(res.mode);
    j["complete"] = res.complete;
    j["best_D_num"] = res.best_D.num();
    j["best_D_den"] = res.best_D.den();
    j["min_q"] = res.min_q;
    json by_q = json::object();
    for (auto [q, c] : res.count_by_q) {
        by_q[std::to_string(q)] = c;
    }
    j["counts"] = {{"raw", res.raw_count}, {"classes", res.class_count}, {"by_q", by_q}};
    bool eta = eta_crit_applies(res.graph);
    json records = json::array();
    for (const auto &r : res.optima) {
        json rec;
        rec["term_masks"] = r.op.term_masks();
        rec["q"] = r.q;
        rec["p"] = r.p;
        rec["bound"] = r.bound;
        rec["D_num"] = r.D.num();
        rec["D_den"] = r.D.den();
        rec["settings"] = r.settings;
        rec["witness"] = r.witness.str();
        rec["canonical_masks"] = r.canonical_masks;
        rec["orbit_size"] = r.orbit_size;
        rec["orbit_class"] = r.orbit_class;
        rec["generators"] = render_generator_products(r.op);
        rec["paulis"] = render_pauli_terms(r.op);
        json metrics;
        metrics["game_value"] = game_value(r.p, r.q).str();
        if (r.D > Rational(1)) {
            metrics["v_crit"] = v_crit(r.D).str();
        }
        if (eta && r.D > Rational(1)) {
            metrics["eta_crit"] = eta_crit(r.D);
        }
        rec["metrics"] = metrics;
        records.push_back(rec);
    }
    j["records"] = records;
    if (include_stats) {
        j["stats"] = {{"units", res.stats.units},         {"codewords", res.stats.codewords},
                      {"nodes", res.stats.nodes},         {"lp_calls", res.stats.lp_calls},
                      {"cuts", res.stats.cuts},           {"wall_seconds", res.stats.wall_seconds}};
    }
    return j.dump(2) + "\n";
}

ParsedDocument parse_machine(std::string_view text) {
    try {
        json j = json::parse(text);
        ParsedDocument d;
        d.graph = j.at("graph").get<std::string>();
        d.n = j.at("n").get<size_t>();
        for (const auto &e : j.at("edges")) {
            d.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        d.mode = j.at("mode").get<std::string>();
        d.complete = j.at("complete").get<bool>();
        d.best_D = Rational(j.at("best_D_num").get<int64_t>(), j.at("best_D_den").get<int64_t>());
        d.min_q = j.at("min_q").get<int>();
        const auto &counts = j.at("counts");
        d.raw_count = counts.at("raw").get<size_t>();
        d.class_count = counts.at("classes").get<size_t>();
        for (const auto &[q, c] : counts.at("by_q").items()) {
            d.count_by_q[std::stoi(q)] = c.get<size_t>();
        }
        for (const auto &rec : j.at("records")) {
            ParsedRecord r;
            r.term_masks = rec.at("term_masks").get<std::vector<uint32_t>>();
            r.q = rec.at("q").get<int>();
            r.p = rec.at("p").get<int>();
            r.bound = rec.at("bound").get<int>();
            r.D = Rational(rec.at("D_num").get<int64_t>(), rec.at("D_den").get<int64_t>());
            r.settings = rec.at("settings").get<std::vector<int>>();
            r.witness = rec.at("witness").get<std::string>();
            r.canonical_masks = rec.at("canonical_masks").get<std::vector<uint32_t>>();
            r.orbit_size = rec.at("orbit_size").get<size_t>();
            r.orbit_class = rec.at("orbit_class").get<size_t>();
            d.records.push_back(std::move(r));
        }
        return d;
    } catch (const json::exception &e) {
        throw InvalidInput(std::string("malformed result document: ") + e.what());
    } catch (const std::domain_error &e) {
        throw InvalidInput(std::string("malformed result document: ") + e.what());
    }
}

ParsedDocument to_parsed(const ResultDocument &doc) {
    const SearchResult &res = doc.result;
    ParsedDocument d;
    d.graph = res.graph.name;
    d.n = res.graph.n;
    d.edges = res.graph.edges;
    d.mode = mode_name(res.mode);
    d.complete = res.complete;
    d.best_D = res.best_D;
    d.min_q = res.min_q;
    d.raw_count = res.raw_count;
    d.class_count = res.class_count;
    d.count_by_q = res.count_by_q;
    for (const auto &r : res.optima) {
        ParsedRecord p;
        p.term_masks = r.op.term_masks();
        p.q = r.q;
        p.p = r.p;
        p.bound = r.bound;
        p.D = r.D;
        p.settings = r.settings;
        p.witness = r.witness.str();
        p.canonical_masks = r.canonical_masks;
        p.orbit_size = r.orbit_size;
        p.orbit_class = r.orbit_class;
        d.records.push_back(std::move(p));
    }
    return d;
}

}  // namespace graphbell
