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


#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "graphbell/bell_search.h"
#include "graphbell/catalog.h"
#include "graphbell/errors.h"
#include "graphbell/report.h"
#include "graphbell/stabilizer_group.h"
#include "graphbell/verify.h"

using namespace graphbell;

namespace {

size_t default_workers() {
    if (const char *env = std::getenv("GRAPHBELL_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) {
                return static_cast<size_t>(v);
            }
        } catch (const std::exception &) {
        }
        std::cerr << "ignoring bad GRAPHBELL_WORKERS='" << env << "'\n";
    }
    return 1;
}

int cmd_list(std::optional<size_t> n) {
    for (const auto &e : catalog()) {
        if (n && e.graph.n != *n) {
            continue;
        }
        std::cout << e.name;
        if (!e.alias.empty()) {
            std::cout << "/" << e.alias;
        }
        std::cout << "  n=" << e.graph.n << "  edges " << e.graph.edge_list_str() << "\n";
    }
    return kExitOk;
}

int cmd_show(const std::string &name) {
    const auto &entry = catalog_entry(name);
    StabilizerGroup group = stabilizer_group(entry.graph);
    std::cout << entry.name << (entry.alias.empty() ? "" : "/" + entry.alias) << "  n=" << entry.graph.n
              << "  edges " << entry.graph.edge_list_str() << "\n\ngenerators:\n";
    for (size_t i = 0; i < group.generators().size(); i++) {
        std::cout << "  g" << i + 1 << " = " << group.generators()[i].pauli << "\n";
    }
    std::cout << "\nstabilizer group:\n";
    for (const auto &s : group.elements()) {
        std::string label;
        for (size_t i = 0; i < entry.graph.n; i++) {
            if (s.index_set >> i & 1) {
                label += (label.empty() ? "g" : "·g") + std::to_string(i + 1);
            }
        }
        std::cout << "  " << (label.empty() ? "1" : label) << "  " << s.pauli << "\n";
    }
    for (const auto &d : validate_entry(entry)) {
        std::cout << "note: g" << d.generator << " derived " << d.derived << " but printed " << d.printed << "\n";
    }
    return kExitOk;
}

int cmd_search(const std::string &graph_name, const std::string &file, const std::string &mode,
               std::optional<size_t> max_q, size_t workers, const std::string &emit, bool stats, uint64_t budget) {
    GraphSpec g = file.empty() ? catalog_lookup(graph_name) : load_graph_file(file);
    SearchConfig cfg;
    cfg.mode = parse_mode(mode);
    cfg.max_q = max_q;
    cfg.worker_count = workers;
    cfg.node_budget = budget;
    auto emit_doc = [&](const SearchResult &res) {
        ResultDocument doc = make_document(res);
        std::cout << (emit == "machine" ? render_machine(doc, stats) : render_text(doc, stats));
    };
    try {
        emit_doc(run_search(g, cfg));
    } catch (const SearchBudgetExceeded &e) {
        std::cerr << "node budget exhausted; best-so-far result is incomplete\n";
        emit_doc(e.partial());
        return kExitBudgetExceeded;
    }
    return kExitOk;
}

int cmd_verify(const std::optional<std::string> &only, size_t workers) {
    VerifyReport report = run_verify(only, workers);
    std::cout << render_verify(report);
    return report.exit_code();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer Bell inequalities for graph states"};
    app.require_subcommand(1);

    auto *list = app.add_subcommand("list", "List the built-in graph catalog");
    std::optional<size_t> list_n;
    list->add_option("--n", list_n, "Only graphs with this many qubits");

    auto *show = app.add_subcommand("show", "Print generators and the full stabilizer group");
    std::string show_graph;
    show->add_option("--graph", show_graph, "Catalog name")->required();

    auto *search = app.add_subcommand("search", "Search for maximally violated Bell operators");
    std::string graph_name, file, mode = "symmetric", emit = "text";
    std::optional<size_t> max_q;
    size_t workers = default_workers();
    bool stats = false;
    uint64_t budget = 0;
    auto *g_opt = search->add_option("--graph", graph_name, "Catalog name");
    auto *f_opt = search->add_option("--file", file, "Graph file");
    g_opt->excludes(f_opt);
    search->add_option("--mode", mode, "exhaustive or symmetric")
        ->check(CLI::IsMember({"exhaustive", "symmetric"}));
    search->add_option("--max-q", max_q, "Upper limit on the number of terms");
    search->add_option("--workers", workers, "Worker threads (default from GRAPHBELL_WORKERS)")
        ->check(CLI::PositiveNumber);
    search->add_option("--emit", emit, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    search->add_option("--node-budget", budget, "Stop after this many search nodes (0 = unlimited)");
    search->add_flag("--stats", stats, "Include node counts and timings");

    auto *verify = app.add_subcommand("verify", "Re-derive the published tables");
    std::optional<std::string> only;
    verify->add_option("--only", only, "Verify a single catalog graph");
    verify->add_option("--workers", workers, "Worker threads (default from GRAPHBELL_WORKERS)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*list) {
            return cmd_list(list_n);
        }
        if (*show) {
            return cmd_show(show_graph);
        }
        if (*search) {
            if (graph_name.empty() && file.empty()) {
                std::cerr << "search needs --graph or --file\n";
                return kExitInvalidInput;
            }
            return cmd_search(graph_name, file, mode, max_q, workers, emit, stats, budget);
        }
        return cmd_verify(only, workers);
    } catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
