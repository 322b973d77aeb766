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


#ifndef GRAPHBELL_BELL_SEARCH_H
#define GRAPHBELL_BELL_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphbell/graph.h"
#include "graphbell/lhv.h"
#include "graphbell/rational.h"

namespace graphbell {

enum class SearchMode { kExhaustive, kSymmetric };

std::string mode_name(SearchMode mode);
/// "exhaustive" or "symmetric". Throws InvalidInput otherwise.
SearchMode parse_mode(std::string_view text);

struct SearchConfig {
    SearchMode mode = SearchMode::kSymmetric;
    /// Upper limit on the number of terms.
    std::optional<size_t> max_q;
    size_t worker_count = 1;
    /// When false only the first optimum (in canonical order) gets a full
    /// record; the counts still cover all of them.
    bool report_all_optima = true;
    /// Branch-and-bound node limit; 0 means unlimited.
    uint64_t node_budget = 0;
};

struct InequalityRecord {
    BellOperator op;
    int q = 0;
    int p = 0;
    int bound = 0;
    Rational D;
    std::vector<int> settings;
    LhvAssignment witness;
    /// Lexicographically least image of the term set under the automorphisms.
    std::vector<uint32_t> canonical_masks;
    /// Number of distinct images of the term set.
    size_t orbit_size = 1;
    /// Index of the canonical class within the search result.
    size_t orbit_class = 0;
};

/// Builds a record with p, bound, D, settings and witness derived from the
/// operator. Canonical data is left trivial.
InequalityRecord make_record(const BellOperator &op);

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t lp_calls = 0;
    uint64_t cuts = 0;
    size_t units = 0;
    size_t codewords = 0;
    double wall_seconds = 0;
};

struct SearchResult {
    GraphSpec graph;
    SearchMode mode = SearchMode::kSymmetric;
    Rational best_D;
    int min_q = 0;
    /// Every subset with D = best_D and q = min_q, ordered by term masks.
    std::vector<InequalityRecord> optima;
    /// Raw number of optimal subsets at min_q.
    size_t raw_count = 0;
    /// Number of distinct canonical classes among them.
    size_t class_count = 0;
    /// All subsets reaching best_D, by term count.
    std::map<int, size_t> count_by_q;
    SearchStats stats;
    bool complete = true;
};

/// Thrown when SearchConfig::node_budget runs out. Carries the best sets seen
/// so far with complete = false.
class SearchBudgetExceeded : public std::runtime_error {
   public:
    explicit SearchBudgetExceeded(SearchResult partial);
    const SearchResult &partial() const { return *partial_; }

   private:
    std::shared_ptr<const SearchResult> partial_;
};

/// Candidates are unions of automorphism orbits of non-identity elements.
/// n <= 8.
SearchResult search_symmetric(const GraphSpec &g, const SearchConfig &cfg = {});

/// Candidates are all subsets of non-identity elements. Refused for n >= 6
/// unless cfg.max_q or cfg.node_budget is set.
SearchResult search_exhaustive(const GraphSpec &g, const SearchConfig &cfg = {});

/// Dispatches on cfg.mode.
SearchResult run_search(const GraphSpec &g, const SearchConfig &cfg);

/// Rewrites the record in terms of its lexicographically least automorphic
/// image, filling canonical_masks and orbit_size.
InequalityRecord canonicalize(const InequalityRecord &record, const std::vector<Automorphism> &autos);

/// Multiplies every term by the stabilizer element `mask`. Throws InvalidInput
/// when mask is zero or a term would become the identity.
BellOperator translate(const BellOperator &op, uint32_t mask);

/// <G|beta|G> from the dense state vector. Throws ConsistencyError when it
/// differs from q by more than 1e-9.
double verify_quantum_value(const InequalityRecord &record, const GraphSpec &g);

}  // namespace graphbell

#endif  // GRAPHBELL_BELL_SEARCH_H
