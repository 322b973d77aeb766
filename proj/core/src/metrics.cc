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


#include "graphbell/metrics.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace graphbell {

Rational violation_ratio(int q, int bound) {
    if (bound <= 0) {
        throw std::domain_error("no violation ratio for classical bound " + std::to_string(bound));
    }
    return Rational(q, bound);
}

std::vector<int> settings_signature(const BellOperator &op) {
    size_t n = op.num_qubits();
    std::vector<unsigned> seen(n, 0);
    for (size_t k = 0; k < op.q(); k++) {
        const auto &p = op.term(k).pauli;
        for (size_t q = 0; q < n; q++) {
            seen[q] |= 1u << static_cast<unsigned>(p.letter_at(q));
        }
    }
    std::vector<int> out(n);
    for (size_t q = 0; q < n; q++) {
        out[q] = std::popcount(seen[q] & ~1u);
    }
    return out;
}

std::string settings_str(const std::vector<int> &settings) {
    std::string out;
    for (size_t k = 0; k < settings.size(); k++) {
        if (k) {
            out += '-';
        }
        out += std::to_string(settings[k]);
    }
    return out;
}

Rational v_crit(const Rational &d) {
    if (d <= Rational(1)) {
        throw std::domain_error("visibility threshold needs D > 1, got " + d.str());
    }
    return d.reciprocal();
}

double eta_crit(const Rational &d) {
    if (d <= Rational(1)) {
        throw std::domain_error("efficiency threshold needs D > 1, got " + d.str());
    }
    return (2.0 + std::log(2.0) / std::log(d.to_double())) / 4.0;
}

bool eta_crit_applies(const GraphSpec &g) {
    if (g.n < 3 || g.n % 2 == 0 || g.edges.size() != g.n - 1) {
        return false;
    }
    for (size_t v = 1; v <= g.n; v++) {
        if (static_cast<size_t>(std::popcount(g.neighbor_mask(static_cast<int>(v)))) == g.n - 1) {
            return true;
        }
    }
    return false;
}

Rational game_value(int p, int q) {
    if (q < 1 || p < 1 || p > q) {
        throw std::domain_error("game value needs 1 <= p <= q, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    }
    return Rational(p, q);
}

}  // namespace graphbell
