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


#ifndef GRAPHBELL_METRICS_H
#define GRAPHBELL_METRICS_H

#include <string>
#include <vector>

#include "graphbell/graph.h"
#include "graphbell/lhv.h"
#include "graphbell/rational.h"

namespace graphbell {

/// D = q / bound. Throws std::domain_error when bound <= 0.
Rational violation_ratio(int q, int bound);

/// Per qubit, the number of distinct non-identity letters used by the terms.
std::vector<int> settings_signature(const BellOperator &op);

/// "2-2-2".
std::string settings_str(const std::vector<int> &settings);

/// Visibility threshold 1/D. Throws std::domain_error unless D > 1.
Rational v_crit(const Rational &d);

/// Detection efficiency threshold (2 + log 2 / log D) / 4. Throws
/// std::domain_error unless D > 1. Only meaningful where eta_crit_applies.
double eta_crit(const Rational &d);

/// True for star graphs on an odd number (>= 3) of vertices.
bool eta_crit_applies(const GraphSpec &g);

/// Classical winning probability p/q of the associated game. Throws
/// std::domain_error unless 1 <= p <= q.
Rational game_value(int p, int q);

}  // namespace graphbell

#endif  // GRAPHBELL_METRICS_H
