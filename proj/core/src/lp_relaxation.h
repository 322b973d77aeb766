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


#ifndef GRAPHBELL_LP_RELAXATION_H
#define GRAPHBELL_LP_RELAXATION_H

#include <cstddef>
#include <vector>

namespace graphbell::detail {

struct MaxMinLpResult {
    double value = 0;
    /// One multiplier per row; nonnegative, summing to 1 at the optimum.
    std::vector<double> duals;
    std::vector<double> x;
};

/// maximize t subject to t <= base[r] + sum_j coef[r * num_cols + j] * x_j
/// for every row r, and 0 <= x_j <= 1.
///
/// Dense dictionary simplex, Dantzig pricing with a switch to Bland's rule
/// after a run of degenerate pivots.
MaxMinLpResult solve_max_min_lp(const std::vector<double> &base, const std::vector<double> &coef, size_t num_cols);

}  // namespace graphbell::detail

#endif  // GRAPHBELL_LP_RELAXATION_H
