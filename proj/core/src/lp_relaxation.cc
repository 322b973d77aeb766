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


#include "lp_relaxation.h"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace graphbell::detail {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kRatioEps = 1e-12;
constexpr int kDegenerateLimit = 50;

}  // namespace

MaxMinLpResult solve_max_min_lp(const std::vector<double> &base, const std::vector<double> &coef, size_t num_cols) {
    size_t nr = base.size();
    if (nr == 0) {
        throw std::invalid_argument("max-min LP needs at least one row");
    }
    if (coef.size() != nr * num_cols) {
        throw std::invalid_argument("max-min LP coefficient matrix has the wrong size");
    }
    // Column layout: x_0..x_{m-2}, then the shifted objective t' = t - t0 >= 0.
    size_t m = num_cols + 1;
    size_t rows = nr + num_cols;
    double t0 = *std::min_element(base.begin(), base.end()) - 1;

    std::vector<double> tab(rows * m, 0.0);
    std::vector<double> rhs(rows);
    std::vector<double> obj(m, 0.0);
    std::vector<int> colvar(m);
    std::vector<int> rowvar(rows);
    for (size_t j = 0; j < m; j++) {
        colvar[j] = static_cast<int>(j);
    }
    for (size_t i = 0; i < rows; i++) {
        rowvar[i] = static_cast<int>(m + i);
    }
    // Each row reads basic = rhs - sum_j tab[i][j] * nonbasic_j.
    for (size_t r = 0; r < nr; r++) {
        double *row = &tab[r * m];
        for (size_t j = 0; j < num_cols; j++) {
            row[j] = -coef[r * num_cols + j];
        }
        row[m - 1] = 1;
        rhs[r] = base[r] - t0;
    }
    for (size_t j = 0; j < num_cols; j++) {
        tab[(nr + j) * m + j] = 1;
        rhs[nr + j] = 1;
    }
    obj[m - 1] = 1;
    double z = 0;

    int degenerate = 0;
    while (true) {
        int e = -1;
        if (degenerate < kDegenerateLimit) {
            double best = kPivotEps;
            for (size_t j = 0; j < m; j++) {
                if (obj[j] > best) {
                    best = obj[j];
                    e = static_cast<int>(j);
                }
            }
        } else {
            int best_id = INT_MAX;
            for (size_t j = 0; j < m; j++) {
                if (obj[j] > kPivotEps && colvar[j] < best_id) {
                    best_id = colvar[j];
                    e = static_cast<int>(j);
                }
            }
        }
        if (e < 0) {
            break;
        }
        int r = -1;
        double best_ratio = 1e300;
        int best_id = INT_MAX;
        for (size_t i = 0; i < rows; i++) {
            double a = tab[i * m + e];
            if (a > kPivotEps) {
                double ratio = rhs[i] / a;
                if (ratio < best_ratio - kRatioEps || (ratio < best_ratio + kRatioEps && rowvar[i] < best_id)) {
                    best_ratio = ratio;
                    r = static_cast<int>(i);
                    best_id = rowvar[i];
                }
            }
        }
        if (r < 0) {
            throw std::logic_error("max-min LP is unbounded");
        }
        degenerate = best_ratio < kRatioEps ? degenerate + 1 : 0;

        double *pr = &tab[static_cast<size_t>(r) * m];
        double piv = pr[e];
        for (size_t j = 0; j < m; j++) {
            pr[j] /= piv;
        }
        rhs[r] /= piv;
        pr[e] = 1.0 / piv;
        for (size_t i = 0; i < rows; i++) {
            if (static_cast<int>(i) == r) {
                continue;
            }
            double *pi = &tab[i * m];
            double f = pi[e];
            if (f == 0) {
                continue;
            }
            for (size_t j = 0; j < m; j++) {
                pi[j] -= f * pr[j];
            }
            pi[e] = -f * pr[e];
            rhs[i] -= f * rhs[r];
        }
        double f = obj[e];
        for (size_t j = 0; j < m; j++) {
            obj[j] -= f * pr[j];
        }
        obj[e] = -f * pr[e];
        z += f * rhs[r];
        std::swap(colvar[e], rowvar[r]);
    }

    MaxMinLpResult out;
    out.value = z + t0;
    out.duals.assign(nr, 0.0);
    for (size_t j = 0; j < m; j++) {
        int v = colvar[j] - static_cast<int>(m);
        if (v >= 0 && static_cast<size_t>(v) < nr) {
            out.duals[v] = -obj[j];
        }
    }
    out.x.assign(num_cols, 0.0);
    for (size_t i = 0; i < rows; i++) {
        if (rowvar[i] < static_cast<int>(num_cols)) {
            out.x[rowvar[i]] = rhs[i];
        }
    }
    return out;
}

}  // namespace graphbell::detail
