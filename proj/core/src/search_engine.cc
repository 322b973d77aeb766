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


#include "search_engine.h"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "lp_relaxation.h"

namespace graphbell::detail {

namespace {

constexpr size_t kInitialLpRows = 48;
constexpr size_t kLpRowsPerRound = 32;
constexpr double kLpTol = 1e-7;
constexpr size_t kMaxPoolRows = 4096;
constexpr double kHeuristicWork = 4e8;

enum : int8_t { kUndecided = 0, kIn = 1, kOut = 2 };

bool ratio_greater(int64_t q1, int64_t b1, int64_t q2, int64_t b2) {
    return static_cast<__int128>(q1) * b2 > static_cast<__int128>(q2) * b1;
}

struct Shared {
    std::mutex mu;
    int64_t num = 1;
    int64_t den = 1;
    std::vector<UnitSet> found;
    std::atomic<uint64_t> version{0};
    std::atomic<uint64_t> nodes{0};
    std::atomic<uint64_t> lp_calls{0};
    std::atomic<uint64_t> cuts{0};
    std::atomic<bool> aborted{false};
    uint64_t budget = 0;
};

int32_t add_min(int32_t *__restrict out, const int32_t *__restrict in, const int32_t *__restrict d, size_t n) {
    int32_t m = INT32_MAX;
    for (size_t i = 0; i < n; i++) {
        int32_t v = in[i] + d[i];
        out[i] = v;
        m = std::min(m, v);
    }
    return m;
}

int32_t sub_min(int32_t *__restrict out, const int32_t *__restrict in, const int32_t *__restrict d, size_t n) {
    int32_t m = INT32_MAX;
    for (size_t i = 0; i < n; i++) {
        int32_t v = in[i] - d[i];
        out[i] = v;
        m = std::min(m, v);
    }
    return m;
}

class Worker {
   public:
    Worker(const EngineProblem &problem, const EngineOptions &options, Shared &shared)
        : P_(problem),
          opt_(options),
          sh_(shared),
          k_(problem.num_units),
          nc_(problem.num_codewords),
          tot_(problem.num_units + 2, std::vector<int32_t>(problem.num_codewords)),
          pt_(problem.num_units + 2) {
    }

    void run(const std::vector<int8_t> &prefix) {
        base_ = prefix;
        state_ = prefix;
        path_.clear();
        qcur_ = 0;
        for (size_t o = 0; o < k_; o++) {
            if (state_[o] == kIn) {
                qcur_ += P_.unit_size[o];
            }
        }
        if (opt_.max_q && qcur_ > *opt_.max_q) {
            return;
        }
        sync_ratio(true);
        recompute(0);
        pt_[0].resize(pool_.size());
        for (size_t r = 0; r < pool_.size(); r++) {
            pt_[0][r] = base_total(pool_[r]);
        }
        int32_t mn = *std::min_element(tot_[0].begin(), tot_[0].end());
        if (mn >= 0) {
            node(0, mn);
        }
    }

   private:
    void set_ratio(int64_t num, int64_t den) {
        num_ = num;
        den_ = den;
        a_.assign(k_ * nc_, 0);
        neg_.assign(k_ * nc_, 0);
        pos_.assign(k_ * nc_, 0);
        for (size_t o = 0; o < k_; o++) {
            int64_t sz = P_.unit_size[o];
            for (size_t c = 0; c < nc_; c++) {
                int64_t a = den * sz - num * (2 * int64_t{P_.counts[c * k_ + o]} - sz);
                a_[o * nc_ + c] = static_cast<int32_t>(a);
                neg_[o * nc_ + c] = static_cast<int32_t>(std::min<int64_t>(a, 0));
                pos_[o * nc_ + c] = static_cast<int32_t>(std::max<int64_t>(a, 0));
            }
        }
    }

    bool sync_ratio(bool force) {
        uint64_t v = sh_.version.load(std::memory_order_acquire);
        if (!force && v == version_) {
            return false;
        }
        int64_t num, den;
        {
            std::lock_guard<std::mutex> lock(sh_.mu);
            num = sh_.num;
            den = sh_.den;
            version_ = sh_.version.load(std::memory_order_relaxed);
        }
        if (!force && num == num_ && den == den_) {
            return false;
        }
        set_ratio(num, den);
        return true;
    }

    void recompute(size_t d) {
        auto &t = tot_[d];
        std::fill(t.begin(), t.end(), 0);
        for (size_t o = 0; o < k_; o++) {
            const int32_t *src = nullptr;
            if (state_[o] == kIn) {
                src = &a_[o * nc_];
            } else if (state_[o] == kUndecided) {
                src = &pos_[o * nc_];
            } else {
                continue;
            }
            for (size_t c = 0; c < nc_; c++) {
                t[c] += src[c];
            }
        }
    }

    int64_t base_total(const std::vector<int64_t> &w) const {
        int64_t t = 0;
        for (size_t o = 0; o < k_; o++) {
            if (base_[o] == kIn) {
                t += w[o];
            } else if (base_[o] == kUndecided) {
                t += std::max<int64_t>(w[o], 0);
            }
        }
        return t;
    }

    void node(size_t d, int32_t mn) {
        if (sh_.aborted.load(std::memory_order_relaxed)) {
            return;
        }
        uint64_t count = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (sh_.budget && count > sh_.budget) {
            sh_.aborted.store(true);
            return;
        }
        if (sync_ratio(false)) {
            recompute(d);
            mn = *std::min_element(tot_[d].begin(), tot_[d].end());
            if (mn < 0) {
                return;
            }
        }
        const int32_t *t = tot_[d].data();
        size_t cs = 0;
        while (t[cs] != mn) {
            cs++;
        }
        int bo = -1;
        int32_t bv = -1;
        size_t undecided = 0;
        for (size_t o = 0; o < k_; o++) {
            if (state_[o] == kUndecided) {
                undecided++;
                int32_t a = pos_[o * nc_ + cs];
                if (a > bv) {
                    bv = a;
                    bo = static_cast<int>(o);
                }
            }
        }
        if (bo < 0) {
            leaf();
            return;
        }
        for (size_t r = 0; r < pool_.size(); r++) {
            if (pt_[d][r] < 0) {
                return;
            }
        }
        if (undecided >= 2 && lp_prune(d)) {
            return;
        }

        int64_t ln = num_, ld = den_;
        size_t o = static_cast<size_t>(bo);
        size_t sz = static_cast<size_t>(P_.unit_size[o]);
        path_.resize(d);
        if (!opt_.max_q || qcur_ + sz <= *opt_.max_q) {
            state_[o] = kIn;
            qcur_ += sz;
            int32_t m1 = add_min(tot_[d + 1].data(), t, &neg_[o * nc_], nc_);
            path_.push_back({o, true});
            pt_[d + 1].resize(pool_.size());
            for (size_t r = 0; r < pool_.size(); r++) {
                pt_[d + 1][r] = pt_[d][r] + std::min<int64_t>(pool_[r][o], 0);
            }
            if (m1 >= 0) {
                node(d + 1, m1);
            }
            qcur_ -= sz;
            path_.resize(d);
        }
        state_[o] = kOut;
        if (ln != num_ || ld != den_) {
            state_[o] = kUndecided;
            recompute(d);
            state_[o] = kOut;
        }
        t = tot_[d].data();
        int32_t m2 = sub_min(tot_[d + 1].data(), t, &pos_[o * nc_], nc_);
        path_.push_back({o, false});
        pt_[d + 1].resize(pool_.size());
        for (size_t r = 0; r < pool_.size(); r++) {
            pt_[d + 1][r] = pt_[d][r] - std::max<int64_t>(pool_[r][o], 0);
        }
        if (m2 >= 0) {
            node(d + 1, m2);
        }
        path_.resize(d);
        state_[o] = kUndecided;
    }

    void leaf() {
        if (qcur_ == 0) {
            return;
        }
        int p = 0;
        for (size_t c = 0; c < nc_; c++) {
            int s = 0;
            const int *row = &P_.counts[c * k_];
            for (size_t o = 0; o < k_; o++) {
                if (state_[o] == kIn) {
                    s += row[o];
                }
            }
            p = std::max(p, s);
        }
        int64_t q = static_cast<int64_t>(qcur_);
        int64_t b = 2 * int64_t{p} - q;
        UnitSet set{};
        for (size_t o = 0; o < k_; o++) {
            if (state_[o] == kIn) {
                set[o / 64] |= uint64_t{1} << (o % 64);
            }
        }
        std::lock_guard<std::mutex> lock(sh_.mu);
        if (ratio_greater(q, b, sh_.num, sh_.den)) {
            int64_t g = std::gcd(q, b);
            sh_.num = q / g;
            sh_.den = b / g;
            sh_.found.clear();
            sh_.found.push_back(set);
            sh_.version.fetch_add(1, std::memory_order_release);
        } else if (!ratio_greater(sh_.num, sh_.den, q, b)) {
            sh_.found.push_back(set);
        }
    }

    bool lp_prune(size_t d) {
        std::vector<size_t> units;
        for (size_t o = 0; o < k_; o++) {
            if (state_[o] == kUndecided) {
                units.push_back(o);
            }
        }
        size_t m = units.size();
        std::vector<int64_t> cur(tot_[d].begin(), tot_[d].end());
        for (size_t o : units) {
            for (size_t c = 0; c < nc_; c++) {
                cur[c] -= pos_[o * nc_ + c];
            }
        }
        std::vector<size_t> idx(nc_);
        std::iota(idx.begin(), idx.end(), 0);
        size_t first = std::min(nc_, kInitialLpRows);
        const int32_t *t = tot_[d].data();
        std::partial_sort(idx.begin(), idx.begin() + first, idx.end(), [&](size_t a, size_t b) {
            return t[a] < t[b] || (t[a] == t[b] && a < b);
        });
        std::vector<size_t> rows(idx.begin(), idx.begin() + first);
        std::vector<char> in_rows(nc_, 0);
        for (size_t c : rows) {
            in_rows[c] = 1;
        }
        sh_.lp_calls.fetch_add(1, std::memory_order_relaxed);
        MaxMinLpResult res;
        while (true) {
            std::vector<double> base(rows.size());
            std::vector<double> coef(rows.size() * m);
            for (size_t r = 0; r < rows.size(); r++) {
                base[r] = static_cast<double>(cur[rows[r]]);
                for (size_t j = 0; j < m; j++) {
                    coef[r * m + j] = a_[units[j] * nc_ + rows[r]];
                }
            }
            res = solve_max_min_lp(base, coef, m);
            if (res.value < -kLpTol) {
                break;
            }
            std::vector<std::pair<double, size_t>> violated;
            for (size_t c = 0; c < nc_; c++) {
                if (in_rows[c]) {
                    continue;
                }
                double v = static_cast<double>(cur[c]);
                for (size_t j = 0; j < m; j++) {
                    v += a_[units[j] * nc_ + c] * res.x[j];
                }
                if (v < res.value - kLpTol) {
                    violated.push_back({v, c});
                }
            }
            if (violated.empty()) {
                return false;
            }
            std::sort(violated.begin(), violated.end());
            for (size_t i = 0; i < violated.size() && i < kLpRowsPerRound; i++) {
                rows.push_back(violated[i].second);
                in_rows[violated[i].second] = 1;
            }
        }

        double mx = *std::max_element(res.duals.begin(), res.duals.end());
        if (!(mx > 0)) {
            return false;
        }
        for (double scale : {65536.0, 16777216.0}) {
            std::vector<int64_t> w(k_, 0);
            for (size_t r = 0; r < rows.size(); r++) {
                int64_t mu = std::llround(res.duals[r] / mx * scale);
                if (mu <= 0) {
                    continue;
                }
                size_t c = rows[r];
                for (size_t o = 0; o < k_; o++) {
                    w[o] += mu * a_[o * nc_ + c];
                }
            }
            // Exact integer re-check: the aggregated row must be negative for
            // every completion of the current partial set.
            int64_t here = 0;
            for (size_t o = 0; o < k_; o++) {
                if (state_[o] == kIn) {
                    here += w[o];
                } else if (state_[o] == kUndecided) {
                    here += std::max<int64_t>(w[o], 0);
                }
            }
            if (here >= 0) {
                continue;
            }
            sh_.cuts.fetch_add(1, std::memory_order_relaxed);
            if (pool_.size() < kMaxPoolRows) {
                int64_t v = base_total(w);
                pt_[0].push_back(v);
                for (size_t dd = 0; dd < d; dd++) {
                    auto [o, in] = path_[dd];
                    v += in ? std::min<int64_t>(w[o], 0) : -std::max<int64_t>(w[o], 0);
                    pt_[dd + 1].push_back(v);
                }
                pool_.push_back(std::move(w));
            }
            return true;
        }
        return false;
    }

    const EngineProblem &P_;
    const EngineOptions &opt_;
    Shared &sh_;
    size_t k_;
    size_t nc_;
    int64_t num_ = 0;
    int64_t den_ = 0;
    uint64_t version_ = 0;
    std::vector<int32_t> a_, neg_, pos_;
    std::vector<int8_t> base_, state_;
    std::vector<std::vector<int32_t>> tot_;
    std::vector<std::pair<size_t, bool>> path_;
    std::vector<std::vector<int64_t>> pool_;
    std::vector<std::vector<int64_t>> pt_;
    size_t qcur_ = 0;
};

/// Greedy construction of a good starting ratio.
std::pair<int64_t, int64_t> initial_ratio(const EngineProblem &P, const EngineOptions &opt) {
    size_t k = P.num_units, nc = P.num_codewords;
    int64_t best_q = 0, best_b = 1;
    auto fits = [&](size_t q) { return !opt.max_q || q <= *opt.max_q; };
    auto consider = [&](int64_t q, int64_t p) {
        int64_t b = 2 * p - q;
        if (q > 0 && b > 0 && (best_q == 0 || ratio_greater(q, b, best_q, best_b))) {
            best_q = q;
            best_b = b;
        }
    };
    for (size_t o = 0; o < k; o++) {
        if (!fits(P.unit_size[o])) {
            continue;
        }
        int p = 0;
        for (size_t c = 0; c < nc; c++) {
            p = std::max(p, P.counts[c * k + o]);
        }
        consider(P.unit_size[o], p);
    }
    if (static_cast<double>(k) * k * nc > kHeuristicWork) {
        return {best_q, best_b};
    }
    // Greedy growth and greedy shrinking, keeping the best prefix of each.
    for (int direction = 0; direction < 2; direction++) {
        std::vector<char> in(k, direction == 1);
        std::vector<int64_t> cnt(nc, 0);
        int64_t q = 0;
        if (direction == 1) {
            for (size_t o = 0; o < k; o++) {
                q += P.unit_size[o];
                for (size_t c = 0; c < nc; c++) {
                    cnt[c] += P.counts[c * k + o];
                }
            }
            if (!fits(static_cast<size_t>(q))) {
                continue;
            }
            consider(q, *std::max_element(cnt.begin(), cnt.end()));
        }
        while (true) {
            int pick = -1;
            int64_t pick_q = 0, pick_b = 1;
            for (size_t o = 0; o < k; o++) {
                bool candidate = direction == 0 ? !in[o] : static_cast<bool>(in[o]);
                if (!candidate) {
                    continue;
                }
                int64_t sign = direction == 0 ? 1 : -1;
                int64_t nq = q + sign * P.unit_size[o];
                if (nq <= 0 || !fits(static_cast<size_t>(nq))) {
                    continue;
                }
                int64_t p = 0;
                for (size_t c = 0; c < nc; c++) {
                    p = std::max(p, cnt[c] + sign * P.counts[c * k + o]);
                }
                int64_t b = 2 * p - nq;
                if (b > 0 && (pick < 0 || ratio_greater(nq, b, pick_q, pick_b))) {
                    pick = static_cast<int>(o);
                    pick_q = nq;
                    pick_b = b;
                }
            }
            if (pick < 0) {
                break;
            }
            int64_t sign = direction == 0 ? 1 : -1;
            in[pick] = direction == 0;
            q = pick_q;
            for (size_t c = 0; c < nc; c++) {
                cnt[c] += sign * P.counts[c * k + pick];
            }
            consider(pick_q, (pick_q + pick_b) / 2);
        }
    }
    return {best_q, best_b};
}

}  // namespace

EngineSolution run_engine(const EngineProblem &problem, const EngineOptions &options) {
    size_t k = problem.num_units;
    if (k == 0 || k > kMaxUnits) {
        throw std::invalid_argument("search needs 1.." + std::to_string(kMaxUnits) + " units");
    }
    if (problem.unit_size.size() != k || problem.counts.size() != k * problem.num_codewords ||
        problem.num_codewords == 0) {
        throw std::invalid_argument("inconsistent search problem");
    }
    EngineSolution out;
    auto [q0, b0] = initial_ratio(problem, options);
    if (q0 == 0) {
        return out;
    }
    Shared sh;
    int64_t g = std::gcd(q0, b0);
    sh.num = q0 / g;
    sh.den = b0 / g;
    sh.budget = options.node_budget;

    size_t workers = std::max<size_t>(1, options.workers);
    size_t split = 0;
    if (workers > 1) {
        while ((size_t{1} << split) < workers * 8 && split < k && split < 12) {
            split++;
        }
    }
    size_t num_tasks = size_t{1} << split;
    std::atomic<size_t> next{0};
    auto work = [&]() {
        Worker w(problem, options, sh);
        std::vector<int8_t> prefix(k, kUndecided);
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= num_tasks || sh.aborted.load()) {
                break;
            }
            // Task 0 includes every split unit so strong sets appear early.
            for (size_t j = 0; j < split; j++) {
                prefix[j] = (i >> j & 1) ? kOut : kIn;
            }
            w.run(prefix);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (size_t t = 0; t < workers; t++) {
            threads.emplace_back(work);
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    out.optima = std::move(sh.found);
    std::sort(out.optima.begin(), out.optima.end());
    out.optima.erase(std::unique(out.optima.begin(), out.optima.end()), out.optima.end());
    out.best = Rational(sh.num, sh.den);
    out.complete = !sh.aborted.load();
    out.nodes = sh.nodes.load();
    out.lp_calls = sh.lp_calls.load();
    out.cuts = sh.cuts.load();
    return out;
}

}  // namespace graphbell::detail
