// Copyright 2026 involucomp authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "involucomp/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace involucomp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Incremental pattern-containment state over a growing sequence of distinct
// values. For every proper prefix length j of the pattern it keeps the
// Pareto-minimal embeddings ("witnesses"): witness A dominates B when every
// completion of B is also a completion of A, judged coordinatewise with the
// direction each coordinate is constrained by the remaining pattern slots.
class ContainmentTracker {
public:
    explicit ContainmentTracker(const std::vector<int>& pattern) : pat_(pattern) {
        const int m = static_cast<int>(pat_.size());
        wit_.resize(static_cast<size_t>(std::max(m, 1)));
        dir_.resize(static_cast<size_t>(std::max(m, 1)));
        for (int j = 1; j < m; ++j) {
            dir_[static_cast<size_t>(j)].resize(static_cast<size_t>(j));
            for (int i = 0; i < j; ++i) {
                bool smaller = false, larger = false;
                for (int t = j; t < m; ++t)
                    (pat_[static_cast<size_t>(i)] < pat_[static_cast<size_t>(t)] ? smaller : larger) = true;
                dir_[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    smaller && larger ? 0 : (smaller ? -1 : +1);
            }
        }
    }

    // Would appending x complete an occurrence of the full pattern?
    bool completes(int x) const {
        const int m = static_cast<int>(pat_.size());
        if (m == 0 || m == 1) return true;
        for (const auto& w : wit_[static_cast<size_t>(m) - 1])
            if (extends(w, m - 1, x)) return true;
        return false;
    }

    void push(int x) {
        const int m = static_cast<int>(pat_.size());
        if (m <= 1) return;
        for (int j = m - 2; j >= 1; --j) {
            for (const auto& w : wit_[static_cast<size_t>(j)]) {
                if (!extends(w, j, x)) continue;
                std::vector<int> grown = w;
                grown.push_back(x);
                insert(j + 1, std::move(grown));
            }
        }
        insert(1, {x});
    }

private:
    // Can x play pattern slot j (0-based) after witness w of length j?
    bool extends(const std::vector<int>& w, int j, int x) const {
        for (int i = 0; i < j; ++i) {
            if (pat_[static_cast<size_t>(i)] < pat_[static_cast<size_t>(j)]) {
                if (!(w[static_cast<size_t>(i)] < x)) return false;
            } else {
                if (!(w[static_cast<size_t>(i)] > x)) return false;
            }
        }
        return true;
    }

    bool dominates(const std::vector<int>& a, const std::vector<int>& b, int j) const {
        for (int i = 0; i < j; ++i) {
            int d = dir_[static_cast<size_t>(j)][static_cast<size_t>(i)];
            int av = a[static_cast<size_t>(i)], bv = b[static_cast<size_t>(i)];
            if (d < 0 ? av > bv : (d > 0 ? av < bv : av != bv)) return false;
        }
        return true;
    }

    void insert(int j, std::vector<int> cand) {
        auto& level = wit_[static_cast<size_t>(j)];
        for (const auto& e : level)
            if (dominates(e, cand, j)) return;
        std::erase_if(level, [&](const std::vector<int>& e) { return dominates(cand, e, j); });
        level.push_back(std::move(cand));
    }

    std::vector<int> pat_;
    std::vector<std::vector<int>> dir_;                // per level, per coordinate
    std::vector<std::vector<std::vector<int>>> wit_;   // per level 1..m-1
};

std::vector<int> pattern_word(const Pattern& pat) { return pat.image(); }

}  // namespace

bool contains_pattern(const Permutation& pi, const Pattern& pat) {
    if (pat.size() == 0) return true;
    if (pat.size() > pi.size()) return false;
    ContainmentTracker tracker(pattern_word(pat));
    for (int i = 1; i <= pi.size(); ++i) {
        int x = pi.apply(i);
        if (tracker.completes(x)) return true;
        tracker.push(x);
    }
    return false;
}

namespace {

void count_all_rec(int n, int depth, uint32_t used, const ContainmentTracker& tracker,
                   unsigned long long& count) {
    if (depth == n) {
        ++count;
        return;
    }
    for (int x = 1; x <= n; ++x) {
        if (used & (1u << x)) continue;
        if (tracker.completes(x)) continue;
        ContainmentTracker next = tracker;
        next.push(x);
        count_all_rec(n, depth + 1, used | (1u << x), next, count);
    }
}

void count_inv_rec(int n, int i, std::vector<int>& forced, const ContainmentTracker& tracker,
                   unsigned long long& count) {
    if (i > n) {
        ++count;
        return;
    }
    auto step = [&](int x) {
        if (tracker.completes(x)) return;
        ContainmentTracker next = tracker;
        next.push(x);
        count_inv_rec(n, i + 1, forced, next, count);
    };
    if (forced[static_cast<size_t>(i)] != 0) {
        step(forced[static_cast<size_t>(i)]);
        return;
    }
    step(i);  // fixed point: w_i = i
    for (int j = i + 1; j <= n; ++j) {
        if (forced[static_cast<size_t>(j)] != 0) continue;
        forced[static_cast<size_t>(j)] = i;  // w_i = j commits w_j = i
        step(j);
        forced[static_cast<size_t>(j)] = 0;
    }
}

}  // namespace

BigInt count_avoiders(int n, const Pattern& pat, AvoiderClass cls, const AvoiderBounds& bounds) {
    require(n >= 0, "count_avoiders: negative n");
    const int bound = cls == AvoiderClass::All ? bounds.all : bounds.involutions;
    if (n > bound) throw std::invalid_argument("count_avoiders: n above the configured bound");
    if (pat.size() == 0) return n == 0 ? 1 : 0;  // the empty pattern occurs in everything
    unsigned long long count = 0;
    ContainmentTracker tracker(pattern_word(pat));
    if (cls == AvoiderClass::All) {
        count_all_rec(n, 0, 0, tracker, count);
    } else {
        std::vector<int> forced(static_cast<size_t>(n) + 1, 0);
        count_inv_rec(n, 1, forced, tracker, count);
    }
    return BigInt(static_cast<unsigned long>(count));
}

namespace {

std::vector<BigInt> catalan_upto(long n) {
    std::vector<BigInt> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    for (long i = 0; i < n; ++i) {
        BigInt s = 0;
        for (long j = 0; j <= i; ++j) s += c[static_cast<size_t>(j)] * c[static_cast<size_t>(i - j)];
        c[static_cast<size_t>(i) + 1] = s;
    }
    return c;
}

std::vector<BigInt> motzkin_upto(long n) {
    std::vector<BigInt> m(static_cast<size_t>(n) + 1);
    m[0] = 1;
    for (long i = 1; i <= n; ++i) {
        BigInt s = m[static_cast<size_t>(i) - 1];
        for (long j = 0; j + 2 <= i; ++j)
            s += m[static_cast<size_t>(j)] * m[static_cast<size_t>(i - 2 - j)];
        m[static_cast<size_t>(i)] = s;
    }
    return m;
}

}  // namespace

BigInt closed_form_reference(const std::string& name, long n) {
    require(n >= 0, "closed_form_reference: negative n");
    if (name == "catalan") return catalan_upto(n).back();
    if (name == "motzkin") return motzkin_upto(n).back();
    if (name == "central_binomial") return binomial(n, n / 2);
    if (name == "power2") return n == 0 ? BigInt(1) : pow_int(BigInt(2), static_cast<unsigned long>(n - 1));
    if (name == "catalan_product") {
        auto c = catalan_upto(n / 2 + 2);
        return c[static_cast<size_t>((n + 1) / 2)] * c[static_cast<size_t>(1 + n / 2)];
    }
    throw std::invalid_argument("closed_form_reference: unknown sequence name");
}

GrowthReport growth_report(const Pattern& pat, int N, const AvoiderBounds& bounds) {
    require(N >= 1, "growth_report: N must be >= 1");
    require(N <= bounds.all && N <= bounds.involutions, "growth_report: N above bounds");
    GrowthReport rep;
    rep.pattern = pat;
    rep.note =
        "raw n-th roots; closed forms carry polynomial corrections, so finite-n "
        "roots are biased and no extrapolation is asserted";
    for (int n = 1; n <= N; ++n) {
        GrowthRow row;
        row.n = n;
        row.s_count = count_avoiders(n, pat, AvoiderClass::All, bounds);
        row.i_count = count_avoiders(n, pat, AvoiderClass::Involutions, bounds);
        row.s_root = row.s_count > 0 ? std::exp(log_big(row.s_count) / n) : 0.0;
        row.i_root = row.i_count > 0 ? std::exp(log_big(row.i_count) / n) : 0.0;
        row.ratio = row.s_count > 0 && row.i_count > 0
                        ? std::exp(2 * log_big(row.i_count) - log_big(row.s_count))
                        : 0.0;
        rep.rows.push_back(std::move(row));
    }
    auto root_gap = [](const GrowthRow& r) {
        return r.s_root > 0 ? std::abs(r.i_root * r.i_root / r.s_root - 1.0) : HUGE_VAL;
    };
    if (rep.rows.size() >= 2)
        rep.ratio_trend_toward_one =
            root_gap(rep.rows.back()) < root_gap(rep.rows[rep.rows.size() / 2]);
    return rep;
}

}  // namespace involucomp
