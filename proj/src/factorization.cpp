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

#include "involucomp/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace involucomp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BigInt f_factor(long r, long k) {
    require(r >= 0, "f_factor: r must be nonnegative");
    require(k >= 1, "f_factor: k must be positive");
    // m_j = r! / ((r-2j)! j! 2^j), stepped by m_{j+1} = m_j (r-2j)(r-2j-1) / (2(j+1)).
    BigInt m = 1;
    BigInt kp = pow_int(BigInt(k), static_cast<unsigned long>(r));
    BigInt total = 0;
    for (long j = 0; 2 * j <= r; ++j) {
        if (j > 0) {
            m = exact_div(m * BigInt(r - 2 * j + 2) * BigInt(r - 2 * j + 1), BigInt(2 * j));
            kp = exact_div(kp, BigInt(k));
        }
        total += m * kp;
    }
    return total;
}

double log_f_factor(long r, long k) {
    require(r >= 0, "log_f_factor: r must be nonnegative");
    require(k >= 1, "log_f_factor: k must be positive");
    if (r == 0) return 0.0;
    if (r <= 256) return log_big(f_factor(r, k));
    // log-sum-exp over the j-terms.
    const double lk = std::log(static_cast<double>(k));
    const double lgr = std::lgamma(static_cast<double>(r) + 1.0);
    double best = -HUGE_VAL;
    std::vector<double> lts;
    lts.reserve(static_cast<size_t>(r / 2) + 1);
    for (long j = 0; 2 * j <= r; ++j) {
        double lt = lgr - std::lgamma(static_cast<double>(r - 2 * j) + 1.0) -
                    std::lgamma(static_cast<double>(j) + 1.0) - static_cast<double>(j) * M_LN2 +
                    static_cast<double>(r - j) * lk;
        lts.push_back(lt);
        best = std::max(best, lt);
    }
    KahanSum s;
    for (double lt : lts) s.add(std::exp(lt - best));
    return best + std::log(s.total());
}

FactorizationCount count_factorizations(const CycleType& ct) {
    FactorizationCount out;
    KahanSum ls;
    for (const auto& [k, c] : ct.counts()) ls.add(log_f_factor(c, k));
    out.log_value = ls.total();
    if (out.log_value / M_LN2 < 1e6) {
        BigInt v = 1;
        for (const auto& [k, c] : ct.counts()) v *= f_factor(c, k);
        out.value = std::move(v);
    }
    return out;
}

BigInt count_fpf_factorizations(const CycleType& ct) {
    BigInt v = 1;
    for (const auto& [k, c] : ct.counts()) {
        if (c % 2 != 0) return 0;
        v *= double_factorial(c - 1) * pow_int(BigInt(k), static_cast<unsigned long>(c / 2));
    }
    return v;
}

namespace {

// Recursively assigns the smallest unassigned element: fixed, or paired with
// each larger unassigned element.
void for_each_involution(int n, bool fpf_only, std::vector<int>& partner,
                         std::vector<char>& taken, int from,
                         const std::function<void(const std::vector<int>&)>& fn) {
    int i = from;
    while (i <= n && taken[static_cast<size_t>(i) - 1]) ++i;
    if (i > n) {
        fn(partner);
        return;
    }
    taken[static_cast<size_t>(i) - 1] = 1;
    if (!fpf_only) {
        partner[static_cast<size_t>(i) - 1] = 0;
        for_each_involution(n, fpf_only, partner, taken, i + 1, fn);
    }
    for (int j = i + 1; j <= n; ++j) {
        if (taken[static_cast<size_t>(j) - 1]) continue;
        taken[static_cast<size_t>(j) - 1] = 1;
        partner[static_cast<size_t>(i) - 1] = j;
        partner[static_cast<size_t>(j) - 1] = i;
        for_each_involution(n, fpf_only, partner, taken, i + 1, fn);
        partner[static_cast<size_t>(j) - 1] = 0;
        taken[static_cast<size_t>(j) - 1] = 0;
    }
    partner[static_cast<size_t>(i) - 1] = 0;
    taken[static_cast<size_t>(i) - 1] = 0;
}

}  // namespace

std::vector<std::pair<PartialMatching, PartialMatching>> enumerate_involution_factorizations(
    const Permutation& pi, bool fpf_only, int bound) {
    const int n = pi.size();
    require(n <= bound, "enumerate_involution_factorizations: n above the oracle bound");
    std::vector<std::pair<PartialMatching, PartialMatching>> result;
    std::vector<int> partner(static_cast<size_t>(n), 0);
    std::vector<char> taken(static_cast<size_t>(n), 0);
    std::vector<int> tau_img(static_cast<size_t>(n), 0);
    for_each_involution(n, fpf_only, partner, taken, 1, [&](const std::vector<int>& p) {
        // tau = pi ∘ sigma (sigma is self-inverse).
        for (int i = 1; i <= n; ++i) {
            int s = p[static_cast<size_t>(i) - 1];
            if (s == 0) s = i;
            tau_img[static_cast<size_t>(i) - 1] = pi.apply(s);
        }
        for (int i = 1; i <= n; ++i) {
            int t = tau_img[static_cast<size_t>(i) - 1];
            if (tau_img[static_cast<size_t>(t) - 1] != i) return;  // tau not an involution
            if (fpf_only && t == i) return;
        }
        std::vector<std::pair<int, int>> sp, tp;
        for (int i = 1; i <= n; ++i) {
            if (p[static_cast<size_t>(i) - 1] > i) sp.emplace_back(i, p[static_cast<size_t>(i) - 1]);
            if (tau_img[static_cast<size_t>(i) - 1] > i) tp.emplace_back(i, tau_img[static_cast<size_t>(i) - 1]);
        }
        result.emplace_back(PartialMatching(n, sp), PartialMatching(n, tp));
    });
    return result;
}

LogFMoments log_f_moments(long k, double tol) {
    require(k >= 1, "log_f_moments: k must be positive");
    require(tol > 0, "log_f_moments: tol must be positive");
    // E g(X) = e^{-1/k} sum_{r>=1} g(r) / (r! k^r) for g = log f and (log f)^2.
    // Tail bound from log f(r, k) <= r log(rk): ratios drop below 1/2 once
    // r >= 4, so two successive bounding terms dominate the remainder.
    const double lk = std::log(static_cast<double>(k));
    const double pref = std::exp(-1.0 / static_cast<double>(k));
    KahanSum s1, s2;
    double log_w = -lk;  // log of 1/(r! k^r) at r = 1
    for (long r = 1;; ++r) {
        if (r > 1) log_w -= std::log(static_cast<double>(r)) + lk;
        double lf = log_f_factor(r, k);
        double w = std::exp(log_w);
        s1.add(w * lf);
        s2.add(w * lf * lf);
        if (r >= 4) {
            double g = static_cast<double>(r + 1) *
                       std::log(static_cast<double>(r + 1) * static_cast<double>(k));
            double tail = 2.0 * std::exp(log_w - std::log(static_cast<double>(r + 1)) - lk) *
                          std::max(g, g * g);
            if (tail < tol) break;
        }
    }
    LogFMoments m;
    m.mean = pref * s1.total();
    m.variance = pref * s2.total() - m.mean * m.mean;
    return m;
}

double expected_log_f(long k, double tol) { return log_f_moments(k, tol).mean; }

double variance_log_f(long k, double tol) { return log_f_moments(k, tol).variance; }

}  // namespace involucomp
