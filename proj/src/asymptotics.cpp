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

#include "involucomp/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "involucomp/egf_stats.hpp"
#include "involucomp/numeric.hpp"

namespace involucomp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SPermutationFamily::SPermutationFamily(std::vector<int> lengths) : S(std::move(lengths)) {
    require(!S.empty(), "SPermutationFamily: S must be nonempty");
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    require(S.front() >= 1, "SPermutationFamily: cycle lengths must be positive");
    m = S.back();
    int g = 0;
    for (int s : S) g = std::gcd(g, s);
    gcd_one = (g == 1);
}

double saddle_radius(const SPermutationFamily& fam, double n) {
    require(n >= 1, "saddle_radius: n must be >= 1");
    auto a = [&](double z) {
        double t = 0;
        for (int s : fam.S) t += std::pow(z, s);
        return t;
    };
    auto da = [&](double z) {
        double t = 0;
        for (int s : fam.S) t += s * std::pow(z, s - 1);
        return t;
    };
    double hi = std::pow(n, 1.0 / fam.m);  // a(hi) >= hi^m = n
    double lo = 0.0;
    double r = hi;
    for (int it = 0; it < 200; ++it) {
        double fr = a(r) - n;
        if (std::abs(fr) <= 1e-13 * n) break;
        if (fr > 0)
            hi = r;
        else
            lo = r;
        double step = fr / da(r);
        double next = r - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection guard
        if (std::abs(next - r) <= 1e-15 * r) {
            r = next;
            break;
        }
        r = next;
    }
    if (!(std::abs(a(r) - n) <= 1e-10 * n))
        throw std::runtime_error("saddle_radius: did not converge");
    return r;
}

double log_hayman_estimate(const SPermutationFamily& fam, long n) {
    require(n >= 1, "log_hayman_estimate: n must be >= 1");
    if (!fam.gcd_one)
        throw std::domain_error("log_hayman_estimate: gcd(S) > 1, not Hayman-admissible");
    double r = saddle_radius(fam, static_cast<double>(n));
    double logf = 0, b = 0;
    for (int s : fam.S) {
        double rs = std::pow(r, s);
        logf += rs / s;
        b += s * rs;
    }
    return logf - static_cast<double>(n) * std::log(r) - 0.5 * std::log(2.0 * M_PI * b);
}

double hayman_estimate(const SPermutationFamily& fam, long n) {
    return std::exp(log_hayman_estimate(fam, n));
}

double log_exact_s_probability(const SPermutationFamily& fam, long n) {
    require(n >= 0, "log_exact_s_probability: negative n");
    std::vector<BigInt> counts = s_permutation_counts(fam.S, static_cast<int>(n));
    const BigInt& c = counts[static_cast<size_t>(n)];
    if (c == 0) return -HUGE_VAL;
    return log_big(c) - log_big(factorial(n));
}

KCycleAsymptotic expected_k_cycle_asymptotic(const SPermutationFamily& fam, int k, long n) {
    require(std::find(fam.S.begin(), fam.S.end(), k) != fam.S.end(),
            "expected_k_cycle_asymptotic: k not in S");
    require(n >= 1, "expected_k_cycle_asymptotic: n must be >= 1");
    double r = saddle_radius(fam, static_cast<double>(n));
    KCycleAsymptotic out;
    out.boltzmann = std::pow(r, k) / k;
    out.leading = std::pow(static_cast<double>(n), static_cast<double>(k) / fam.m) / k;
    return out;
}

AsymptoticEstimates closed_form_estimates(long n) {
    require(n >= 1, "closed_form_estimates: n must be >= 1");
    const double dn = static_cast<double>(n);
    AsymptoticEstimates e;
    e.mean_paths = std::sqrt(dn);
    e.mean_graph_cycles = 0.25 * std::log(dn);
    e.mean_cycles = e.mean_paths + 0.5 * std::log(dn);
    e.mean_cycle_elements = 0.5 * std::sqrt(dn);
    e.acyclic = std::sqrt(2.0) * std::pow(dn, -0.25);
    e.pair_coefficient = std::exp(2.0 * std::sqrt(dn)) / std::sqrt(8.0 * M_PI * M_E * dn);
    e.mean_factorizations = e.pair_coefficient;
    return e;
}

double fpf_element_law(long n, long k) {
    require(n >= 1 && k >= 1, "fpf_element_law: sizes must be positive");
    double ratio = static_cast<double>(k) / static_cast<double>(n);
    require(ratio > 0 && ratio < 0.5, "fpf_element_law: need 0 < k/n < 1/2");
    return 1.0 / std::sqrt(1.0 - 2.0 * ratio);
}

double fpf_length_law(double gamma, double delta) {
    require(gamma >= 0 && gamma <= delta && delta <= 0.5,
            "fpf_length_law: need 0 <= gamma <= delta <= 1/2");
    return std::sqrt(1.0 - 2.0 * gamma) - std::sqrt(1.0 - 2.0 * delta);
}

double log_fpf_elements_in_r_cycles_exact(long n, long r) {
    require(n >= 2 && n % 2 == 0, "log_fpf_elements_in_r_cycles_exact: n must be even");
    require(r >= 2 && r % 2 == 0 && r <= n, "log_fpf_elements_in_r_cycles_exact: r must be even, <= n");
    auto lg = [](double x) { return std::lgamma(x + 1.0); };
    const double half_n = static_cast<double>(n) / 2.0;
    const double half_nr = static_cast<double>(n - r) / 2.0;
    return 2.0 * (lg(half_n) - lg(half_nr)) + static_cast<double>(r) * M_LN2 +
           lg(static_cast<double>(n - r)) - lg(static_cast<double>(n));
}

}  // namespace involucomp
