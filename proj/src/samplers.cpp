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

#include "involucomp/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "involucomp/asymptotics.hpp"
#include "involucomp/egf_stats.hpp"
#include "involucomp/numeric.hpp"

namespace involucomp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

uint64_t splitmix64(uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

SeededStream::SeededStream(uint64_t seed, uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
    uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1));
    for (auto& w : s_) w = splitmix64(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

uint64_t SeededStream::next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double SeededStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t SeededStream::uniform_below(uint64_t n) {
    require(n > 0, "uniform_below: empty range");
    // Rejection above the largest multiple of n.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double SeededStream::exponential() { return -std::log1p(-next_double()); }

long SeededStream::poisson(double mean) {
    require(mean >= 0, "poisson: negative mean");
    if (mean == 0) return 0;
    if (mean <= 30.0) {
        // Inversion by sequential search.
        double p = std::exp(-mean);
        double c = p;
        double u = next_double();
        long k = 0;
        while (u > c) {
            ++k;
            p *= mean / static_cast<double>(k);
            c += p;
            if (k > 2000) break;  // floating tail guard
        }
        return k;
    }
    // Hormann's PTRS transformed-rejection sampler.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    while (true) {
        double u = next_double() - 0.5;
        double v = next_double();
        double us = 0.5 - std::abs(u);
        double kd = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long>(kd);
        if (kd < 0 || (us < 0.013 && v > us)) continue;
        double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        double rhs = kd * log_mean - mean - std::lgamma(kd + 1.0);
        if (lhs <= rhs) return static_cast<long>(kd);
    }
}

namespace {

// Cached a_{j-1}/a_j ratios for the involution sampler: exact big-integer
// quotients below j = 64, then the contracting ratio recurrence
// r_j = 1/(1 + (j-1) r_{j-1}) in double, which keeps the rounding bias
// below 1e-15.
std::shared_ptr<const std::vector<double>> involution_fix_ratios(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const std::vector<double>>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.lower_bound(n);
    if (it != cache.end()) return it->second;
    const int exact_cut = std::min(n, 64);
    std::vector<BigInt> a = involution_counts(exact_cut);
    auto ratios = std::make_shared<std::vector<double>>(static_cast<size_t>(n) + 1, 1.0);
    for (int j = 1; j <= exact_cut; ++j) {
        BigRat r(a[static_cast<size_t>(j) - 1], a[static_cast<size_t>(j)]);
        r.canonicalize();
        (*ratios)[static_cast<size_t>(j)] = r.get_d();
    }
    for (int j = exact_cut + 1; j <= n; ++j)
        (*ratios)[static_cast<size_t>(j)] =
            1.0 / (1.0 + (j - 1) * (*ratios)[static_cast<size_t>(j) - 1]);
    cache[n] = ratios;
    return ratios;
}

// Harmonic prefix H_0..H_n in double, for the Poisson(1/k) skip sampler.
std::shared_ptr<const std::vector<double>> harmonic_prefix(long n) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const std::vector<double>>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.lower_bound(n);
    if (it != cache.end()) return it->second;
    auto h = std::make_shared<std::vector<double>>(static_cast<size_t>(n) + 1, 0.0);
    KahanSum s;
    for (long j = 1; j <= n; ++j) {
        s.add(1.0 / static_cast<double>(j));
        (*h)[static_cast<size_t>(j)] = s.total();
    }
    cache[n] = h;
    return h;
}

}  // namespace

PartialMatching sample_involution(int n, SeededStream& stream) {
    require(n >= 0, "sample_involution: negative n");
    auto ratios = involution_fix_ratios(n);
    std::vector<int> active(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) active[static_cast<size_t>(i) - 1] = i;
    std::vector<std::pair<int, int>> pairs;
    while (!active.empty()) {
        const size_t j = active.size();
        int pivot = active.back();
        active.pop_back();
        if (stream.next_double() < (*ratios)[j]) continue;  // pivot stays fixed
        size_t idx = static_cast<size_t>(stream.uniform_below(j - 1));
        pairs.emplace_back(active[idx], pivot);
        active[idx] = active.back();
        active.pop_back();
    }
    return PartialMatching(n, pairs);
}

PartialMatching sample_fpf_involution(int n, SeededStream& stream) {
    require(n >= 0, "sample_fpf_involution: negative n");
    require(n % 2 == 0, "sample_fpf_involution: n must be even");
    std::vector<int> active(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) active[static_cast<size_t>(i) - 1] = i;
    std::vector<std::pair<int, int>> pairs;
    while (!active.empty()) {
        int pivot = active.back();
        active.pop_back();
        size_t idx = static_cast<size_t>(stream.uniform_below(active.size()));
        pairs.emplace_back(active[idx], pivot);
        active[idx] = active.back();
        active.pop_back();
    }
    return PartialMatching(n, pairs);
}

PartialMatching sample_involution_with_fixed_points(int n, int k, SeededStream& stream) {
    require(n >= 0 && k >= 0 && k <= n, "sample_involution_with_fixed_points: k out of range");
    require((n - k) % 2 == 0, "sample_involution_with_fixed_points: n-k must be even");
    // Uniform k-subset of fixed points via a partial shuffle; the rest is a
    // uniform perfect matching.
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) pool[static_cast<size_t>(i) - 1] = i;
    for (int i = 0; i < k; ++i) {
        size_t j = static_cast<size_t>(i) +
                   static_cast<size_t>(stream.uniform_below(static_cast<uint64_t>(n - i)));
        std::swap(pool[static_cast<size_t>(i)], pool[j]);
    }
    std::vector<int> rest(pool.begin() + k, pool.end());
    std::vector<std::pair<int, int>> pairs;
    while (!rest.empty()) {
        int pivot = rest.back();
        rest.pop_back();
        size_t idx = static_cast<size_t>(stream.uniform_below(rest.size()));
        pairs.emplace_back(rest[idx], pivot);
        rest[idx] = rest.back();
        rest.pop_back();
    }
    return PartialMatching(n, pairs);
}

Permutation sample_boltzmann_s_permutation(const std::vector<int>& S, long target_n,
                                           SeededStream& stream) {
    require(target_n >= 1, "sample_boltzmann_s_permutation: target size must be >= 1");
    SPermutationFamily fam(S);
    const double x = saddle_radius(fam, static_cast<double>(target_n));
    std::vector<std::pair<int, long>> cycles;  // (length, count)
    long m = 0;
    for (int k : fam.S) {
        long c = stream.poisson(std::pow(x, k) / k);
        if (c > 0) {
            cycles.emplace_back(k, c);
            m += static_cast<long>(k) * c;
        }
    }
    Permutation labels = sample_uniform_permutation(static_cast<int>(m), stream);
    std::vector<int> img(static_cast<size_t>(m));
    long pos = 0;
    for (auto [k, c] : cycles) {
        for (long i = 0; i < c; ++i) {
            for (int j = 0; j < k; ++j) {
                int from = labels.apply(static_cast<int>(pos) + j + 1);
                int to = labels.apply(static_cast<int>(pos) + (j + 1) % k + 1);
                img[static_cast<size_t>(from) - 1] = to;
            }
            pos += k;
        }
    }
    return Permutation(std::move(img));
}

CycleType sample_pstar_cycle_type(long n, SeededStream& stream) {
    require(n >= 1, "sample_pstar_cycle_type: n must be >= 1");
    // Occupied lengths k (those with X_k >= 1) are visited by skip sampling:
    // P(no occupied index in (cur, j]) = exp(-(H_j - H_cur)), so the next
    // occupied index is the first j with H_j - H_cur >= Exp(1). At an
    // occupied k, X_k is Poisson(1/k) conditioned to be positive.
    auto h = harmonic_prefix(n);
    std::map<long, long> counts;
    long cur = 0;
    while (true) {
        double target = (*h)[static_cast<size_t>(cur)] + stream.exponential();
        if (target > (*h)[static_cast<size_t>(n)]) break;
        auto it = std::lower_bound(h->begin() + cur + 1, h->begin() + n + 1, target);
        long k = it - h->begin();
        const double lam = 1.0 / static_cast<double>(k);
        double u = stream.next_double() * std::expm1(lam);
        double term = lam;
        double cum = term;
        long r = 1;
        while (u > cum) {
            ++r;
            term *= lam / static_cast<double>(r);
            cum += term;
            if (r > 500) break;  // floating tail guard
        }
        counts[k] = r;
        cur = k;
    }
    return CycleType(std::move(counts));
}

Permutation sample_uniform_permutation(int n, SeededStream& stream) {
    require(n >= 0, "sample_uniform_permutation: negative n");
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i) - 1] = i;
    for (int i = n - 1; i > 0; --i) {
        size_t j = static_cast<size_t>(stream.uniform_below(static_cast<uint64_t>(i) + 1));
        std::swap(img[static_cast<size_t>(i)], img[j]);
    }
    return Permutation(std::move(img));
}

}  // namespace involucomp
