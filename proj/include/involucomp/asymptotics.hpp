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

#pragma once

#include <vector>

namespace involucomp {

// Family of permutations with all cycle lengths in a finite set S.
struct SPermutationFamily {
    std::vector<int> S;  // sorted, deduplicated, positive
    int m = 0;           // max S
    bool gcd_one = false;

    explicit SPermutationFamily(std::vector<int> lengths);
};

// Positive real root of sum_{s in S} z^s = n (Newton from n^{1/m} with a
// bisection guard; relative tolerance 1e-12).
double saddle_radius(const SPermutationFamily& fam, double n);

// Saddle-point estimate of p_n = P(uniform permutation is an S-permutation):
// f(r_n) / (r_n^n sqrt(2 pi b(r_n))) with f = exp(sum z^s/s), b = sum s z^s.
// Requires gcd(S) = 1 (admissibility); evaluated in log space.
double log_hayman_estimate(const SPermutationFamily& fam, long n);
double hayman_estimate(const SPermutationFamily& fam, long n);

// Exact log p_n via the series engine, for error measurements.
double log_exact_s_probability(const SPermutationFamily& fam, long n);

struct KCycleAsymptotic {
    double boltzmann;  // r_n^k / k
    double leading;    // n^{k/m} / k
};
KCycleAsymptotic expected_k_cycle_asymptotic(const SPermutationFamily& fam, int k, long n);

struct AsymptoticEstimates {
    double mean_cycles;          // sqrt(n) + (1/2) log n
    double mean_paths;           // sqrt(n)
    double mean_graph_cycles;    // (1/4) log n
    double mean_cycle_elements;  // (1/2) sqrt(n)
    double acyclic;              // sqrt(2) n^{-1/4}
    double pair_coefficient;     // e^{2 sqrt n} / sqrt(8 pi e n), estimates b_n
    double mean_factorizations;  // same value as pair_coefficient
};
AsymptoticEstimates closed_form_estimates(long n);

// Limit of the expected number of elements in k-cycles of a composition of
// two fixed-point-free involutions of [n]: (1 - 2k/n)^{-1/2}, 0 < k/n < 1/2.
double fpf_element_law(long n, long k);

// Limit probability that element 1 lies in a cycle of relative length in
// [gamma, delta]: sqrt(1-2 gamma) - sqrt(1-2 delta), 0 <= gamma <= delta <= 1/2.
double fpf_length_law(double gamma, double delta);

// Exact expected number of elements in r-cycles of a superposition of two
// perfect matchings of [n]: (n/2)!^2 / ((n-r)/2)!^2 * 2^r (n-r)!/n!, in log
// space (n, r even).
double log_fpf_elements_in_r_cycles_exact(long n, long r);

}  // namespace involucomp
