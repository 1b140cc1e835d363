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

#include <map>
#include <utility>
#include <vector>

#include "involucomp/numeric.hpp"
#include "involucomp/series.hpp"

namespace involucomp {

// a_0..a_N, the involution counts, via a_n = a_{n-1} + (n-1) a_{n-2}.
std::vector<BigInt> involution_counts(int N);

// n! [z^n] exp(z/(1-z)) for n = 0..N ("sets of lists"). Uses the D-finite
// recurrence (1-z)^2 y' = y, i.e. Y_{n+1} = (2n+1) Y_n - n(n-1) Y_{n-1}.
std::vector<BigInt> set_of_lists_counts(int N);

// Entry n is n! [z^n] exp(sum_{s in S} z^s / s), computed through the series
// engine. S must be a nonempty set of positive integers.
std::vector<BigInt> s_permutation_counts(const std::vector<int>& S, int N);

// The same count as a sum over cycle types: sum over (c_i >= 0) with
// sum c_i s_i = n of n! / prod(c_i! s_i^{c_i}). Independent route, kept for
// cross-validation.
BigInt cycle_type_sum_count(const std::vector<int>& S, long n);

struct PairCounts {
    std::vector<BigInt> pairs;  // n! [z^n] P(z); equals a_n^2
    std::vector<BigRat> b;      // b_n = [z^n] P(z)
};
// P(z) = exp(z/(1-z)) / sqrt(1-z^2), with the square root computed as
// exp((1/2) log(1/(1-z^2))).
PairCounts involution_pair_counts(int N);

// P(z) through the rational engine, for cross-checks and marker work.
TruncatedSeries pair_series(int N, int marker_cap = 0);

// (paths, cycles) -> number of matching pairs on [n] with that profile.
std::map<std::pair<int, int>, BigInt> path_cycle_table(int n);

// Exact mean number of permutation k-cycles of tau∘sigma over uniform
// involution pairs on [n]. Closed ratio (b_{n-k} + b_{n-2k}/k) / b_n, as
// derived by symbolic u-differentiation of the marking EGF (see
// k_cycle_factorial_moment and the tests that pin it to enumeration).
BigRat exact_mean_k_cycles(long n, long k);

// r-th factorial moment (r = 1 or 2) of the k-cycle count at size n, from
// the marking EGF P(z) exp((u-1) z^k + (u^2-1) z^{2k}/(2k)).
BigRat k_cycle_factorial_moment(long n, long k, int r);

// Same moments evaluated inside the marker series engine (slow, exact);
// the fast ratios above are tested bit-equal against this.
BigRat mean_k_cycles_via_series(int n, int k);
std::pair<BigRat, BigRat> k_cycle_moments_via_series(int n, int k);

BigRat exact_mean_cycles(long n);

struct ComponentMeans {
    BigRat paths;
    BigRat graph_cycles;
    BigRat cycle_elements;
};
ComponentMeans exact_component_means(long n);

BigRat acyclic_probability(long n);

// Distribution of A_k + 2 B_k with A_k ~ Poisson(1), B_k ~ Poisson(1/(2k)).
struct PoissonMixture {
    long k = 1;
    std::vector<double> pmf;  // index j = 0..j_max
    double mean() const;
    double factorial_moment(int r) const;
};
PoissonMixture poisson_mixture(long k, int j_max = 64);

// Cycle count of a composition of two uniform fixed-point-free involutions
// on [2n]: distributed as 2 * sum Bernoulli(1/(2k-1)), k = 1..n.
struct FpfCycleDistribution {
    long n = 0;                  // ground set [2n]
    std::map<long, BigRat> pmf;  // even cycle count -> probability
    BigRat mean() const;
};
FpfCycleDistribution fpf_cycle_count_distribution(long n);

// Expected r-path and r-cycle counts in sigma ∪ tau when sigma has k fixed
// points and tau has l (n-k and n-l even). Cycles require even r.
struct RComponentMeans {
    BigRat paths;
    BigRat cycles;
};
RComponentMeans expected_component_counts(long n, long k, long l, long r);

}  // namespace involucomp
