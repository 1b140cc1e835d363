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

#include <optional>
#include <utility>
#include <vector>

#include "involucomp/numeric.hpp"
#include "involucomp/perm.hpp"

namespace involucomp {

// f(r, k) = sum_j r! / ((r-2j)! j! 2^j) * k^(r-j): the number of partial
// matchings of [r] with k-colored components. f(0, k) = 1.
BigInt f_factor(long r, long k);

// Natural log of f(r, k), exact via big integers for moderate r and by
// log-sum-exp above that.
double log_f_factor(long r, long k);

// Number of factorizations pi = tau ∘ sigma into two involutions, as a
// product of f(c_k, k) over the cycle type. The exact value is materialized
// only while its bit length stays below 10^6; log_value is always present
// (compensated summation of the factor logs).
struct FactorizationCount {
    std::optional<BigInt> value;
    double log_value = 0.0;
};
FactorizationCount count_factorizations(const CycleType& ct);

// Factorizations into two fixed-point-free involutions:
// prod (c_k - 1)!! k^(c_k / 2), and 0 whenever some c_k is odd
// (in particular for odd total size). Convention (-1)!! = 1.
BigInt count_fpf_factorizations(const CycleType& ct);

// Brute-force oracle: iterates all involutions sigma of [n] (via the
// fixed-point/pairing construction), sets tau = pi ∘ sigma and keeps the
// pairs where tau is an involution (both fixed-point-free when requested).
std::vector<std::pair<PartialMatching, PartialMatching>> enumerate_involution_factorizations(
    const Permutation& pi, bool fpf_only = false, int bound = 10);

// Mean and variance of log f(X_k, k) for X_k ~ Poisson(1/k), via the
// convergent series truncated once the tail bound drops below tol.
struct LogFMoments {
    double mean = 0.0;
    double variance = 0.0;
};
LogFMoments log_f_moments(long k, double tol = 1e-12);
double expected_log_f(long k, double tol = 1e-12);
double variance_log_f(long k, double tol = 1e-12);

}  // namespace involucomp
