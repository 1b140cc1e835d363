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

#include <cstdint>
#include <vector>

#include "involucomp/perm.hpp"

namespace involucomp {

// Deterministic random stream: xoshiro256** seeded from (seed, stream_id)
// through splitmix64. Identical (seed, stream_id) reproduces identical
// draws within one build; distinct stream ids give statistically
// independent streams.
class SeededStream {
public:
    SeededStream(uint64_t seed, uint64_t stream_id);

    uint64_t seed() const { return seed_; }
    uint64_t stream_id() const { return stream_id_; }

    uint64_t next_u64();
    double next_double();                   // uniform on [0, 1), 53 bits
    uint64_t uniform_below(uint64_t n);     // uniform on {0..n-1}, unbiased
    double exponential();                   // mean 1
    long poisson(double mean);              // inversion for mean <= 30, PTRS above

private:
    uint64_t seed_, stream_id_;
    uint64_t s_[4];
};

// Uniform over the a_n involutions of [n]: each step fixes an element with
// probability a_{j-1}/a_j (j elements remaining) or pairs it uniformly.
PartialMatching sample_involution(int n, SeededStream& stream);

// Uniform over the (n-1)!! perfect matchings of [n]; n must be even.
PartialMatching sample_fpf_involution(int n, SeededStream& stream);

// Uniform over involutions of [n] with exactly k fixed points (n-k even).
PartialMatching sample_involution_with_fixed_points(int n, int k, SeededStream& stream);

// Boltzmann sampler for S-permutations tuned to expected size target_n:
// Poisson(x^k/k) cycles of each length k in S at x = saddle_radius, labels
// arranged uniformly. Conditioned on its size, the output is uniform.
Permutation sample_boltzmann_s_permutation(const std::vector<int>& S, long target_n,
                                           SeededStream& stream);

// Cycle type with independent Poisson(1/k) multiplicities for k = 1..n.
CycleType sample_pstar_cycle_type(long n, SeededStream& stream);

// Fisher-Yates.
Permutation sample_uniform_permutation(int n, SeededStream& stream);

}  // namespace involucomp
