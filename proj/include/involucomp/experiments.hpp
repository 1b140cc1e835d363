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
#include <string>
#include <vector>

#include <json.hpp>

namespace involucomp {

struct ToleranceCheck {
    std::string name;
    double observed = 0;
    double bound = 0;
    std::string relation;  // "le" or "ge"
    bool pass = false;
};

// Machine-readable outcome of one Monte-Carlo experiment. Rerunning with
// the same seed and parameters reproduces every statistical field
// bit-identically within one build; only the timing block varies.
struct ExperimentReport {
    std::string name;
    nlohmann::ordered_json parameters;
    uint64_t seed = 0;
    long trials = 0;
    nlohmann::ordered_json empirical;
    nlohmann::ordered_json reference;
    nlohmann::ordered_json distances;
    std::vector<ToleranceCheck> checks;
    double wall_seconds = 0;

    bool all_pass() const;
    nlohmann::ordered_json to_json(bool include_timing = true) const;
    std::string to_csv() const;  // pmf tables, where present
};

// Centering and scaling constants for the factorization lognormal law:
// mean_sum = sum mu_k and var_sum = sum sigma_k^2 over k <= n, against the
// asymptotes (1/2)(log n)^2 and (1/3)(log n)^3.
struct LognormalModel {
    long n = 0;
    double mean_sum = 0;
    double var_sum = 0;
    double ref_mean = 0;
    double ref_var = 0;
};
LognormalModel lognormal_model(long n, double tol = 1e-12);

ExperimentReport run_k_cycle_experiment(long n, long k, long trials, uint64_t seed);
ExperimentReport run_total_cycles_experiment(long n, long trials, uint64_t seed);
ExperimentReport run_fpf_experiment(long two_n, long trials, uint64_t seed);
ExperimentReport run_length_law_experiment(long two_n, double gamma, double delta, long trials,
                                           uint64_t seed);
ExperimentReport run_lognormal_experiment(long n, long trials, uint64_t seed);
ExperimentReport run_fixed_point_component_experiment(long n, long k, long l, long r_max,
                                                      long trials, uint64_t seed);
ExperimentReport run_uniform_factorization_experiment(long n, long trials, uint64_t seed);

}  // namespace involucomp
