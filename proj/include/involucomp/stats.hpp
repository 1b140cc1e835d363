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

#include <functional>
#include <map>
#include <vector>

namespace involucomp {

// Total variation distance (1/2) sum |p - q| over the union of supports.
double total_variation(const std::map<long, double>& p, const std::map<long, double>& q);

// One-sample Kolmogorov-Smirnov statistic of the samples against a
// reference cdf.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

double normal_cdf(double x);

// Regularized upper incomplete gamma Q(a, x) (series below a+1, continued
// fraction above).
double regularized_gamma_q(double a, double x);

// Upper-tail p-value of a chi-square statistic with dof degrees of freedom.
double chi_square_pvalue(double stat, int dof);

// Pearson statistic of observed category counts against expected
// probabilities (expected counts must all be positive).
double chi_square_stat(const std::vector<long>& observed, const std::vector<double>& expected_probs);

struct SummaryStats {
    long n = 0;
    double mean = 0;
    double variance = 0;  // sample variance (denominator n-1)
    double min = 0;
    double max = 0;
};
SummaryStats summarize(const std::vector<double>& xs);

}  // namespace involucomp
