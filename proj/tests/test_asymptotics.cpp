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

#include <doctest.h>

#include <cmath>

#include "involucomp/asymptotics.hpp"
#include "involucomp/egf_stats.hpp"
#include "involucomp/numeric.hpp"

using namespace involucomp;

TEST_CASE("family normalization and admissibility flag") {
    SPermutationFamily f({3, 1, 2, 2});
    CHECK(f.S == std::vector<int>{1, 2, 3});
    CHECK(f.m == 3);
    CHECK(f.gcd_one);
    SPermutationFamily even({2, 4});
    CHECK_FALSE(even.gcd_one);
    CHECK_THROWS_AS(log_hayman_estimate(even, 10), std::domain_error);
    CHECK_THROWS_AS(SPermutationFamily({}), std::invalid_argument);
    CHECK_THROWS_AS(SPermutationFamily({0, 2}), std::invalid_argument);
}

TEST_CASE("saddle radius closed forms") {
    SPermutationFamily f12({1, 2});
    CHECK(saddle_radius(f12, 6.0) == doctest::Approx(2.0).epsilon(1e-12));
    for (double n : {1.0, 17.0, 444.0, 1e6}) {
        double expect = (-1.0 + std::sqrt(1.0 + 4.0 * n)) / 2.0;
        CHECK(saddle_radius(f12, n) == doctest::Approx(expect).epsilon(1e-11));
    }
    // S = {1,2,3}: r_n = n^{1/3} - 1/3 - (2/9) n^{-1/3} + (7/81) n^{-2/3} + O(1/n).
    SPermutationFamily f123({1, 2, 3});
    for (double n : {1e4, 1e6, 1e8}) {
        double c = std::cbrt(n);
        double series = c - 1.0 / 3.0 - (2.0 / 9.0) / c + (7.0 / 81.0) / (c * c);
        CHECK(std::fabs(saddle_radius(f123, n) - series) < 3.0 / n);
    }
    // Root property.
    SPermutationFamily f({2, 5, 9});
    double r = saddle_radius(f, 1234.0);
    double val = std::pow(r, 2) + std::pow(r, 5) + std::pow(r, 9);
    CHECK(val == doctest::Approx(1234.0).epsilon(1e-10));
}

TEST_CASE("hayman estimate accuracy against exact counts") {
    SPermutationFamily f12({1, 2});
    // n = 4: estimate vs exact 10/24 within 5%.
    CHECK(hayman_estimate(f12, 4) == doctest::Approx(10.0 / 24.0).epsilon(0.05));
    // Relative error decreasing and < 1% at n = 500.
    double prev = HUGE_VAL;
    for (long n : {50L, 100L, 200L, 400L, 800L}) {
        double rel = std::fabs(std::exp(log_hayman_estimate(f12, n) -
                                        log_exact_s_probability(f12, n)) - 1.0);
        CHECK(rel < prev);
        prev = rel;
    }
    CHECK(std::fabs(std::exp(log_hayman_estimate(f12, 500) -
                             log_exact_s_probability(f12, 500)) - 1.0) < 0.01);

    SPermutationFamily f123({1, 2, 3});
    prev = HUGE_VAL;
    for (long n : {50L, 100L, 200L, 400L, 800L}) {
        double rel = std::fabs(std::exp(log_hayman_estimate(f123, n) -
                                        log_exact_s_probability(f123, n)) - 1.0);
        CHECK(rel < prev);
        prev = rel;
    }
}

TEST_CASE("hayman estimate matches the printed {1,2,3} display at n = 300") {
    // p_n n!^{1/3} ~ (e^5 2^6 3^9 pi^6)^{-1/18} n^{-1/3} exp(n^{2/3}/2 + 5 n^{1/3}/6).
    SPermutationFamily f123({1, 2, 3});
    const long n = 300;
    const double dn = static_cast<double>(n);
    double log_display = -(5.0 + 6.0 * std::log(2.0) + 9.0 * std::log(3.0) +
                           6.0 * std::log(M_PI)) / 18.0 -
                         std::log(dn) / 3.0 + 0.5 * std::pow(dn, 2.0 / 3.0) +
                         (5.0 / 6.0) * std::cbrt(dn);
    double log_lhs = log_hayman_estimate(f123, n) + std::lgamma(dn + 1.0) / 3.0;
    CHECK(std::exp(log_lhs - log_display) == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("expected k-cycle asymptotics") {
    SPermutationFamily f12({1, 2});
    KCycleAsymptotic one = expected_k_cycle_asymptotic(f12, 1, 10000);
    CHECK(one.leading == doctest::Approx(100.0).epsilon(1e-12));
    double r = saddle_radius(f12, 10000.0);
    CHECK(one.boltzmann == doctest::Approx(r).epsilon(1e-12));
    KCycleAsymptotic two = expected_k_cycle_asymptotic(f12, 2, 10000);
    CHECK(two.leading == doctest::Approx(5000.0).epsilon(1e-12));
    CHECK(two.boltzmann == doctest::Approx(r * r / 2.0).epsilon(1e-12));
    CHECK_THROWS_AS(expected_k_cycle_asymptotic(f12, 3, 100), std::invalid_argument);
    // k = m: leading term n/m.
    SPermutationFamily f123({1, 2, 3});
    CHECK(expected_k_cycle_asymptotic(f123, 3, 9000).leading ==
          doctest::Approx(3000.0).epsilon(1e-12));
}

TEST_CASE("closed-form estimates against the exact engine") {
    AsymptoticEstimates e100 = closed_form_estimates(100);
    std::vector<BigInt> a = involution_counts(100);
    double b100 = to_double(BigRat(a[100] * a[100], factorial(100)));
    CHECK(e100.pair_coefficient == doctest::Approx(b100).epsilon(0.10));
    CHECK(e100.mean_factorizations == e100.pair_coefficient);

    AsymptoticEstimates e2000 = closed_form_estimates(2000);
    double acyclic_exact = to_double(acyclic_probability(2000));
    CHECK(e2000.acyclic == doctest::Approx(acyclic_exact).epsilon(0.10));
    CHECK(acyclic_exact * std::pow(2000.0, 0.25) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(0.10));

    // Scaling identity of the cycle-elements estimate: doubling sqrt(n).
    for (long n : {25L, 400L}) {
        CHECK(closed_form_estimates(4 * n).mean_cycle_elements ==
              doctest::Approx(2.0 * closed_form_estimates(n).mean_cycle_elements).epsilon(1e-12));
        CHECK(closed_form_estimates(n).mean_cycle_elements ==
              doctest::Approx(0.5 * std::sqrt(static_cast<double>(n))).epsilon(1e-12));
    }
    CHECK(closed_form_estimates(100).mean_cycles ==
          doctest::Approx(10.0 + 0.5 * std::log(100.0)).epsilon(1e-12));
    CHECK_THROWS_AS(closed_form_estimates(0), std::invalid_argument);
}

TEST_CASE("mean cycle count stabilizes around sqrt(n) + log(n)/2") {
    double mn = HUGE_VAL, mx = -HUGE_VAL;
    for (long n = 500; n <= 2000; n += 300) {
        double d = to_double(exact_mean_cycles(n)) - std::sqrt(static_cast<double>(n)) -
                   0.5 * std::log(static_cast<double>(n));
        mn = std::min(mn, d);
        mx = std::max(mx, d);
    }
    CHECK(mx - mn < 0.5);
}

TEST_CASE("quarter-log growth of graph cycle means") {
    double g4 = to_double(exact_component_means(2000).graph_cycles);
    double g1 = to_double(exact_component_means(500).graph_cycles);
    CHECK(g4 - g1 == doctest::Approx(0.25 * std::log(4.0)).epsilon(0.05));
}

TEST_CASE("fpf element and length laws") {
    CHECK(fpf_element_law(8, 3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(fpf_element_law(8, 4), std::invalid_argument);
    CHECK_THROWS_AS(fpf_element_law(8, 0), std::invalid_argument);
    CHECK(fpf_length_law(0.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fpf_length_law(0.125, 0.375) ==
          doctest::Approx(std::sqrt(0.75) - std::sqrt(0.25)).epsilon(1e-12));
    CHECK(fpf_length_law(0.2, 0.2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(fpf_length_law(0.4, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(fpf_length_law(-0.1, 0.2), std::invalid_argument);
}

TEST_CASE("exact fpf elements-in-cycles matches 1/sqrt(1-alpha)") {
    const long n = 2000;
    for (double alpha : {0.2, 0.5, 0.8}) {
        long r = static_cast<long>(alpha * n);
        if (r % 2 != 0) ++r;
        double val = std::exp(log_fpf_elements_in_r_cycles_exact(n, r));
        CHECK(val == doctest::Approx(1.0 / std::sqrt(1.0 - alpha)).epsilon(0.05));
    }
    CHECK_THROWS_AS(log_fpf_elements_in_r_cycles_exact(7, 2), std::invalid_argument);
    CHECK_THROWS_AS(log_fpf_elements_in_r_cycles_exact(8, 3), std::invalid_argument);
}
