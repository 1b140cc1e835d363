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

#include <string>
#include <vector>

#include "involucomp/numeric.hpp"
#include "involucomp/perm.hpp"

namespace involucomp {

// A classical pattern is just a permutation.
using Pattern = Permutation;

// True iff some subsequence of pi is order-isomorphic to pat.
bool contains_pattern(const Permutation& pi, const Pattern& pat);

enum class AvoiderClass { All, Involutions };

struct AvoiderBounds {
    int all = 12;
    int involutions = 14;
};

// Exact |S_n(pat)| or |I_n(pat)| by prefix-pruned backtracking with
// incremental containment tracking; involutions are generated through the
// left-to-right matching construction.
BigInt count_avoiders(int n, const Pattern& pat, AvoiderClass cls,
                      const AvoiderBounds& bounds = {});

// Reference sequences for the known closed forms:
// catalan, motzkin, central_binomial C(n, floor(n/2)), power2 2^{n-1},
// catalan_product C_{ceil(n/2)} C_{1+floor(n/2)}.
BigInt closed_form_reference(const std::string& name, long n);

struct GrowthRow {
    int n = 0;
    BigInt s_count;
    BigInt i_count;
    double s_root = 0;  // s_count^{1/n}
    double i_root = 0;  // i_count^{1/n}
    double ratio = 0;   // i_count^2 / s_count
};

struct GrowthReport {
    Pattern pattern;
    std::vector<GrowthRow> rows;
    bool ratio_trend_toward_one = false;  // i_root^2/s_root moved toward 1 over the table
    std::string note;
};

GrowthReport growth_report(const Pattern& pat, int N, const AvoiderBounds& bounds = {});

}  // namespace involucomp
