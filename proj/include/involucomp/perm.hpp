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
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace involucomp {

// A bijection on {1..n}, stored as an image sequence. Labels are 1-based
// throughout; n = 0 gives the empty permutation. Immutable after
// construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);  // validates bijection

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int apply(int i) const { return image_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& image() const { return image_; }

    bool is_involution() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

// An involution viewed as a partial matching: each element has at most one
// partner and partner(partner(i)) = i. Elements without a partner are fixed
// points.
class PartialMatching {
public:
    PartialMatching() = default;
    explicit PartialMatching(int n);  // all elements fixed
    PartialMatching(int n, const std::vector<std::pair<int, int>>& pairs);

    static PartialMatching from_permutation(const Permutation& pi);

    int size() const { return static_cast<int>(partner_.size()); }
    // 0 when i is a fixed point.
    int partner_or_zero(int i) const { return partner_[static_cast<size_t>(i) - 1]; }
    bool is_fixed(int i) const { return partner_or_zero(i) == 0; }
    int fixed_point_count() const;

    Permutation to_permutation() const;
    // Pairs (i, j) with i < j, sorted by i.
    std::vector<std::pair<int, int>> pairs() const;

    friend bool operator==(const PartialMatching&, const PartialMatching&) = default;

private:
    std::vector<int> partner_;
};

// Multiset of cycle lengths, stored as length -> multiplicity.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::map<long, long> counts);  // validates positivity

    static CycleType of(const Permutation& pi);

    const std::map<long, long>& counts() const { return counts_; }
    long total() const;          // sum of k * c_k
    long count_of(long k) const; // 0 when absent

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    std::map<long, long> counts_;
};

CycleType cycle_type(const Permutation& pi);

enum class EdgeColor { Solid, Dotted };  // Solid edges come from sigma, dotted from tau.

struct SuperComponent {
    enum class Kind { Path, Cycle };

    Kind kind = Kind::Path;
    std::vector<int> vertices;      // canonical order, see superpose()
    std::vector<EdgeColor> colors;  // one per edge; cycles include the closing edge

    int length() const { return static_cast<int>(vertices.size()); }
};

// The 2-edge-colored graph sigma ∪ tau, decomposed into alternating paths
// and even alternating cycles. Canonical component order: by smallest
// vertex. Paths start at their smaller endpoint; cycles start at their
// smallest vertex and leave it along its solid edge.
class Superposition {
public:
    Superposition() = default;
    Superposition(int n, std::vector<SuperComponent> components);  // validates invariants

    int size() const { return n_; }
    const std::vector<SuperComponent>& components() const { return components_; }

private:
    int n_ = 0;
    std::vector<SuperComponent> components_;
};

// Composition with sigma applied first: result(i) = tau(sigma(i)).
Permutation compose(const Permutation& tau, const Permutation& sigma);
Permutation compose(const PartialMatching& tau, const PartialMatching& sigma);
Permutation compose(const PartialMatching& tau, const Permutation& sigma);
Permutation compose(const Permutation& tau, const PartialMatching& sigma);

Permutation invert(const Permutation& pi);

Superposition superpose(const PartialMatching& sigma, const PartialMatching& tau);

// Every path of length k contributes one k-cycle, every cycle of length 2k
// two k-cycles; equals cycle_type(compose(tau, sigma)).
CycleType induced_cycle_type(const Superposition& sp);

// Text formats: cycle notation "(1 2 3 4)(5)" and one-line images "2 3 4 1".
std::string to_cycle_string(const Permutation& pi);
std::string to_image_string(const Permutation& pi);
// Labels not mentioned in the text are fixed points; n defaults to the
// largest label seen.
Permutation parse_cycles(const std::string& text, int n = -1);
Permutation parse_image(const std::string& text);

}  // namespace involucomp
