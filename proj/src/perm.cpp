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

#include "involucomp/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace involucomp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : image_) {
        require(v >= 1 && v <= n, "Permutation: image value out of range");
        require(!seen[static_cast<size_t>(v) - 1], "Permutation: image value repeated");
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i) - 1] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_involution() const {
    const int n = size();
    for (int i = 1; i <= n; ++i)
        if (apply(apply(i)) != i) return false;
    return true;
}

PartialMatching::PartialMatching(int n) : partner_(static_cast<size_t>(n), 0) {
    require(n >= 0, "PartialMatching: negative size");
}

PartialMatching::PartialMatching(int n, const std::vector<std::pair<int, int>>& pairs)
    : partner_(static_cast<size_t>(n), 0) {
    require(n >= 0, "PartialMatching: negative size");
    for (auto [i, j] : pairs) {
        require(i >= 1 && i <= n && j >= 1 && j <= n, "PartialMatching: label out of range");
        require(i != j, "PartialMatching: element paired with itself");
        require(partner_[static_cast<size_t>(i) - 1] == 0 && partner_[static_cast<size_t>(j) - 1] == 0,
                "PartialMatching: element paired twice");
        partner_[static_cast<size_t>(i) - 1] = j;
        partner_[static_cast<size_t>(j) - 1] = i;
    }
}

PartialMatching PartialMatching::from_permutation(const Permutation& pi) {
    require(pi.is_involution(), "PartialMatching: permutation is not an involution");
    PartialMatching m(pi.size());
    for (int i = 1; i <= pi.size(); ++i) {
        int j = pi.apply(i);
        if (j != i) m.partner_[static_cast<size_t>(i) - 1] = j;
    }
    return m;
}

int PartialMatching::fixed_point_count() const {
    int c = 0;
    for (int p : partner_) c += (p == 0);
    return c;
}

Permutation PartialMatching::to_permutation() const {
    std::vector<int> img(partner_.size());
    for (size_t i = 0; i < partner_.size(); ++i)
        img[i] = partner_[i] == 0 ? static_cast<int>(i) + 1 : partner_[i];
    return Permutation(std::move(img));
}

std::vector<std::pair<int, int>> PartialMatching::pairs() const {
    std::vector<std::pair<int, int>> ps;
    for (size_t i = 0; i < partner_.size(); ++i) {
        int a = static_cast<int>(i) + 1;
        int b = partner_[i];
        if (b > a) ps.emplace_back(a, b);
    }
    return ps;
}

CycleType::CycleType(std::map<long, long> counts) : counts_(std::move(counts)) {
    for (auto [k, c] : counts_) {
        require(k >= 1, "CycleType: cycle length must be positive");
        require(c >= 1, "CycleType: multiplicity must be positive");
    }
}

CycleType CycleType::of(const Permutation& pi) {
    const int n = pi.size();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::map<long, long> counts;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        long len = 0;
        int j = i;
        do {
            seen[static_cast<size_t>(j) - 1] = 1;
            j = pi.apply(j);
            ++len;
        } while (j != i);
        ++counts[len];
    }
    CycleType ct;
    ct.counts_ = std::move(counts);
    return ct;
}

long CycleType::total() const {
    long t = 0;
    for (auto [k, c] : counts_) t += k * c;
    return t;
}

long CycleType::count_of(long k) const {
    auto it = counts_.find(k);
    return it == counts_.end() ? 0 : it->second;
}

CycleType cycle_type(const Permutation& pi) { return CycleType::of(pi); }

Superposition::Superposition(int n, std::vector<SuperComponent> components)
    : n_(n), components_(std::move(components)) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (const auto& comp : components_) {
        const int len = comp.length();
        require(len >= 1, "Superposition: empty component");
        for (int v : comp.vertices) {
            require(v >= 1 && v <= n, "Superposition: vertex out of range");
            require(!seen[static_cast<size_t>(v) - 1], "Superposition: vertex repeated");
            seen[static_cast<size_t>(v) - 1] = 1;
        }
        if (comp.kind == SuperComponent::Kind::Path) {
            require(static_cast<int>(comp.colors.size()) == len - 1,
                    "Superposition: path edge count mismatch");
        } else {
            require(len >= 2 && len % 2 == 0, "Superposition: cycle length must be even >= 2");
            require(static_cast<int>(comp.colors.size()) == len,
                    "Superposition: cycle edge count mismatch");
        }
        for (size_t e = 1; e < comp.colors.size(); ++e)
            require(comp.colors[e] != comp.colors[e - 1], "Superposition: edge colors must alternate");
        if (comp.kind == SuperComponent::Kind::Cycle)
            require(comp.colors.back() != comp.colors.front(),
                    "Superposition: cycle closing edge must alternate");
    }
    for (char s : seen) require(s, "Superposition: vertices do not cover {1..n}");
}

Permutation compose(const Permutation& tau, const Permutation& sigma) {
    require(tau.size() == sigma.size(), "compose: size mismatch");
    const int n = tau.size();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i) - 1] = tau.apply(sigma.apply(i));
    return Permutation(std::move(img));
}

namespace {

int matching_apply(const PartialMatching& m, int i) {
    int p = m.partner_or_zero(i);
    return p == 0 ? i : p;
}

}  // namespace

Permutation compose(const PartialMatching& tau, const PartialMatching& sigma) {
    require(tau.size() == sigma.size(), "compose: size mismatch");
    const int n = tau.size();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        img[static_cast<size_t>(i) - 1] = matching_apply(tau, matching_apply(sigma, i));
    return Permutation(std::move(img));
}

Permutation compose(const PartialMatching& tau, const Permutation& sigma) {
    return compose(tau.to_permutation(), sigma);
}

Permutation compose(const Permutation& tau, const PartialMatching& sigma) {
    return compose(tau, sigma.to_permutation());
}

Permutation invert(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(pi.apply(i)) - 1] = i;
    return Permutation(std::move(img));
}

Superposition superpose(const PartialMatching& sigma, const PartialMatching& tau) {
    require(sigma.size() == tau.size(), "superpose: size mismatch");
    const int n = sigma.size();

    auto edge = [&](EdgeColor c, int v) {
        return c == EdgeColor::Solid ? sigma.partner_or_zero(v) : tau.partner_or_zero(v);
    };
    auto other = [](EdgeColor c) {
        return c == EdgeColor::Solid ? EdgeColor::Dotted : EdgeColor::Solid;
    };

    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<SuperComponent> comps;

    // Walk from `start` along alternating edges, first step on `c`. Returns
    // the visited sequence; closed = true when the walk returned to start.
    auto walk = [&](int start, EdgeColor c, std::vector<int>& verts, std::vector<EdgeColor>& cols) {
        verts.assign(1, start);
        cols.clear();
        int cur = start;
        EdgeColor nc = c;
        while (true) {
            int w = edge(nc, cur);
            if (w == 0) return false;  // dead end: cur is an endpoint
            cols.push_back(nc);
            if (w == start) return true;  // cycle closed
            verts.push_back(w);
            cur = w;
            nc = other(nc);
        }
    };

    for (int v = 1; v <= n; ++v) {
        if (seen[static_cast<size_t>(v) - 1]) continue;
        SuperComponent comp;
        int s = sigma.partner_or_zero(v);
        int d = tau.partner_or_zero(v);
        if (s == 0 && d == 0) {
            comp.kind = SuperComponent::Kind::Path;
            comp.vertices = {v};
        } else {
            std::vector<int> verts;
            std::vector<EdgeColor> cols;
            EdgeColor first = s != 0 ? EdgeColor::Solid : EdgeColor::Dotted;
            bool closed = walk(v, first, verts, cols);
            if (closed) {
                // v is the smallest label of its component by scan order, and
                // the walk left along its solid edge, so this is canonical.
                comp.kind = SuperComponent::Kind::Cycle;
                comp.vertices = std::move(verts);
                comp.colors = std::move(cols);
            } else {
                // Re-walk from the endpoint we found to collect the full path.
                int e1 = verts.back();
                EdgeColor ec = sigma.partner_or_zero(e1) != 0 ? EdgeColor::Solid : EdgeColor::Dotted;
                walk(e1, ec, verts, cols);
                if (verts.back() < verts.front()) {
                    std::reverse(verts.begin(), verts.end());
                    std::reverse(cols.begin(), cols.end());
                }
                comp.kind = SuperComponent::Kind::Path;
                comp.vertices = std::move(verts);
                comp.colors = std::move(cols);
            }
        }
        for (int w : comp.vertices) seen[static_cast<size_t>(w) - 1] = 1;
        comps.push_back(std::move(comp));
    }
    return Superposition(n, std::move(comps));
}

CycleType induced_cycle_type(const Superposition& sp) {
    std::map<long, long> counts;
    for (const auto& comp : sp.components()) {
        if (comp.kind == SuperComponent::Kind::Path) {
            counts[comp.length()] += 1;
        } else {
            counts[comp.length() / 2] += 2;
        }
    }
    return CycleType(std::move(counts));
}

std::string to_cycle_string(const Permutation& pi) {
    const int n = pi.size();
    if (n == 0) return "()";
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::ostringstream os;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        os << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) os << ' ';
            os << j;
            first = false;
            seen[static_cast<size_t>(j) - 1] = 1;
            j = pi.apply(j);
        } while (j != i);
        os << ')';
    }
    return os.str();
}

std::string to_image_string(const Permutation& pi) {
    std::ostringstream os;
    for (int i = 1; i <= pi.size(); ++i) {
        if (i > 1) os << ' ';
        os << pi.apply(i);
    }
    return os.str();
}

Permutation parse_cycles(const std::string& text, int n) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    int max_label = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        require(text[pos] == '(', "parse_cycles: expected '('");
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            require(std::isdigit(static_cast<unsigned char>(text[pos])), "parse_cycles: expected a label");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                ++pos;
            }
            require(v >= 1, "parse_cycles: labels are 1-based");
            cyc.push_back(v);
            max_label = std::max(max_label, v);
            skip_ws();
        }
        require(pos < text.size(), "parse_cycles: missing ')'");
        ++pos;  // consume ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    if (n < 0) n = max_label;
    require(max_label <= n, "parse_cycles: label exceeds n");
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i) - 1] = i;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (const auto& cyc : cycles) {
        for (size_t idx = 0; idx < cyc.size(); ++idx) {
            int a = cyc[idx];
            int b = cyc[(idx + 1) % cyc.size()];
            require(!used[static_cast<size_t>(a) - 1], "parse_cycles: label repeated");
            used[static_cast<size_t>(a) - 1] = 1;
            img[static_cast<size_t>(a) - 1] = b;
        }
    }
    return Permutation(std::move(img));
}

Permutation parse_image(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> img;
    int v = 0;
    while (is >> v) img.push_back(v);
    require(is.eof(), "parse_image: trailing garbage");
    return Permutation(std::move(img));
}

}  // namespace involucomp
