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

#include "involucomp/numeric.hpp"

namespace involucomp {

// Polynomial in the two marker variables u and v with exact rational
// coefficients, truncated at a fixed total degree. Arithmetic is exact in
// the retained degrees; terms above the cap are dropped, which is the
// intended quotient-ring semantics for moment extraction.
class MarkerPoly {
public:
    explicit MarkerPoly(int cap = 0);

    static MarkerPoly constant(const BigRat& c, int cap = 0);
    static MarkerPoly marker_u(int cap);
    static MarkerPoly marker_v(int cap);

    int cap() const { return cap_; }
    const BigRat& coeff(int du, int dv) const;
    void set_coeff(int du, int dv, const BigRat& c);
    bool is_zero() const;
    bool is_constant() const;

    MarkerPoly& operator+=(const MarkerPoly& o);
    MarkerPoly& operator-=(const MarkerPoly& o);
    friend MarkerPoly operator+(MarkerPoly a, const MarkerPoly& b) { return a += b; }
    friend MarkerPoly operator-(MarkerPoly a, const MarkerPoly& b) { return a -= b; }
    friend MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b);
    MarkerPoly& operator*=(const BigRat& s);

    MarkerPoly derivative_u() const;
    BigRat eval(const BigRat& u, const BigRat& v) const;

    friend bool operator==(const MarkerPoly&, const MarkerPoly&) = default;

private:
    size_t index(int du, int dv) const { return static_cast<size_t>(du) * (cap_ + 1) + dv; }

    int cap_;
    std::vector<BigRat> c_;  // dense (cap+1) x (cap+1); entries with du+dv > cap stay zero
};

// Exact truncated power series in z whose coefficients are MarkerPolys.
// Operations never read beyond the truncation order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order, int marker_cap = 0);

    static TruncatedSeries zero(int order, int marker_cap = 0);
    static TruncatedSeries one(int order, int marker_cap = 0);

    int order() const { return order_; }
    int marker_cap() const { return marker_cap_; }
    const MarkerPoly& coeff(int n) const { return c_[static_cast<size_t>(n)]; }
    void set_coeff(int n, MarkerPoly p);
    void set_coeff(int n, const BigRat& r);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    TruncatedSeries& operator*=(const BigRat& s);
    TruncatedSeries& operator*=(const MarkerPoly& s);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int order_;
    int marker_cap_;
    std::vector<MarkerPoly> c_;
};

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);
// Requires constant term 0.
TruncatedSeries series_exp(const TruncatedSeries& f);
// Requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& f);
TruncatedSeries derivative_u(const TruncatedSeries& f);
// Substitute rational values for the markers; result has marker_cap 0.
TruncatedSeries eval_markers(const TruncatedSeries& f, const BigRat& u, const BigRat& v);

// Integer fast path: a series with integral EGF coefficients, storing
// c[n] = n! [z^n] f. Products, exp and log of such series stay integral;
// used interchangeably with TruncatedSeries where profiling demands it
// (results are bit-identical, see tests).
class EgfSeries {
public:
    explicit EgfSeries(int order) : c_(static_cast<size_t>(order) + 1, BigInt(0)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int n) const { return c_[static_cast<size_t>(n)]; }
    BigInt& coeff(int n) { return c_[static_cast<size_t>(n)]; }

    // Exact ordinary coefficient [z^n] f = c[n] / n!.
    BigRat ordinary_coeff(int n) const;

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
    std::vector<BigInt> c_;
};

EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g);
EgfSeries egf_exp(const EgfSeries& f);
EgfSeries egf_log(const EgfSeries& f);
// Single coefficient n! [z^n] (f*g) without forming the whole product.
BigInt egf_product_coeff(const EgfSeries& f, const EgfSeries& g, int n);

// Conversions (exact; from_truncated requires every denominator to divide n!).
TruncatedSeries to_truncated(const EgfSeries& f, int marker_cap = 0);
EgfSeries from_truncated(const TruncatedSeries& f);

}  // namespace involucomp
