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

#include "involucomp/series.hpp"

#include <stdexcept>

namespace involucomp {

namespace {

const BigRat kZero(0);

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

BigRat rat(long num, long den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

MarkerPoly::MarkerPoly(int cap) : cap_(cap) {
    require(cap >= 0, "MarkerPoly: negative degree cap");
    c_.resize(static_cast<size_t>(cap + 1) * (cap + 1), BigRat(0));
}

MarkerPoly MarkerPoly::constant(const BigRat& c, int cap) {
    MarkerPoly p(cap);
    p.set_coeff(0, 0, c);
    return p;
}

MarkerPoly MarkerPoly::marker_u(int cap) {
    require(cap >= 1, "MarkerPoly: cap too small for marker u");
    MarkerPoly p(cap);
    p.set_coeff(1, 0, BigRat(1));
    return p;
}

MarkerPoly MarkerPoly::marker_v(int cap) {
    require(cap >= 1, "MarkerPoly: cap too small for marker v");
    MarkerPoly p(cap);
    p.set_coeff(0, 1, BigRat(1));
    return p;
}

const BigRat& MarkerPoly::coeff(int du, int dv) const {
    if (du < 0 || dv < 0 || du + dv > cap_) return kZero;
    return c_[index(du, dv)];
}

void MarkerPoly::set_coeff(int du, int dv, const BigRat& c) {
    require(du >= 0 && dv >= 0 && du + dv <= cap_, "MarkerPoly: degree above cap");
    c_[index(du, dv)] = c;
}

bool MarkerPoly::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool MarkerPoly::is_constant() const {
    for (int i = 0; i <= cap_; ++i)
        for (int j = 0; j <= cap_ - i; ++j)
            if ((i != 0 || j != 0) && c_[index(i, j)] != 0) return false;
    return true;
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& o) {
    require(cap_ == o.cap_, "MarkerPoly: cap mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& o) {
    require(cap_ == o.cap_, "MarkerPoly: cap mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

MarkerPoly operator*(const MarkerPoly& a, const MarkerPoly& b) {
    require(a.cap_ == b.cap_, "MarkerPoly: cap mismatch");
    const int cap = a.cap_;
    MarkerPoly r(cap);
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; j <= cap - i; ++j) {
            const BigRat& ca = a.c_[a.index(i, j)];
            if (ca == 0) continue;
            for (int k = 0; i + k <= cap; ++k)
                for (int l = 0; i + j + k + l <= cap; ++l) {
                    const BigRat& cb = b.c_[b.index(k, l)];
                    if (cb == 0) continue;
                    r.c_[r.index(i + k, j + l)] += ca * cb;
                }
        }
    return r;
}

MarkerPoly& MarkerPoly::operator*=(const BigRat& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

MarkerPoly MarkerPoly::derivative_u() const {
    MarkerPoly r(cap_);
    for (int i = 1; i <= cap_; ++i)
        for (int j = 0; j <= cap_ - i; ++j)
            r.c_[r.index(i - 1, j)] = BigRat(i) * c_[index(i, j)];
    return r;
}

BigRat MarkerPoly::eval(const BigRat& u, const BigRat& v) const {
    BigRat total = 0;
    BigRat up = 1;
    for (int i = 0; i <= cap_; ++i) {
        BigRat vp = 1;
        for (int j = 0; j <= cap_ - i; ++j) {
            const BigRat& c = c_[index(i, j)];
            if (c != 0) total += c * up * vp;
            vp *= v;
        }
        up *= u;
    }
    return total;
}

TruncatedSeries::TruncatedSeries(int order, int marker_cap)
    : order_(order), marker_cap_(marker_cap) {
    require(order >= 0, "TruncatedSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1, MarkerPoly(marker_cap));
}

TruncatedSeries TruncatedSeries::zero(int order, int marker_cap) {
    return TruncatedSeries(order, marker_cap);
}

TruncatedSeries TruncatedSeries::one(int order, int marker_cap) {
    TruncatedSeries s(order, marker_cap);
    s.set_coeff(0, BigRat(1));
    return s;
}

void TruncatedSeries::set_coeff(int n, MarkerPoly p) {
    require(n >= 0 && n <= order_, "TruncatedSeries: coefficient index out of range");
    require(p.cap() == marker_cap_, "TruncatedSeries: marker cap mismatch");
    c_[static_cast<size_t>(n)] = std::move(p);
}

void TruncatedSeries::set_coeff(int n, const BigRat& r) {
    set_coeff(n, MarkerPoly::constant(r, marker_cap_));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require(order_ == o.order_ && marker_cap_ == o.marker_cap_, "TruncatedSeries: shape mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require(order_ == o.order_ && marker_cap_ == o.marker_cap_, "TruncatedSeries: shape mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRat& s) {
    for (auto& p : c_) p *= s;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const MarkerPoly& s) {
    for (auto& p : c_) p = p * s;
    return *this;
}

namespace {

// Indices with nonzero coefficients; lets exp/log skip sparse gaps.
std::vector<int> support(const TruncatedSeries& f, int lo) {
    std::vector<int> s;
    for (int n = lo; n <= f.order(); ++n)
        if (!f.coeff(n).is_zero()) s.push_back(n);
    return s;
}

}  // namespace

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require(f.order() == g.order() && f.marker_cap() == g.marker_cap(),
            "series_mul: shape mismatch");
    const int N = f.order();
    TruncatedSeries h(N, f.marker_cap());
    std::vector<int> fs = support(f, 0);
    for (int k : fs) {
        const MarkerPoly& fk = f.coeff(k);
        for (int m = 0; k + m <= N; ++m) {
            if (g.coeff(m).is_zero()) continue;
            MarkerPoly prod = fk * g.coeff(m);
            MarkerPoly acc = h.coeff(k + m);
            acc += prod;
            h.set_coeff(k + m, std::move(acc));
        }
    }
    return h;
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (!f.coeff(0).is_zero())
        throw std::domain_error("series_exp: constant term must be 0");
    const int N = f.order();
    TruncatedSeries g = TruncatedSeries::one(N, f.marker_cap());
    std::vector<int> fs = support(f, 1);
    // g' = f' g, coefficientwise: n g_n = sum_k k f_k g_{n-k}.
    for (int n = 1; n <= N; ++n) {
        MarkerPoly acc(f.marker_cap());
        for (int k : fs) {
            if (k > n) break;
            MarkerPoly term = f.coeff(k) * g.coeff(n - k);
            term *= BigRat(k);
            acc += term;
        }
        acc *= rat(1, n);
        g.set_coeff(n, std::move(acc));
    }
    return g;
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    if (!f.coeff(0).is_constant() || f.coeff(0).coeff(0, 0) != 1)
        throw std::domain_error("series_log: constant term must be 1");
    const int N = f.order();
    TruncatedSeries h(N, f.marker_cap());
    // n f_n = sum_{k=1}^{n} k h_k f_{n-k} with f_0 = 1.
    for (int n = 1; n <= N; ++n) {
        MarkerPoly acc = f.coeff(n);
        for (int k = 1; k < n; ++k) {
            if (h.coeff(k).is_zero() || f.coeff(n - k).is_zero()) continue;
            MarkerPoly term = h.coeff(k) * f.coeff(n - k);
            term *= rat(-k, n);
            acc += term;
        }
        h.set_coeff(n, std::move(acc));
    }
    return h;
}

TruncatedSeries derivative_u(const TruncatedSeries& f) {
    TruncatedSeries r(f.order(), f.marker_cap());
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n).derivative_u());
    return r;
}

TruncatedSeries eval_markers(const TruncatedSeries& f, const BigRat& u, const BigRat& v) {
    TruncatedSeries r(f.order(), 0);
    for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n).eval(u, v));
    return r;
}

BigRat EgfSeries::ordinary_coeff(int n) const {
    BigRat r(coeff(n), factorial(n));
    r.canonicalize();
    return r;
}

namespace {

// Row of binomials C(n, 0..n), computed multiplicatively.
std::vector<BigInt> binomial_row(int n) {
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (int k = 0; k < n; ++k)
        row[static_cast<size_t>(k) + 1] = exact_div(row[static_cast<size_t>(k)] * BigInt(n - k), BigInt(k + 1));
    return row;
}

}  // namespace

EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g) {
    require(f.order() == g.order(), "egf_mul: order mismatch");
    const int N = f.order();
    EgfSeries h(N);
    for (int n = 0; n <= N; ++n) h.coeff(n) = egf_product_coeff(f, g, n);
    return h;
}

BigInt egf_product_coeff(const EgfSeries& f, const EgfSeries& g, int n) {
    require(n <= f.order() && n <= g.order(), "egf_product_coeff: order exceeded");
    std::vector<BigInt> row = binomial_row(n);
    BigInt acc = 0;
    for (int k = 0; k <= n; ++k) {
        if (f.coeff(k) == 0 || g.coeff(n - k) == 0) continue;
        acc += row[static_cast<size_t>(k)] * f.coeff(k) * g.coeff(n - k);
    }
    return acc;
}

EgfSeries egf_exp(const EgfSeries& f) {
    if (f.coeff(0) != 0) throw std::domain_error("egf_exp: constant term must be 0");
    const int N = f.order();
    EgfSeries g(N);
    g.coeff(0) = 1;
    // G_n = sum_{k=1}^{n} C(n-1, k-1) F_k G_{n-k}.
    for (int n = 1; n <= N; ++n) {
        std::vector<BigInt> row = binomial_row(n - 1);
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) {
            if (f.coeff(k) == 0) continue;
            acc += row[static_cast<size_t>(k) - 1] * f.coeff(k) * g.coeff(n - k);
        }
        g.coeff(n) = acc;
    }
    return g;
}

EgfSeries egf_log(const EgfSeries& f) {
    if (f.coeff(0) != 1) throw std::domain_error("egf_log: constant term must be 1");
    const int N = f.order();
    EgfSeries h(N);
    for (int n = 1; n <= N; ++n) {
        std::vector<BigInt> row = binomial_row(n - 1);
        BigInt acc = f.coeff(n);
        for (int k = 1; k < n; ++k) {
            if (h.coeff(k) == 0 || f.coeff(n - k) == 0) continue;
            acc -= row[static_cast<size_t>(k) - 1] * h.coeff(k) * f.coeff(n - k);
        }
        h.coeff(n) = acc;
    }
    return h;
}

TruncatedSeries to_truncated(const EgfSeries& f, int marker_cap) {
    TruncatedSeries s(f.order(), marker_cap);
    BigInt fact = 1;
    for (int n = 0; n <= f.order(); ++n) {
        if (n > 0) fact *= n;
        BigRat r(f.coeff(n), fact);
        r.canonicalize();
        s.set_coeff(n, r);
    }
    return s;
}

EgfSeries from_truncated(const TruncatedSeries& f) {
    EgfSeries g(f.order());
    BigInt fact = 1;
    for (int n = 0; n <= f.order(); ++n) {
        if (n > 0) fact *= n;
        require(f.coeff(n).is_constant(), "from_truncated: marker terms present");
        BigRat scaled = f.coeff(n).coeff(0, 0) * BigRat(fact);
        require(scaled.get_den() == 1, "from_truncated: coefficient is not EGF-integral");
        g.coeff(n) = scaled.get_num();
    }
    return g;
}

}  // namespace involucomp
