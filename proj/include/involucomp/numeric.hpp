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

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace involucomp {

// Exact arithmetic currency of the whole library. BigInt values are
// arbitrary-precision integers, BigRat exact rationals (always kept in
// canonical form by gmpxx).
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// n!! with the convention (-1)!! = 0!! = 1.
inline BigInt double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Falling factorial (x)_m = x (x-1) ... (x-m+1).
inline BigInt falling_factorial(long x, long m) {
    if (m < 0) throw std::invalid_argument("falling_factorial: negative m");
    BigInt r = 1;
    for (long i = 0; i < m; ++i) r *= BigInt(x - i);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Quotient a/b, which must be exact.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    assert(b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()));
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Natural log of a positive big integer, accurate to double precision
// regardless of magnitude.
inline double log_big(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("log_big: argument must be positive");
    long e = 0;
    double d = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * M_LN2;
}

inline double log_rat(const BigRat& q) {
    return log_big(q.get_num()) - log_big(q.get_den());
}

inline double to_double(const BigRat& q) { return q.get_d(); }

// Exact harmonic number H_n.
inline BigRat harmonic(long n) {
    BigRat h = 0;
    for (long k = 1; k <= n; ++k) h += BigRat(1, k);
    return h;
}

// Compensated (Kahan) accumulator for long floating-point sums.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double total() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace involucomp
