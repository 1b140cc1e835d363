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

#include "involucomp/egf_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace involucomp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

std::vector<BigInt> involution_counts(int N) {
    require(N >= 0, "involution_counts: negative order");
    std::vector<BigInt> a(static_cast<size_t>(N) + 1);
    a[0] = 1;
    if (N >= 1) a[1] = 1;
    for (int n = 2; n <= N; ++n)
        a[static_cast<size_t>(n)] = a[static_cast<size_t>(n) - 1] + BigInt(n - 1) * a[static_cast<size_t>(n) - 2];
    return a;
}

std::vector<BigInt> set_of_lists_counts(int N) {
    require(N >= 0, "set_of_lists_counts: negative order");
    std::vector<BigInt> y(static_cast<size_t>(N) + 1);
    y[0] = 1;
    if (N >= 1) y[1] = 1;
    for (int n = 1; n < N; ++n)
        y[static_cast<size_t>(n) + 1] =
            BigInt(2 * n + 1) * y[static_cast<size_t>(n)] - BigInt(n) * BigInt(n - 1) * y[static_cast<size_t>(n) - 1];
    return y;
}

std::vector<BigInt> s_permutation_counts(const std::vector<int>& S, int N) {
    require(!S.empty(), "s_permutation_counts: S must be nonempty");
    for (int s : S) require(s >= 1, "s_permutation_counts: cycle lengths must be positive");
    TruncatedSeries f(N);
    for (int s : S)
        if (s <= N) f.set_coeff(s, BigRat(1, s));
    TruncatedSeries g = series_exp(f);
    std::vector<BigInt> counts(static_cast<size_t>(N) + 1);
    BigInt fact = 1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        BigRat scaled = g.coeff(n).coeff(0, 0) * BigRat(fact);
        require(scaled.get_den() == 1, "s_permutation_counts: non-integral count");
        counts[static_cast<size_t>(n)] = scaled.get_num();
    }
    return counts;
}

namespace {

void cycle_type_sum_rec(const std::vector<int>& S, size_t i, long remaining, BigInt term_div,
                        const BigInt& n_fact, BigInt& total) {
    if (i == S.size()) {
        if (remaining == 0) total += exact_div(n_fact, term_div);
        return;
    }
    const long s = S[i];
    // c copies of cycle length s contribute c! * s^c to the denominator.
    BigInt c_fact = 1;
    BigInt s_pow = 1;
    for (long c = 0; c * s <= remaining; ++c) {
        if (c > 0) {
            c_fact *= c;
            s_pow *= s;
        }
        cycle_type_sum_rec(S, i + 1, remaining - c * s, term_div * c_fact * s_pow, n_fact, total);
    }
}

}  // namespace

BigInt cycle_type_sum_count(const std::vector<int>& S, long n) {
    require(!S.empty(), "cycle_type_sum_count: S must be nonempty");
    require(n >= 0, "cycle_type_sum_count: negative n");
    for (int s : S) require(s >= 1, "cycle_type_sum_count: cycle lengths must be positive");
    BigInt total = 0;
    cycle_type_sum_rec(S, 0, n, BigInt(1), factorial(n), total);
    return total;
}

PairCounts involution_pair_counts(int N) {
    require(N >= 0, "involution_pair_counts: negative order");
    // exp(z/(1-z)): the EGF-integer coefficients of z/(1-z) are k!.
    EgfSeries lists(N);
    BigInt fact = 1;
    for (int k = 1; k <= N; ++k) {
        fact *= k;
        lists.coeff(k) = fact;
    }
    EgfSeries e1 = egf_exp(lists);

    // 1/sqrt(1-z^2) as exp((1/2) log(1/(1-z^2))).
    EgfSeries geom2(N);
    geom2.coeff(0) = 1;
    fact = 1;
    for (int k = 1; k <= N; ++k) {
        fact *= k;
        if (k % 2 == 0) geom2.coeff(k) = fact;
    }
    EgfSeries lg = egf_log(geom2);
    EgfSeries half(N);
    for (int k = 0; k <= N; ++k) half.coeff(k) = exact_div(lg.coeff(k), BigInt(2));
    EgfSeries e2 = egf_exp(half);

    EgfSeries p = egf_mul(e1, e2);
    PairCounts out;
    out.pairs.reserve(static_cast<size_t>(N) + 1);
    out.b.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        out.pairs.push_back(p.coeff(n));
        out.b.push_back(p.ordinary_coeff(n));
    }
    return out;
}

TruncatedSeries pair_series(int N, int marker_cap) {
    TruncatedSeries f(N, marker_cap);
    for (int k = 1; k <= N; ++k) f.set_coeff(k, BigRat(1));  // z/(1-z)
    TruncatedSeries e1 = series_exp(f);

    TruncatedSeries geom2 = TruncatedSeries::zero(N, marker_cap);
    for (int k = 0; k <= N; k += 2) geom2.set_coeff(k, BigRat(1));  // 1/(1-z^2)
    TruncatedSeries lg = series_log(geom2);
    lg *= BigRat(1, 2);
    TruncatedSeries e2 = series_exp(lg);
    return series_mul(e1, e2);
}

std::map<std::pair<int, int>, BigInt> path_cycle_table(int n) {
    require(n >= 0, "path_cycle_table: negative n");
    require(n <= 200, "path_cycle_table: n above the bivariate cap (200)");
    // Ordinary coefficients: L = z/(1-z) (paths), M = (1/2) log(1/(1-z^2))
    // (cycles). Entry (p, c) is n!/(p! c!) [z^n] L^p M^c.
    const size_t sz = static_cast<size_t>(n) + 1;
    std::vector<std::vector<BigRat>> lpow, mpow;
    std::vector<BigRat> base_l(sz, BigRat(0)), base_m(sz, BigRat(0));
    for (int j = 1; j <= n; ++j) base_l[static_cast<size_t>(j)] = 1;
    for (int j = 2; j <= n; j += 2) base_m[static_cast<size_t>(j)] = BigRat(1, j);

    auto convolve = [&](const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
        std::vector<BigRat> r(sz, BigRat(0));
        for (size_t i = 0; i < sz; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; i + j < sz; ++j)
                if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
        return r;
    };

    std::vector<BigRat> unit(sz, BigRat(0));
    unit[0] = 1;
    lpow.push_back(unit);
    mpow.push_back(unit);
    for (int p = 1; p <= n; ++p) lpow.push_back(convolve(lpow.back(), base_l));
    for (int c = 1; 2 * c <= n; ++c) mpow.push_back(convolve(mpow.back(), base_m));

    const BigInt n_fact = factorial(n);
    std::map<std::pair<int, int>, BigInt> table;
    for (int p = 0; p <= n; ++p) {
        for (int c = 0; p + 2 * c <= n; ++c) {
            BigRat coeff = 0;
            for (int j = p; j + 2 * c <= n; ++j)
                coeff += lpow[static_cast<size_t>(p)][static_cast<size_t>(j)] *
                         mpow[static_cast<size_t>(c)][static_cast<size_t>(n - j)];
            if (coeff == 0) continue;
            BigRat cnt = coeff * BigRat(n_fact) / BigRat(factorial(p) * factorial(c));
            require(cnt.get_den() == 1, "path_cycle_table: non-integral entry");
            table[{p, c}] = cnt.get_num();
        }
    }
    return table;
}

namespace {

// b_{n-j}/b_n summands expressed over a_n^2: b_{n-j} * n! = a_{n-j}^2 (n)_j.
BigInt pair_numerator(const std::vector<BigInt>& a, long n, long j) {
    if (j < 0 || j > n) return 0;
    const BigInt& am = a[static_cast<size_t>(n - j)];
    return am * am * falling_factorial(n, j);
}

}  // namespace

BigRat exact_mean_k_cycles(long n, long k) {
    require(n >= 1 && k >= 1 && k <= n, "exact_mean_k_cycles: k out of range");
    std::vector<BigInt> a = involution_counts(static_cast<int>(n));
    BigInt num = pair_numerator(a, n, k) * BigInt(k) + pair_numerator(a, n, 2 * k);
    const BigInt& an = a[static_cast<size_t>(n)];
    return make_rat(num, BigInt(k) * an * an);
}

BigRat k_cycle_factorial_moment(long n, long k, int r) {
    require(n >= 0 && k >= 1, "k_cycle_factorial_moment: bad arguments");
    require(r == 1 || r == 2, "k_cycle_factorial_moment: r must be 1 or 2");
    std::vector<BigInt> a = involution_counts(static_cast<int>(n));
    const BigInt& an = a[static_cast<size_t>(n)];
    if (r == 1) {
        BigInt num = pair_numerator(a, n, k) * BigInt(k) + pair_numerator(a, n, 2 * k);
        return make_rat(num, BigInt(k) * an * an);
    }
    // 2 [t^2] exp(t (z^k + z^{2k}/k) + t^2 z^{2k}/(2k)) gives
    // (1 + 1/k) b_{n-2k} + (2/k) b_{n-3k} + (1/k^2) b_{n-4k}, over b_n.
    BigInt k2 = BigInt(k) * BigInt(k);
    BigInt num = pair_numerator(a, n, 2 * k) * (k2 + BigInt(k)) +
                 pair_numerator(a, n, 3 * k) * 2 * BigInt(k) + pair_numerator(a, n, 4 * k);
    return make_rat(num, k2 * an * an);
}

std::pair<BigRat, BigRat> k_cycle_moments_via_series(int n, int k) {
    require(n >= 0 && k >= 1, "k_cycle_moments_via_series: bad arguments");
    const int cap = 2;
    TruncatedSeries p = pair_series(n, cap);
    // Exponent of the marking factor with t = u - 1 as the marker:
    // t (z^k + z^{2k}/k) + t^2 z^{2k}/(2k); truncation at t^2 is exact for
    // the first two factorial moments.
    TruncatedSeries expo(n, cap);
    MarkerPoly t1(cap), t2(cap);
    t1.set_coeff(1, 0, BigRat(1));
    t2.set_coeff(2, 0, BigRat(1));
    if (k <= n) {
        MarkerPoly c = t1;
        expo.set_coeff(k, c);
    }
    if (2 * k <= n) {
        MarkerPoly c = t1;
        c *= BigRat(1, k);
        MarkerPoly d = t2;
        d *= BigRat(1, 2 * k);
        c += d;
        expo.set_coeff(2 * k, c);
    }
    TruncatedSeries m = series_mul(p, series_exp(expo));
    const MarkerPoly& top = m.coeff(n);
    BigRat total = top.coeff(0, 0);
    require(total != 0, "k_cycle_moments_via_series: empty class");
    BigRat m1 = top.coeff(1, 0) / total;
    BigRat m2 = BigRat(2) * top.coeff(2, 0) / total;
    return {m1, m2};
}

BigRat mean_k_cycles_via_series(int n, int k) { return k_cycle_moments_via_series(n, k).first; }

BigRat exact_mean_cycles(long n) {
    require(n >= 0, "exact_mean_cycles: negative n");
    if (n == 0) return BigRat(0);
    std::vector<BigInt> a = involution_counts(static_cast<int>(n));
    // n! [z^n] P(z) (z/(1-z) + log(1/(1-z^2)))
    //   = sum_m (n)_m a_{n-m}^2  +  sum_{even m} (2/m) (n)_m a_{n-m}^2.
    BigInt num = 0;
    BigInt ff = 1;
    for (long m = 1; m <= n; ++m) {
        ff *= BigInt(n - m + 1);
        const BigInt& am = a[static_cast<size_t>(n - m)];
        BigInt w = ff;
        if (m % 2 == 0) w += exact_div(ff, BigInt(m)) * 2;
        num += w * am * am;
    }
    const BigInt& an = a[static_cast<size_t>(n)];
    return make_rat(num, an * an);
}

ComponentMeans exact_component_means(long n) {
    require(n >= 0, "exact_component_means: negative n");
    ComponentMeans out{BigRat(0), BigRat(0), BigRat(0)};
    if (n == 0) return out;
    std::vector<BigInt> a = involution_counts(static_cast<int>(n));
    BigInt paths = 0, cycles = 0, elements = 0;
    BigInt ff = 1;
    for (long m = 1; m <= n; ++m) {
        ff *= BigInt(n - m + 1);
        const BigInt& am = a[static_cast<size_t>(n - m)];
        BigInt sq = am * am;
        paths += ff * sq;
        if (m % 2 == 0) {
            cycles += exact_div(ff, BigInt(m)) * sq;   // (1/2) log marks each cycle once
            elements += ff * sq;                       // P(z) z^2/(1-z^2)
        }
    }
    const BigInt& an = a[static_cast<size_t>(n)];
    BigInt an2 = an * an;
    out.paths = make_rat(paths, an2);
    out.graph_cycles = make_rat(cycles, an2);
    out.cycle_elements = make_rat(elements, an2);
    return out;
}

BigRat acyclic_probability(long n) {
    require(n >= 0, "acyclic_probability: negative n");
    std::vector<BigInt> y = set_of_lists_counts(static_cast<int>(n));
    std::vector<BigInt> a = involution_counts(static_cast<int>(n));
    const BigInt& an = a[static_cast<size_t>(n)];
    return make_rat(y[static_cast<size_t>(n)], an * an);
}

double PoissonMixture::mean() const {
    double m = 0;
    for (size_t j = 0; j < pmf.size(); ++j) m += static_cast<double>(j) * pmf[j];
    return m;
}

double PoissonMixture::factorial_moment(int r) const {
    double m = 0;
    for (size_t j = 0; j < pmf.size(); ++j) {
        double t = pmf[j];
        for (int i = 0; i < r; ++i) t *= static_cast<double>(j) - i;
        m += t;
    }
    return m;
}

PoissonMixture poisson_mixture(long k, int j_max) {
    require(k >= 1, "poisson_mixture: k must be positive");
    require(j_max >= 0, "poisson_mixture: negative j_max");
    PoissonMixture mix;
    mix.k = k;
    mix.pmf.assign(static_cast<size_t>(j_max) + 1, 0.0);
    const double lam_b = 1.0 / (2.0 * static_cast<double>(k));
    const double log_ea = -1.0;
    const double log_eb = -lam_b;
    for (int j = 0; j <= j_max; ++j) {
        KahanSum s;
        for (int b = 0; 2 * b <= j; ++b) {
            int aa = j - 2 * b;
            double lt = log_ea - std::lgamma(aa + 1.0) + log_eb +
                        b * std::log(lam_b) - std::lgamma(b + 1.0);
            s.add(std::exp(lt));
        }
        mix.pmf[static_cast<size_t>(j)] = s.total();
    }
    return mix;
}

BigRat FpfCycleDistribution::mean() const {
    BigRat m = 0;
    for (const auto& [c, p] : pmf) m += BigRat(c) * p;
    return m;
}

FpfCycleDistribution fpf_cycle_count_distribution(long n) {
    require(n >= 1, "fpf_cycle_count_distribution: n must be positive");
    // Product of PGFs ((2k-2) + x)/(2k-1), k = 1..n; integer numerator
    // polynomial over the common denominator (2n-1)!!.
    std::vector<BigInt> poly{BigInt(1)};
    BigInt denom = 1;
    for (long k = 1; k <= n; ++k) {
        denom *= BigInt(2 * k - 1);
        std::vector<BigInt> next(poly.size() + 1, BigInt(0));
        const BigInt c(2 * k - 2);
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j] += c * poly[j];
            next[j + 1] += poly[j];
        }
        poly = std::move(next);
    }
    FpfCycleDistribution dist;
    dist.n = n;
    for (size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] == 0) continue;
        dist.pmf[2 * static_cast<long>(j)] = make_rat(poly[j], denom);
    }
    return dist;
}

RComponentMeans expected_component_counts(long n, long k, long l, long r) {
    require(n >= 0 && k >= 0 && l >= 0 && k <= n && l <= n, "expected_component_counts: bad sizes");
    require((n - k) % 2 == 0 && (n - l) % 2 == 0, "expected_component_counts: parity violation");
    require(r >= 1, "expected_component_counts: r must be positive");
    RComponentMeans out{BigRat(0), BigRat(0)};
    if (r > n) return out;
    const long hk = (n - k) / 2;
    const long hl = (n - l) / 2;
    const BigInt nr = falling_factorial(n, r);
    const BigInt two_r1 = pow_int(BigInt(2), static_cast<unsigned long>(r - 1));
    if (r % 2 == 1) {
        BigInt num = BigInt(k) * BigInt(l) * falling_factorial(hk, (r - 1) / 2) *
                     falling_factorial(hl, (r - 1) / 2) * two_r1;
        out.paths = make_rat(num, nr);
    } else {
        BigInt num = (BigInt(k) * BigInt(k - 1) * falling_factorial(hk, r / 2 - 1) *
                          falling_factorial(hl, r / 2) +
                      BigInt(l) * BigInt(l - 1) * falling_factorial(hk, r / 2) *
                          falling_factorial(hl, r / 2 - 1)) *
                     two_r1;
        out.paths = make_rat(num, BigInt(2) * nr);
        BigInt cnum = falling_factorial(hk, r / 2) * falling_factorial(hl, r / 2) * two_r1 * 2;
        out.cycles = make_rat(cnum, BigInt(r) * nr);
    }
    return out;
}

}  // namespace involucomp
