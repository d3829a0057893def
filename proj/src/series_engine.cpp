#include "prabhakar/series_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "prabhakar/detail/double_double.hpp"
#include "prabhakar/detail/series_ops.hpp"

namespace prabhakar::series {

CoeffSeries cauchy_product(const CoeffSeries& a, const CoeffSeries& b, int K) {
    if (K < 0) throw std::domain_error("cauchy_product: K must be >= 0");
    CoeffSeries out;
    out.offset = a.offset + b.offset;
    out.coeffs = detail::cauchy(a.coeffs, b.coeffs, K);
    return out;
}

CoeffSeries four_series_product(const CoeffSeries& a, const CoeffSeries& b,
                                const CoeffSeries& c, const CoeffSeries& d, int K) {
    for (const CoeffSeries* s : {&a, &b, &c, &d}) {
        if (s->offset != 0 || s->coeffs.empty() || s->coeffs[0] != 1.0)
            throw std::domain_error("four_series_product: factors must be unit series");
    }
    CoeffSeries out;
    out.offset = 0;
    out.coeffs = detail::four_product(a.coeffs, b.coeffs, c.coeffs, d.coeffs, K);
    return out;
}

CoeffSeries miller_power(const CoeffSeries& d, int n, int K) {
    if (n < 0) throw std::domain_error("miller_power: n must be >= 0");
    CoeffSeries out;
    if (n == 0) {
        // (f)^0 = 1 by convention; the recursion is only valid for n >= 1.
        out.offset = 0;
        out.coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
        out.coeffs[0] = 1.0;
        return out;
    }
    if (d.coeffs.empty() || d.coeffs[0] == 0.0)
        throw std::domain_error(
            "miller_power: leading coefficient is zero, normalize with shifted case first");
    std::vector<double> ratios;
    ratios.reserve(d.coeffs.size());
    for (size_t l = 1; l < d.coeffs.size(); ++l) ratios.push_back(d.coeffs[l] / d.coeffs[0]);
    out.offset = n * d.offset;
    out.coeffs = detail::miller(ratios, n, K);
    return out;
}

double gen_binomial(long long n, long long k) {
    // Classical case 0 <= k <= n: integer multiplicative form, exact while
    // intermediates fit; falls back to a floating product beyond that.
    auto binom_nonneg = [](long long nn, long long kk) -> double {
        if (kk < 0 || kk > nn) return 0.0;
        if (kk > nn - kk) kk = nn - kk;
        unsigned long long acc = 1;
        bool overflowed = false;
        for (long long i = 1; i <= kk; ++i) {
            unsigned long long num = static_cast<unsigned long long>(nn - kk + i);
            if (acc > (~0ULL / num)) { overflowed = true; break; }
            acc = acc * num / static_cast<unsigned long long>(i);
        }
        if (!overflowed) return static_cast<double>(acc);
        double r = 1.0;
        for (long long i = 1; i <= kk; ++i)
            r *= static_cast<double>(nn - kk + i) / static_cast<double>(i);
        return r;
    };

    if (n >= 0 && k >= 0 && k <= n) return binom_nonneg(n, k);
    if (n < 0 && k >= 0) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return sign * binom_nonneg(-n + k - 1, k);
    }
    if (k <= n && n < 0) {
        double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
        return sign * binom_nonneg(-k - 1, n - k);
    }
    return 0.0;
}

std::vector<double> stirling_gamma_coeffs(int K) {
    if (K < 1) throw std::domain_error("stirling_gamma_coeffs: K must be >= 1");
    using detail::dd;
    int need = 2 * K + 1;
    std::vector<dd> b(static_cast<size_t>(need) + 1, dd(0.0));
    b[0] = dd(1.0);
    b[1] = dd(1.0);
    for (int k = 2; k <= need; ++k) {
        dd acc = b[k - 1];
        for (int j = 2; j <= k - 1; ++j) acc -= dd(static_cast<double>(j)) * b[j] * b[k - j + 1];
        b[k] = acc / dd(static_cast<double>(k + 1));
    }
    std::vector<double> g(static_cast<size_t>(K));
    dd dfac(1.0);  // (2k+1)!!
    for (int k = 1; k <= K; ++k) {
        dfac *= dd(2.0 * k + 1.0);
        g[static_cast<size_t>(k) - 1] = detail::to_double(dfac * b[2 * k + 1]);
    }
    return g;
}

}  // namespace prabhakar::series
