#ifndef PRABHAKAR_SERIES_ENGINE_HPP
#define PRABHAKAR_SERIES_ENGINE_HPP

#include <vector>

// Truncated formal power series in 1/s and the combinatorial coefficient
// generators used by the asymptotic-expansion machinery.

namespace prabhakar::series {

// coeffs[k] multiplies s^{-offset-k}.  A series tending to 1 at infinity has
// offset 0 and coeffs[0] = 1.
struct CoeffSeries {
    int offset = 0;
    std::vector<double> coeffs;
};

// Product of two series truncated to K+1 coefficients; offsets add.
CoeffSeries cauchy_product(const CoeffSeries& a, const CoeffSeries& b, int K);

// Product of four unit series (offset 0, leading coefficient 1) evaluated by
// the explicit quadruple sum; identical to three chained Cauchy products.
CoeffSeries four_series_product(const CoeffSeries& a, const CoeffSeries& b,
                                const CoeffSeries& c, const CoeffSeries& d, int K);

// Coefficients f_k^{(n)} of (f(s))^n relative to the normalized leading
// factor, by Miller's recursion.  n = 0 returns the identity series.
// Throws std::domain_error when the leading coefficient is zero (the caller
// must normalize with the shifted case first).
CoeffSeries miller_power(const CoeffSeries& d, int n, int K);

// Generalized binomial coefficient for integer arguments of either sign
// (four-case definition; 0 in the "otherwise" case 0 <= n < k).
double gen_binomial(long long n, long long k);

// gamma_1..gamma_K of the scaled-gamma (Stirling) expansion
//   Gamma*(z) = 1 + sum_k gamma_k z^{-k},
// via gamma_k = (2k+1)!! b_{2k+1} with b_0 = b_1 = 1 and
//   b_k = (b_{k-1} - sum_{j=2}^{k-1} j b_j b_{k-j+1})/(k+1).
std::vector<double> stirling_gamma_coeffs(int K);

}  // namespace prabhakar::series

#endif
