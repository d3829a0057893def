#ifndef PRABHAKAR_DETAIL_SERIES_OPS_HPP
#define PRABHAKAR_DETAIL_SERIES_OPS_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

// Scalar-generic truncated power-series kernels.  Instantiated with double
// for the public API and with detail::dd inside the coefficient pipeline.

namespace prabhakar::detail {

template <class T>
std::vector<T> cauchy(const std::vector<T>& a, const std::vector<T>& b, int K) {
    std::vector<T> out(static_cast<size_t>(K) + 1, T(0.0));
    for (int k = 0; k <= K; ++k) {
        T acc(0.0);
        int imax = std::min<int>(k, static_cast<int>(a.size()) - 1);
        for (int i = 0; i <= imax; ++i) {
            int j = k - i;
            if (j < static_cast<int>(b.size())) acc += a[i] * b[j];
        }
        out[k] = acc;
    }
    return out;
}

// Coefficient k of the product of four unit series, as the explicit
// quadruple sum (two nested double sums).
template <class T>
std::vector<T> four_product(const std::vector<T>& a, const std::vector<T>& b,
                            const std::vector<T>& c, const std::vector<T>& d, int K) {
    auto at = [](const std::vector<T>& v, int i) {
        return i < static_cast<int>(v.size()) ? v[i] : T(0.0);
    };
    std::vector<T> out(static_cast<size_t>(K) + 1, T(0.0));
    for (int k = 0; k <= K; ++k) {
        T acc(0.0);
        for (int j1 = 0; j1 <= k; ++j1) {
            T ab(0.0);
            for (int j2 = 0; j2 <= j1; ++j2) ab += at(a, j2) * at(b, j1 - j2);
            T cd(0.0);
            for (int j3 = 0; j3 <= k - j1; ++j3) cd += at(c, j3) * at(d, k - j1 - j3);
            acc += ab * cd;
        }
        out[k] = acc;
    }
    return out;
}

// Miller recursion for the coefficients f_k^{(n)} of the n-th power of a
// series with nonzero leading coefficient, relative to the leading factor:
//   f_0^{(n)} = 1,  f_k^{(n)} = sum_{l=1..k} ((n+1)l/k - 1) (d_{l+1}/d_1) f_{k-l}^{(n)}
// where ratios[l-1] = d_{l+1}/d_1.  n = 0 is the caller's business.
template <class T>
std::vector<T> miller(const std::vector<T>& ratios, int n, int K) {
    std::vector<T> f(static_cast<size_t>(K) + 1, T(0.0));
    f[0] = T(1.0);
    for (int k = 1; k <= K; ++k) {
        T acc(0.0);
        for (int l = 1; l <= k; ++l) {
            if (l - 1 >= static_cast<int>(ratios.size())) break;
            T w = T(static_cast<double>(n + 1) * l) / T(static_cast<double>(k)) - T(1.0);
            acc += w * ratios[l - 1] * f[k - l];
        }
        f[k] = acc;
    }
    return f;
}

}  // namespace prabhakar::detail

#endif
