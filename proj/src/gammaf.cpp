#include "prabhakar/gammaf.hpp"

#include <cmath>
#include <limits>

namespace prabhakar {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

int gamma_sign(double x) {
    if (is_nonpositive_integer(x)) return 0;
    if (x > 0.0) return 1;
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)) with Gamma(1-x) > 0,
    // so the sign is the sign of sin(pi x), i.e. the parity of floor(x).
    long long m = static_cast<long long>(std::floor(x));
    return (m % 2 == 0) ? 1 : -1;
}

double log_abs_gamma(double x) {
    return std::lgamma(x);
}

double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 0.0) {
        if (x < 170.0) return 1.0 / std::tgamma(x);
        return std::exp(-std::lgamma(x));
    }
    double la = std::lgamma(x);
    if (la > 700.0) return 0.0;  // |Gamma| too large: reciprocal underflows
    return gamma_sign(x) * std::exp(-la);
}

double gamma_ratio(double num, double den) {
    if (num < 170.0 && den < 170.0 && num > 0.0 && den > 0.0)
        return std::tgamma(num) / std::tgamma(den);
    return std::exp(std::lgamma(num) - std::lgamma(den));
}

}  // namespace prabhakar
