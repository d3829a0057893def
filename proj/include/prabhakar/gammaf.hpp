#ifndef PRABHAKAR_GAMMAF_HPP
#define PRABHAKAR_GAMMAF_HPP

// Small gamma-function helpers shared by every evaluation path.  The whole
// library adopts the convention 1/Gamma(-n) = 0 at the poles, which makes the
// inverse-power expansions drop their pole terms silently.

namespace prabhakar {

// 1/Gamma(x); exactly 0 at x = 0, -1, -2, ...
double rgamma(double x);

// Sign of Gamma(x) (+1 or -1); 0 at the poles.
int gamma_sign(double x);

// log|Gamma(x)| for any non-pole x (negative arguments allowed).
double log_abs_gamma(double x);

// Gamma(num)/Gamma(den) with both arguments positive, computed so that
// ratios of huge values do not overflow.
double gamma_ratio(double num, double den);

}  // namespace prabhakar

#endif
