#ifndef PRABHAKAR_DETAIL_DOUBLE_DOUBLE_HPP
#define PRABHAKAR_DETAIL_DOUBLE_DOUBLE_HPP

#include <cmath>

// Compensated double-double scalar used inside the coefficient recursions.
// The F_{j,k}, Miller and Upsilon recursions subtract like-magnitude terms;
// carrying ~32 digits through them keeps the cancellation residue far below
// double rounding in the final coefficients (important for the gamma = 1
// degeneracy, where every c_k must vanish).

namespace prabhakar::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double x) : hi(x), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }

inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd abs(dd a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? -a : a; }
inline double to_double(dd a) { return a.hi + a.lo; }

// Integer power by repeated multiplication (exponents stay small here).
inline dd pow_int(dd base, int n) {
    dd r(1.0);
    dd b = base;
    int m = n < 0 ? -n : n;
    while (m > 0) {
        if (m & 1) r = r * b;
        b = b * b;
        m >>= 1;
    }
    if (n < 0) return dd(1.0) / r;
    return r;
}

}  // namespace prabhakar::detail

#endif
