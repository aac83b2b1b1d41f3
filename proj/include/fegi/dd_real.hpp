#pragma once

#include <cmath>
#include <cstdlib>

namespace fegi {

// Compensated double-double arithmetic (~31 significant decimal digits),
// the "extended" precision backing every templated spectral routine.
// Error-free transforms follow the usual two_sum / two_prod constructions;
// two_prod relies on std::fma.
struct dd_real {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd_real() = default;
    constexpr dd_real(double x) : hi(x), lo(0.0) {}
    constexpr dd_real(double h, double l) : hi(h), lo(l) {}
    explicit constexpr dd_real(int x) : hi(static_cast<double>(x)), lo(0.0) {}
};

namespace dd {

inline dd_real two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Requires |a| >= |b| (or a == 0).
inline dd_real quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd_real two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace dd

inline dd_real operator+(dd_real a, dd_real b) {
    dd_real s = dd::two_sum(a.hi, b.hi);
    dd_real t = dd::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = dd::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return dd::quick_two_sum(s.hi, s.lo);
}

inline dd_real operator-(dd_real a) { return {-a.hi, -a.lo}; }
inline dd_real operator-(dd_real a, dd_real b) { return a + (-b); }

inline dd_real operator*(dd_real a, dd_real b) {
    dd_real p = dd::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd::quick_two_sum(p.hi, p.lo);
}

inline dd_real operator/(dd_real a, dd_real b) {
    double q1 = a.hi / b.hi;
    dd_real r = a - b * dd_real(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd_real(q2);
    double q3 = r.hi / b.hi;
    dd_real q = dd::quick_two_sum(q1, q2);
    return q + dd_real(q3);
}

inline dd_real& operator+=(dd_real& a, dd_real b) { return a = a + b; }
inline dd_real& operator-=(dd_real& a, dd_real b) { return a = a - b; }
inline dd_real& operator*=(dd_real& a, dd_real b) { return a = a * b; }
inline dd_real& operator/=(dd_real& a, dd_real b) { return a = a / b; }

inline bool operator==(dd_real a, dd_real b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(dd_real a, dd_real b) { return !(a == b); }
inline bool operator<(dd_real a, dd_real b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd_real a, dd_real b) { return b < a; }
inline bool operator<=(dd_real a, dd_real b) { return !(b < a); }
inline bool operator>=(dd_real a, dd_real b) { return !(a < b); }

inline dd_real abs(dd_real a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline dd_real sqrt(dd_real a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {};
    // One Newton correction on the double estimate: y + (a - y^2) / (2y).
    double y = std::sqrt(a.hi);
    dd_real t = a - dd_real(y) * dd_real(y);
    return dd::quick_two_sum(y, t.hi / (2.0 * y));
}

inline dd_real floor(dd_real a) {
    double f = std::floor(a.hi);
    if (f == a.hi) return dd::two_sum(f, std::floor(a.lo));
    return {f, 0.0};
}

inline double to_double(dd_real a) { return a.hi + a.lo; }
inline double to_double(double a) { return a; }

} // namespace fegi
