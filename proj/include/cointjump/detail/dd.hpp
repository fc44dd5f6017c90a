#pragma once

// Compensated (double-double) arithmetic used by the probability series in
// bipoisson. Each value is an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving ~31 significant digits. The alternating sums behind the joint law
// cancel 15-25 digits at deep-tail entries, so plain doubles are not enough;
// all factors of those terms (powers, factorials, binomials, Kummer series)
// are built with these primitives.

#include <cmath>
#include <limits>

namespace cointjump::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

// Error-free transforms (Knuth / Dekker).
inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator+(dd a, double b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator-(dd a, double b) { return a + (-b); }
inline dd operator-(double a, dd b) { return dd(a) + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator*(double a, dd b) { return b * a; }

inline dd operator/(dd a, dd b) {
    const double q1 = a.hi / b.hi;
    dd r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + q3;
}

inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }

inline dd dd_abs(dd a) { return a.hi < 0.0 ? -a : a; }

inline dd dd_ldexp(dd a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

/// exp(x) to full double-double precision via range reduction over ln 2 and
/// a Taylor tail on |r| <= ln(2)/2. Valid for |x| < 709.
inline dd dd_exp(dd x) {
    if (x.hi > 709.0 || x.hi < -709.0) {
        return x.hi > 0.0 ? dd(std::numeric_limits<double>::infinity()) : dd(0.0);
    }
    static const dd kLn2{6.93147180559945286e-01, 2.31904681384629956e-17};
    const double k = std::nearbyint(x.hi / kLn2.hi);
    const dd r = x - kLn2 * k;
    dd term{1.0};
    dd sum{1.0};
    for (int i = 1; i < 40; ++i) {
        term = term * r / static_cast<double>(i);
        sum += term;
        if (std::abs(term.hi) < 1e-35 * std::abs(sum.hi)) break;
    }
    return dd_ldexp(sum, static_cast<int>(k));
}

inline dd dd_exp(double x) { return dd_exp(dd(x)); }

}  // namespace cointjump::detail
