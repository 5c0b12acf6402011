// Sine and cosine integrals and the (1-cos)/x antiderivative.
//
//   Si(x)  = int_0^x sin t / t dt
//   Ci(x)  = C0 + log x + int_0^x (cos t - 1)/t dt          (x > 0)
//   Cin(x) = int_0^x (1 - cos t)/t dt = C0 + log x - Ci(x)
//
// Power series up to x = 16 (long double accumulation keeps the alternating
// cancellation below 1e-13 absolute); above that the continued fraction for
// E1(ix) via modified Lentz, using Ci(x) = -Re E1(ix), Si(x) = pi/2 + Im E1(ix).

#ifndef ZETASHIFT_SPECIAL_HPP
#define ZETASHIFT_SPECIAL_HPP

#include <cmath>
#include <complex>
#include <utility>

#include "zetashift/errors.hpp"

namespace zetashift {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

namespace detail {

struct SiCinSeries {
    long double si;
    long double cin;
};

// Maclaurin series of Si and Cin, valid (and accurate) for |x| <= 16.
inline SiCinSeries si_cin_series(long double x) {
    const long double x2 = x * x;
    long double si_term = x;          // x^{2k+1}/(2k+1)!
    long double si_sum = x;           // k = 0 term of Si has the 1/(2k+1) weight = 1
    long double cin_term = x2 / 2.0L; // x^{2k}/(2k)! at k = 1
    long double cin_sum = cin_term / 2.0L;
    long double sign = -1.0L;
    for (int k = 1; k < 60; ++k) {
        si_term *= x2 / ((2.0L * k) * (2.0L * k + 1.0L));
        si_sum += sign * si_term / (2.0L * k + 1.0L);
        cin_term *= x2 / ((2.0L * k + 1.0L) * (2.0L * k + 2.0L));
        cin_sum += sign * cin_term / (2.0L * k + 2.0L);
        if (si_term < 1e-24L * (std::abs(si_sum) + 1.0L) &&
            cin_term < 1e-24L * (std::abs(cin_sum) + 1.0L))
            break;
        sign = -sign;
    }
    return {si_sum, cin_sum};
}

// E1(i x) by the Lentz continued fraction; good for x > ~4, used for x > 16.
inline std::complex<long double> e1_ix_cf(long double x) {
    using C = std::complex<long double>;
    const C z(0.0L, x);
    const long double tiny = 1e-300L;
    C b = z + 1.0L;
    C c = 1.0L / tiny;
    C d = 1.0L / b;
    C h = d;
    for (int i = 1; i < 400; ++i) {
        const long double a = -static_cast<long double>(i) * i;
        b += 2.0L;
        d = 1.0L / (a * d + b);
        c = b + a / c;
        C del = c * d;
        h *= del;
        if (std::abs(del - C(1.0L)) < 1e-20L) break;
    }
    return h * std::exp(-z);
}

} // namespace detail

struct SiCi {
    double si;
    double ci;
};

// si_ci(x): Si for any x, Ci for x > 0 (domain error at x <= 0).
inline SiCi si_ci(double x) {
    if (x <= 0.0) {
        if (x == 0.0 || !(x == x))
            throw domain_error("si_ci: Ci undefined at x <= 0");
        // Si is odd; Ci(x) for x<0 is not needed anywhere in this project.
        throw domain_error("si_ci: Ci undefined at x <= 0");
    }
    if (x <= 16.0) {
        auto s = detail::si_cin_series(static_cast<long double>(x));
        const long double ci = kEulerGamma + std::log(static_cast<long double>(x)) - s.cin;
        return {static_cast<double>(s.si), static_cast<double>(ci)};
    }
    auto e1 = detail::e1_ix_cf(static_cast<long double>(x));
    return {static_cast<double>(M_PIl / 2.0L + e1.imag()),
            static_cast<double>(-e1.real())};
}

// Si alone, defined for every real x (odd, Si(0) = 0).
inline double si_only(double x) {
    if (x == 0.0) return 0.0;
    const double ax = std::abs(x);
    double s;
    if (ax <= 16.0) {
        s = static_cast<double>(detail::si_cin_series(static_cast<long double>(ax)).si);
    } else {
        auto e1 = detail::e1_ix_cf(static_cast<long double>(ax));
        s = static_cast<double>(M_PIl / 2.0L + e1.imag());
    }
    return x > 0 ? s : -s;
}

// Cin(x) = int_0^x (1-cos a)/a da, for x >= 0.
inline double one_minus_cos_integral(double x) {
    if (x < 0.0) throw domain_error("one_minus_cos_integral: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < 1.0)
        return static_cast<double>(detail::si_cin_series(static_cast<long double>(x)).cin);
    return std::log(x) + kEulerGamma - si_ci(x).ci;
}

} // namespace zetashift

#endif
