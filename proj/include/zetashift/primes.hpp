// Prime-side arithmetic: sieve-backed von Mangoldt tables, Mertens-type
// constants, the reciprocal-prime remainder
//
//   r(u) = sum_{p <= u} 1/p - log log u - M,        M = C0 + sum_p (log(1-1/p) + 1/p),
//
// its oscillatory integral int_2^U r(u) sin(h log u)/u du (exact per
// inter-prime panel via Ci), the twin-prime singular series, empirical
// twin-prime-conjecture ratios, and the prime / prime-power sums with the
// (pi u/2) cot(pi u/2) taper.
//
// Infinite prime sums are truncated with explicit tails: either a rigorous
// bound (Mertens: sum_{n>P} 1/(2n(n-1)) = 1/(2P)) or a logarithmic-integral
// tail estimate whose own error is orders below the documented budget.

#ifndef ZETASHIFT_PRIMES_HPP
#define ZETASHIFT_PRIMES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <vector>

#include "zetashift/errors.hpp"
#include "zetashift/kernels.hpp"
#include "zetashift/quadrature.hpp"
#include "zetashift/special.hpp"
#include "zetashift/summation.hpp"

namespace zetashift {

struct LambdaTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;      // smallest prime factor, spf[0]=spf[1]=0
    std::vector<std::uint32_t> primes;
    std::vector<double> prime_recip_prefix; // prefix sums of 1/p

    bool is_prime(std::uint64_t n) const {
        return n >= 2 && n <= limit && spf[n] == n;
    }

    // Lambda(n) = log p if n = p^m, else 0.
    double lambda(std::uint64_t n) const {
        if (n < 2 || n > limit) return 0.0;
        const std::uint64_t p = spf[n];
        while (n % p == 0) n /= p;
        return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
};

inline constexpr std::uint64_t kLambdaTableMaxLimit = 250'000'000;

inline LambdaTable build_lambda(std::uint64_t limit) {
    if (limit < 2) throw domain_error("build_lambda: limit must be >= 2");
    if (limit > kLambdaTableMaxLimit)
        throw resource_error(
            "build_lambda: limit exceeds the in-memory sieve budget (" +
            std::to_string(kLambdaTableMaxLimit) +
            "); use the segmented prime visitor for larger ranges");
    LambdaTable t;
    t.limit = limit;
    t.spf.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = static_cast<std::uint32_t>(i);
            t.primes.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= limit; j += i)
                if (t.spf[j] == 0) t.spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    t.prime_recip_prefix.resize(t.primes.size());
    long double acc = 0.0L;
    for (std::size_t i = 0; i < t.primes.size(); ++i) {
        acc += 1.0L / t.primes[i];
        t.prime_recip_prefix[i] = static_cast<double>(acc);
    }
    return t;
}

// Segmented sieve visitor; O(sqrt(limit)) memory.
template <class Fn>
void for_each_prime(std::uint64_t limit, Fn&& fn) {
    if (limit < 2) return;
    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<std::uint8_t> base(root + 1, 1);
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (base[i]) {
            base_primes.push_back(i);
            for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
        }
    }
    const std::uint64_t seg = 1u << 21;
    std::vector<std::uint8_t> mark(seg);
    for (std::uint64_t lo = 2; lo <= limit; lo += seg) {
        const std::uint64_t hi = std::min(limit, lo + seg - 1);
        std::fill(mark.begin(), mark.end(), 1);
        for (std::uint64_t p : base_primes) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = 0;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (mark[n - lo]) fn(n);
    }
}

namespace detail {

// sum_{p > P} p^{-2} estimated by int_P^inf dt/(t^2 log t); the estimate's
// own error (PNT fluctuation, p^-3 corrections) is ~1e-3 relative, orders
// below the budgets it enters.
inline double recip_sq_prime_tail(double P) {
    return adaptive_simpson(
               [](double u) { return u <= 0.0 ? 0.0 : 1.0 / (-std::log(u)); },
               0.0, 1.0 / P, 1e-16, 40)
        .value;
}

struct MertensAt {
    double value;
    double tail_bound;
};

inline MertensAt mertens_constant_at(std::uint64_t prime_limit) {
    Accumulator acc;
    for_each_prime(prime_limit, [&](std::uint64_t p) {
        const double x = 1.0 / static_cast<double>(p);
        acc.add(std::log1p(-x) + x);
    });
    return {kEulerGamma + acc.value(), 0.5 / static_cast<double>(prime_limit)};
}

} // namespace detail

// M = C0 + sum_p (log(1-1/p) + 1/p) ~ 0.2614972128...; absolute error < 5e-9.
inline double mertens_constant() {
    static std::once_flag flag;
    static double value;
    std::call_once(flag, [] { value = detail::mertens_constant_at(100'000'000).value; });
    return value;
}

// sum_p sum_{m>=2} 1/(m p^m) = C0 - M, summed directly (independent of the
// log-based route above); absolute error < 1e-8.
inline double prime_power_sum_constant() {
    static std::once_flag flag;
    static double value;
    std::call_once(flag, [] {
        const double P = 1e6;
        Accumulator acc;
        for_each_prime(static_cast<std::uint64_t>(P), [&](std::uint64_t p) {
            const double x = 1.0 / static_cast<double>(p);
            double xm = x * x;
            for (int m = 2; m < 80; ++m) {
                const double term = xm / m;
                if (term < 1e-20) break;
                acc.add(term);
                xm *= x;
            }
        });
        // tail: sum_{p>P} (1/(2p^2) + O(p^-3))
        value = acc.value() + 0.5 * detail::recip_sq_prime_tail(P);
    });
    return value;
}

// r(u) = sum_{p <= u} 1/p - log log u - M; left_limit excludes a prime at u.
inline double prime_recip_remainder(double u, const LambdaTable& table,
                                    bool left_limit = false) {
    if (!(u >= 2.0) || u > static_cast<double>(table.limit))
        throw domain_error("prime_recip_remainder: need 2 <= u <= table limit");
    const auto& ps = table.primes;
    std::size_t n;
    if (left_limit)
        n = std::lower_bound(ps.begin(), ps.end(), u) - ps.begin();
    else
        n = std::upper_bound(ps.begin(), ps.end(), u) - ps.begin();
    const double partial = n == 0 ? 0.0 : table.prime_recip_prefix[n - 1];
    return partial - std::log(std::log(u)) - mertens_constant();
}

struct OscIntegralResult {
    double value = 0.0;
    double tail_bound = 0.0;
};

// int_2^{u_max} r(u) sin(h log u)/u du.  Substituting v = log u, each
// inter-prime panel integrand is (C - M - log v) sin(hv) with C constant,
// integrated in closed form (the log v part via Ci).
inline OscIntegralResult r_osc_integral(double h, double u_max,
                                        const LambdaTable& table) {
    if (h < 0.0) throw domain_error("r_osc_integral: h must be >= 0");
    if (!(u_max >= 2.0) || u_max > static_cast<double>(table.limit))
        throw domain_error("r_osc_integral: need 2 <= u_max <= table limit");
    if (h == 0.0) return {0.0, 0.0};

    const double M = mertens_constant();
    const auto& ps = table.primes;
    const std::size_t np =
        std::upper_bound(ps.begin(), ps.end(), u_max) - ps.begin();

    Accumulator acc;
    double v1 = std::log(2.0);
    double ci1 = si_ci(h * v1).ci;
    double cos1 = std::cos(h * v1);
    for (std::size_t k = 0; k < np; ++k) {
        const double v2 = (k + 1 < np) ? std::log(static_cast<double>(ps[k + 1]))
                                       : std::log(u_max);
        const double v2c = std::min(v2, std::log(u_max));
        if (v2c <= v1) break;
        const double c = table.prime_recip_prefix[k] - M;
        const double ci2 = si_ci(h * v2c).ci;
        const double cos2 = std::cos(h * v2c);
        // int (c - log v) sin(hv) dv over [v1, v2c]
        const double part_c = c * (cos1 - cos2) / h;
        const double part_log = (std::log(v1) * cos1 - std::log(v2c) * cos2) / h +
                                (ci2 - ci1) / h;
        acc.add(part_c - part_log);
        v1 = v2c;
        ci1 = ci2;
        cos1 = cos2;
        if (v1 >= std::log(u_max)) break;
    }
    OscIntegralResult res;
    res.value = acc.value();
    res.tail_bound = 2.0 * (std::log(u_max) + 2.0) / std::sqrt(u_max) *
                     std::max(1.0, 1.0 / h);
    return res;
}

namespace detail {

// 2 prod_{p > 2} (1 - (p-1)^{-2}), truncated at 1e6 with a logarithmic-
// integral tail correction; absolute error < 1e-9.
inline double twin_prime_double_constant() {
    static std::once_flag flag;
    static double value;
    std::call_once(flag, [] {
        const double P = 1e6;
        Accumulator acc;
        for_each_prime(static_cast<std::uint64_t>(P), [&](std::uint64_t p) {
            if (p == 2) return;
            const double q = static_cast<double>(p) - 1.0;
            acc.add(std::log1p(-1.0 / (q * q)));
        });
        value = 2.0 * std::exp(acc.value() - recip_sq_prime_tail(P));
    });
    return value;
}

} // namespace detail

// Hardy-Littlewood singular series: 0 for odd d, else
// 2 prod_{p>2}(1-(p-1)^{-2}) prod_{p|d, p>2} (p-1)/(p-2).
inline double singular_series(std::int64_t d) {
    if (d == 0) throw domain_error("singular_series: d must be nonzero");
    std::uint64_t n = static_cast<std::uint64_t>(d < 0 ? -d : d);
    if (n % 2 == 1) return 0.0;
    double out = detail::twin_prime_double_constant();
    while (n % 2 == 0) n /= 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) {
            out *= static_cast<double>(f - 1) / static_cast<double>(f - 2);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out *= static_cast<double>(n - 1) / static_cast<double>(n - 2);
    return out;
}

struct TpcResult {
    double raw_sum = 0.0;   // sum_{n<=N} Lambda(n) Lambda(n+d)
    double sing = 0.0;      // singular series S(d)
    double ratio = 0.0;     // raw_sum / (S(d) N); NaN when flagged
    bool flagged = false;   // odd d: S = 0, ratio undefined
};

inline TpcResult tpc_ratio(std::uint64_t n_limit, std::int64_t d,
                           const LambdaTable& table) {
    if (d == 0) throw domain_error("tpc_ratio: d must be nonzero");
    const std::uint64_t ad = static_cast<std::uint64_t>(d < 0 ? -d : d);
    if (n_limit + ad > table.limit)
        throw domain_error("tpc_ratio: need n_limit + |d| <= table limit");
    Accumulator acc;
    for (std::uint32_t p : table.primes) {
        if (p > n_limit) break;
        const double logp = std::log(static_cast<double>(p));
        for (std::uint64_t q = p; q <= n_limit;) {
            const std::int64_t other = static_cast<std::int64_t>(q) + d;
            if (other >= 2) {
                const double l2 = table.lambda(static_cast<std::uint64_t>(other));
                if (l2 != 0.0) acc.add(logp * l2);
            }
            if (q > n_limit / p) break;
            q *= p;
        }
    }
    TpcResult res;
    res.raw_sum = acc.value();
    res.sing = singular_series(d);
    if (res.sing == 0.0) {
        res.flagged = true;
        res.ratio = std::numeric_limits<double>::quiet_NaN();
    } else {
        res.ratio = res.raw_sum / (res.sing * static_cast<double>(n_limit));
    }
    return res;
}

// Without x_cap: sum_{m>=2} sum_p (1 - cos(h m log p))/(m^2 p^m), to 1e-8.
// With x_cap: includes m = 1 and restricts p^m <= x_cap (finite, exact).
inline double prime_power_cos_sum(double h, std::optional<double> x_cap = std::nullopt) {
    if (h < 0.0) throw domain_error("prime_power_cos_sum: h must be >= 0");
    if (h == 0.0) return 0.0;
    Accumulator acc;
    if (x_cap) {
        const double x = *x_cap;
        if (x < 2.0) return 0.0;
        for_each_prime(static_cast<std::uint64_t>(x), [&](std::uint64_t p) {
            const double lp = std::log(static_cast<double>(p));
            double pm = static_cast<double>(p);
            for (int m = 1; pm <= x; ++m) {
                acc.add((1.0 - std::cos(h * m * lp)) / (m * m * pm));
                if (pm > x / static_cast<double>(p)) break;
                pm *= static_cast<double>(p);
            }
        });
        return acc.value();
    }
    static std::once_flag flag;
    static std::vector<std::uint32_t> plist;
    std::call_once(flag, [] {
        for_each_prime(6'000'000, [&](std::uint64_t p) {
            plist.push_back(static_cast<std::uint32_t>(p));
        });
    });
    for (std::uint32_t p : plist) {
        const double lp = std::log(static_cast<double>(p));
        const double x = 1.0 / static_cast<double>(p);
        double xm = x * x;
        for (int m = 2; m < 80; ++m) {
            const double term = (1.0 - std::cos(h * m * lp)) * xm / (m * m);
            acc.add(term);
            if (xm / (m * m) < 5e-21) break;
            xm *= x;
        }
    }
    return acc.value();
}

struct S4S5Direct {
    double s4_over_t_pi2 = 0.0; // the S4 bracket, without the T/pi^2 factor
    double s5_over_t_pi2 = 0.0;
};

// S4 = (T/pi^2) sum_{p<=x} (cos(h log p) - 1)/p [f^2 - 2f](log p / log x),
// S5 likewise over prime powers p^m <= x with argument m log p / log x.
inline S4S5Direct s4_s5_direct(double x, double h, const LambdaTable& table) {
    if (!(x >= 2.0) || x > static_cast<double>(table.limit))
        throw domain_error("s4_s5_direct: need 2 <= x <= table limit");
    if (h < 0.0) throw domain_error("s4_s5_direct: h must be >= 0");
    const double lx = std::log(x);
    Accumulator a4, a5;
    for (std::uint32_t p : table.primes) {
        if (static_cast<double>(p) > x) break;
        const double lp = std::log(static_cast<double>(p));
        {
            const double fu = kernel_f(lp / lx);
            a4.add((std::cos(h * lp) - 1.0) / static_cast<double>(p) *
                   (fu * fu - 2.0 * fu));
        }
        double pm = static_cast<double>(p) * p;
        for (int m = 2; pm <= x; ++m) {
            const double fu = kernel_f(m * lp / lx);
            a5.add((std::cos(h * m * lp) - 1.0) / (m * m * pm) *
                   (fu * fu - 2.0 * fu));
            if (pm > x / static_cast<double>(p)) break;
            pm *= static_cast<double>(p);
        }
    }
    return {a4.value(), a5.value()};
}

} // namespace zetashift

#endif
