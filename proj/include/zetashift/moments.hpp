// Assembly of the explicit second-moment formula for S(t+h) - S(t).
//
// The right-hand side has nine displayed terms (C = T/pi^2, L = log(T/2pi)):
//
//   T1 =  C int_0^{hL} (1-cos a)/a da
//   T2 =  C int_1^inf (F - F_h)(a)/a^2 da
//   T3 =  C [log log 2 + C0 - sum_{m>=2} sum_p 1/(m p^m)] (1 - cos(h log 2))
//   T4 = -C int_0^{h log 2} (1-cos a)/a da
//   T5 = -C h int_2^inf r(u) sin(h log u)/u du
//   T6 =  C sum_{m>=2} sum_p (1 - cos(h m log p))/(m^2 p^m)
//   T7 =  T h sin(hL) / (pi^2 (4+h^2) L)
//   T8 =  (C/L^2) h^2 (20+3h^2) / (4 (4+h^2)^2)
//   T9 = -(3C/(2L^2)) int_1^inf (F - F_h)(a)/a^4 da
//
// and equals int_0^T (S(t+h)-S(t))^2 dt up to O(T/L^2).  The alternative
// cosine-integral form replaces T3..T6 by
//
//   C [ sum_{m>=1} sum_{p^m <= x} (1-cos(h m log p))/(m^2 p^m)
//       + Ci(h log x) - log(h log x) - C0 ],
//
// exact up to  -h int_x^inf r(u) sin(h log u)/u du - (1-cos(h log x)) r(x)
// + the m>=2 prime powers above x, all of which are computed or bounded here
// and carried as the equivalence budget.

#ifndef ZETASHIFT_MOMENTS_HPP
#define ZETASHIFT_MOMENTS_HPP

#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "zetashift/kernels.hpp"
#include "zetashift/paircorr.hpp"
#include "zetashift/primes.hpp"
#include "zetashift/special.hpp"
#include "zetashift/zeros.hpp"

namespace zetashift {

struct MomentMetadata {
    double t2_lower = 0.0, t2_upper = 0.0; // bracket, in T2's units
    double t9_lower = 0.0, t9_upper = 0.0; // bracket, in T9's units
    double t5_tail_bound = 0.0;
    double t6_tail_bound = 0.0;
    double sliver_bound = 0.0;    // omitted [0, t_min) piece of the lhs
    double ci_equiv_bound = 0.0;  // budget for |theorem form - Ci form|
};

struct MomentReport {
    double h = 0.0;
    double T = 0.0;
    double bigL = 0.0;
    double lhs = std::numeric_limits<double>::quiet_NaN();
    std::array<double, 9> terms{};
    double rhs_total = 0.0;
    double residual = std::numeric_limits<double>::quiet_NaN();
    double residual_norm = std::numeric_limits<double>::quiet_NaN();
    bool flagged = false; // Ci form at h = 0 (limit returned)
    MomentMetadata metadata{};

    void finalize_totals() {
        double s = 0.0;
        for (double t : terms) s += t; // fixed accumulation order T1..T9
        rhs_total = s;
        if (lhs == lhs) {
            residual = lhs - rhs_total;
            residual_norm = std::abs(residual) * bigL * bigL / T;
        }
    }
};

struct MomentOptions {
    double T = 0.0;        // 0: floor((t_max - h)/t_grid) * t_grid
    double t_grid = 1.0;
    double a_max = 10.0;
    double kappa = 0.125;
    PairSumConfig pair{};
    const LambdaTable* table = nullptr; // required (T5)
    double r_u_max = 0.0;  // 0: table->limit
    unsigned workers = 0;  // lhs moment integration
    int gauss_order = 8;
    // reuse of an already-computed alpha-tail pair (they are by far the most
    // expensive ingredient and are shared between the two formula forms)
    const TailIntegralPair* tails = nullptr;
};

// documented truncation budget of prime_power_cos_sum without a cap
inline constexpr double kPrimePowerCosTail = 1e-8;

namespace detail {

inline double effective_t(const ZeroSet& zs, double h, const MomentOptions& o) {
    if (o.T > 0.0) {
        if (o.T + h > zs.t_max)
            throw data_error("moment: zeros do not cover T + h");
        return o.T;
    }
    const double grid = o.t_grid > 0.0 ? o.t_grid : 1.0;
    return std::floor((zs.t_max - h) / grid) * grid;
}

inline const LambdaTable& require_table(const MomentOptions& o) {
    if (!o.table)
        throw usage_error("moment options: a LambdaTable is required");
    return *o.table;
}

// (1 - cos(y alpha)) / alpha with the small-argument series
inline double one_minus_cos_over(double y, double alpha) {
    const double x = y * alpha;
    if (std::abs(x) < 1e-4)
        return 0.5 * y * x * (1.0 - x * x / 12.0);
    return (1.0 - std::cos(x)) / alpha;
}

// int_0^beta (1-cos(hL a))/a [1 - f(a/beta)]^2 da  (smooth integrand)
inline double taper_moment_quad(double beta, double h, double L) {
    const double hl = h * L;
    const int panels = std::max(12, static_cast<int>(hl * beta / 2.0) + 1);
    return integrate_gauss_panels(
        [&](double a) {
            const double t = 1.0 - kernel_f(a / beta);
            return one_minus_cos_over(hl, a) * t * t;
        },
        0.0, beta, panels, 16);
}

// 2 sum_{m>=2, p^m > x} 1/(m^2 p^m): the prime-power mass the capped sum
// drops; exact-ish for p <= 1e4, analytic remainder beyond.
inline double pp_m2_tail_beyond(double x) {
    Accumulator acc;
    for_each_prime(10'000, [&](std::uint64_t p) {
        const double xp = 1.0 / static_cast<double>(p);
        double pm = xp * xp;
        for (int m = 2; m < 80; ++m) {
            if (std::pow(static_cast<double>(p), m) > x) acc.add(pm / (m * m));
            if (pm / (m * m) < 1e-20) break;
            pm *= xp;
        }
    });
    // p > 1e4 (all have p^2 > x only when x < 1e8; keep the conservative add)
    acc.add(0.3 * recip_sq_prime_tail(1e4));
    return 2.0 * acc.value();
}

} // namespace detail

// Right-hand side of the second-moment formula; lhs left unset.
inline MomentReport theorem1_rhs(const ZeroSet& zs, double h,
                                 const MomentOptions& opt) {
    if (h < 0.0) throw domain_error("theorem1_rhs: h must be >= 0");
    const LambdaTable& table = detail::require_table(opt);
    MomentReport rep;
    rep.h = h;
    rep.T = detail::effective_t(zs, h, opt);
    ZeroSet zt = zs.truncated(rep.T);
    rep.bigL = std::log(rep.T / (2.0 * M_PI));
    if (h == 0.0) {
        rep.finalize_totals();
        return rep;
    }
    const double C = rep.T / (M_PI * M_PI);
    const double L = rep.bigL;

    rep.terms[0] = C * one_minus_cos_integral(h * L);

    TailIntegralOptions topt;
    topt.kappa = opt.kappa;
    topt.pair = opt.pair;
    TailIntegralPair tails_local;
    const TailIntegralPair* tails = opt.tails;
    if (!tails) {
        tails_local = tail_integral_both(zt, h, opt.a_max, topt);
        tails = &tails_local;
    }
    const auto& tp2 = tails->p2;
    rep.terms[1] = C * tp2.value;
    rep.metadata.t2_lower = C * tp2.lower;
    rep.metadata.t2_upper = C * tp2.upper;

    const double a_const =
        std::log(std::log(2.0)) + kEulerGamma - prime_power_sum_constant();
    rep.terms[2] = C * a_const * (1.0 - std::cos(h * std::log(2.0)));

    rep.terms[3] = -C * one_minus_cos_integral(h * std::log(2.0));

    const double u_max = opt.r_u_max > 0.0
                             ? opt.r_u_max
                             : static_cast<double>(table.limit);
    auto rosc = r_osc_integral(h, u_max, table);
    rep.terms[4] = -C * h * rosc.value;
    rep.metadata.t5_tail_bound = C * h * rosc.tail_bound;

    rep.terms[5] = C * prime_power_cos_sum(h);
    rep.metadata.t6_tail_bound = C * kPrimePowerCosTail;

    const double h2 = h * h;
    rep.terms[6] = rep.T * h * std::sin(h * L) / (M_PI * M_PI * (4.0 + h2) * L);
    rep.terms[7] =
        C / (L * L) * h2 * (20.0 + 3.0 * h2) / (4.0 * (4.0 + h2) * (4.0 + h2));

    const auto& tp4 = tails->p4;
    const double coef9 = 3.0 * C / (2.0 * L * L);
    rep.terms[8] = -coef9 * tp4.value;
    rep.metadata.t9_lower = -coef9 * tp4.upper;
    rep.metadata.t9_upper = -coef9 * tp4.lower;

    rep.finalize_totals();
    return rep;
}

// Full check: fills the left side from the panel-exact moment integral.
inline MomentReport verify_theorem1(const ZeroSet& zs, double h,
                                    const MomentOptions& opt) {
    MomentReport rep = theorem1_rhs(zs, h, opt);
    SecondMomentOptions sm;
    sm.workers = opt.workers;
    sm.gauss_order = opt.gauss_order;
    auto lhs = second_moment_diff(zs, h, rep.T, sm);
    rep.lhs = lhs.value;
    rep.metadata.sliver_bound = lhs.sliver_bound;
    rep.finalize_totals();
    return rep;
}

// Cosine-integral restatement; default x = sqrt(T/2pi).
inline MomentReport theorem1_ci_form(const ZeroSet& zs, double h,
                                     const MomentOptions& opt,
                                     double x = 0.0) {
    const LambdaTable& table = detail::require_table(opt);
    MomentReport rep;
    rep.h = h;
    rep.T = detail::effective_t(zs, h, opt);
    rep.bigL = std::log(rep.T / (2.0 * M_PI));
    if (h == 0.0) { // log(h log x) has no finite value; the limit is zero
        rep.flagged = true;
        rep.finalize_totals();
        return rep;
    }
    if (x <= 0.0) x = std::sqrt(rep.T / (2.0 * M_PI));
    ZeroSet zt = zs.truncated(rep.T);
    const double C = rep.T / (M_PI * M_PI);
    const double L = rep.bigL;
    const double hlx = h * std::log(x);

    rep.terms[0] = C * one_minus_cos_integral(h * L);

    TailIntegralOptions topt;
    topt.kappa = opt.kappa;
    topt.pair = opt.pair;
    TailIntegralPair tails_local;
    const TailIntegralPair* tails = opt.tails;
    if (!tails) {
        tails_local = tail_integral_both(zt, h, opt.a_max, topt);
        tails = &tails_local;
    }
    const auto& tp2 = tails->p2;
    rep.terms[1] = C * tp2.value;
    rep.metadata.t2_lower = C * tp2.lower;
    rep.metadata.t2_upper = C * tp2.upper;

    rep.terms[2] = C * (prime_power_cos_sum(h, x) + si_ci(hlx).ci -
                        std::log(hlx) - kEulerGamma);

    const double h2 = h * h;
    rep.terms[6] = rep.T * h * std::sin(h * L) / (M_PI * M_PI * (4.0 + h2) * L);
    rep.terms[7] =
        C / (L * L) * h2 * (20.0 + 3.0 * h2) / (4.0 * (4.0 + h2) * (4.0 + h2));

    const auto& tp4 = tails->p4;
    const double coef9 = 3.0 * C / (2.0 * L * L);
    rep.terms[8] = -coef9 * tp4.value;
    rep.metadata.t9_lower = -coef9 * tp4.upper;
    rep.metadata.t9_upper = -coef9 * tp4.lower;

    // exact-difference budget versus the theorem form:
    //   h int_x^{u_max} r sin(h log u)/u du + (1-cos(h log x)) r(x)
    //   + dropped prime powers + the r-integral tails
    const double u_max = opt.r_u_max > 0.0
                             ? opt.r_u_max
                             : static_cast<double>(table.limit);
    auto ro_full = r_osc_integral(h, u_max, table);
    auto ro_x = r_osc_integral(h, x, table);
    const double rx = prime_recip_remainder(x, table);
    rep.metadata.ci_equiv_bound =
        C * (h * (std::abs(ro_full.value - ro_x.value) + ro_full.tail_bound) +
             2.0 * std::abs(rx) + detail::pp_m2_tail_beyond(x) +
             kPrimePowerCosTail);

    rep.finalize_totals();
    return rep;
}

struct FujiiResult {
    double value = 0.0;
    bool large_h_flag = false; // baseline derived for h = o(1): flag h > 10/L
    double tail_envelope = 0.0;
};

// Small-shift baseline: C [ Cin(hL) + int_1^inf F(a)(1 - cos(a h L))/a^2 da ],
// the tail evaluated per pair over sub-blocks with the midpoint weight.
inline FujiiResult fujii_rhs(const ZeroSet& zs, double h,
                             const MomentOptions& opt) {
    if (!(h >= 0.0)) throw domain_error("fujii_rhs: h must be >= 0");
    FujiiResult out;
    if (h == 0.0) return out;
    const double T = detail::effective_t(zs, h, opt);
    ZeroSet zt = zs.truncated(T);
    const double L = std::log(T / (2.0 * M_PI));
    const double C = T / (M_PI * M_PI);
    out.large_h_flag = h > 10.0 / L;

    const double kappa = opt.kappa;
    const std::size_t n_blocks =
        static_cast<std::size_t>(std::ceil((opt.a_max - 1.0) / kappa - 1e-12));
    auto bs = detail::pair_block_sums(zt, 1.0, kappa, n_blocks, h, opt.pair);
    const double norm = detail::tl_over_2pi(zt);
    Accumulator tail;
    for (std::size_t m = 0; m < n_blocks; ++m) {
        const double mid = 1.0 + (static_cast<double>(m) + 0.5) * kappa;
        tail.add(bs.f_blocks[m] / norm * (1.0 - std::cos(mid * h * L)) /
                 (mid * mid));
    }
    out.value = C * (one_minus_cos_integral(h * L) + tail.value());
    // beyond a_max: |int F (1-cos)/a^2| <= 2 * (unit-block F mass) sum c^-2;
    // the same uniform per-block bound as the difference envelope applies
    out.tail_envelope =
        C * 2.0 * (16.0 / 3.0 + 0.5) * detail::zeta_tail(opt.a_max, 2);
    return out;
}

// Direct spectral form of the kernel-transform difference
//   S3 = (2/(pi^2 log x)) sum [khat((g-g') log x) - khat((g-g'-h) log x)].
inline double s3_direct(const ZeroSet& zs, double beta, double h,
                        const PairSumConfig& cfg = {}) {
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("s3_direct: beta must lie in (0, 1)");
    const double L = detail::big_l(zs);
    const double lx = beta * L;
    const std::size_t n = zs.count();
    const double span = zs.gammas.back() - zs.gammas.front();
    CachedKhat cache((span + std::abs(h) + 1.0) * lx);

    auto sums = detail::pair_sweep(
        zs.gammas, cfg, 1, [&](double delta, Accumulator* acc) {
            acc[0].add(2.0 * cache.khat(delta * lx) -
                       cache.khat((delta - h) * lx) -
                       cache.khat((delta + h) * lx));
        });
    const double diag =
        static_cast<double>(n) * (cache.khat(0.0) - cache.khat(h * lx));
    return 2.0 / (M_PI * M_PI * lx) * (sums[0] + diag);
}

// Closed form for S3 up to O(beta^-1 L^-2) errors.
inline double s3_formula(const ZeroSet& zs, double beta, double h,
                         const MomentOptions& opt) {
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("s3_formula: beta must lie in (0, 1)");
    const double T = zs.t_max;
    const double L = detail::big_l(zs);
    const double C = T / (M_PI * M_PI);
    const double h2 = h * h;

    const double quad1 = detail::taper_moment_quad(beta, h, L);
    const double quad2 =
        one_minus_cos_integral(h * L) - one_minus_cos_integral(h * L * beta);

    TailIntegralOptions topt;
    topt.kappa = opt.kappa;
    topt.pair = opt.pair;
    TailIntegralPair tails_local;
    const TailIntegralPair* tails = opt.tails;
    if (!tails) {
        tails_local = tail_integral_both(zs, h, opt.a_max, topt);
        tails = &tails_local;
    }
    const auto& tp2 = tails->p2;
    const auto& tp4 = tails->p4;

    return C * quad1 + C * quad2 + C * tp2.value +
           T * h * std::sin(h * L) / (M_PI * M_PI * (4.0 + h2) * L) +
           3.0 * T / (4.0 * M_PI * M_PI * L * L) -
           T * (12.0 + h2) * std::cos(h * L) /
               (M_PI * M_PI * (4.0 + h2) * (4.0 + h2) * L * L) -
           3.0 * T / (2.0 * M_PI * M_PI * L * L) * tp4.value;
}

struct S4S5Formula {
    double s4 = 0.0;
    double s5 = 0.0;
};

// Right-hand sides of the partial-summation forms of S4 and S5 (without
// their big-O terms); T and L are free parameters, beta = log x / L.
inline S4S5Formula s4_s5_formula(double T, double bigL, double x, double h,
                                 const LambdaTable& table) {
    if (!(x >= 2.0)) throw domain_error("s4_s5_formula: x must be >= 2");
    if (h < 0.0) throw domain_error("s4_s5_formula: h must be >= 0");
    const double C = T / (M_PI * M_PI);
    if (h == 0.0) return {0.0, 0.0};
    const double beta = std::log(x) / bigL;
    const double a_const =
        std::log(std::log(2.0)) + kEulerGamma - prime_power_sum_constant();
    auto rosc = r_osc_integral(h, static_cast<double>(table.limit), table);

    S4S5Formula out;
    out.s4 = C * a_const * (1.0 - std::cos(h * std::log(2.0))) +
             C * one_minus_cos_integral(h * std::log(x)) -
             C * detail::taper_moment_quad(beta, h, bigL) -
             C * one_minus_cos_integral(h * std::log(2.0)) -
             C * h * rosc.value;
    out.s5 = C * prime_power_cos_sum(h);
    return out;
}

// Kernel-transform identity check: the unweighted khat pair sum against its
// three-term representation through the empirical pair correlation.
// Returns |LHS - RHS| / |LHS|.
inline double lemma_21_22_check(const ZeroSet& zs, double beta, double h,
                                const PairSumConfig& cfg = {}) {
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("lemma_21_22_check: beta must lie in (0, 1)");
    const double T = zs.t_max;
    const double L = detail::big_l(zs);
    const double lx = beta * L;
    const std::size_t n = zs.count();
    const double span = zs.gammas.back() - zs.gammas.front();
    CachedKhat cache((span + std::abs(h) + 1.0) * lx);

    auto sums = detail::pair_sweep(
        zs.gammas, cfg, 3, [&](double delta, Accumulator* acc) {
            const double om[2] = {delta - h, delta + h};
            for (double o : om) {
                const double y = o * lx;
                const double w = kernel_w(o);
                const double kh = cache.khat(y);
                acc[0].add(kh);
                acc[1].add(w * kh);
                acc[2].add(w * cache.khat_dd(y));
            }
        });
    const double yd = h * lx;
    const double lhs = sums[0] + static_cast<double>(n) * cache.khat(yd);
    const double a_term =
        sums[1] + static_cast<double>(n) * kernel_w(h) * cache.khat(yd);
    const double c_term =
        (sums[2] + static_cast<double>(n) * kernel_w(h) * cache.khat_dd(yd)) /
        (16.0 * M_PI * M_PI * L * L * beta * beta);
    const double b_term = M_PI * M_PI * T / (16.0 * L) *
                          f_scaled(zs, beta, h, cfg) / (beta * beta);
    const double rhs = a_term + b_term - c_term;
    return std::abs(lhs - rhs) / std::abs(lhs);
}

} // namespace zetashift

#endif
