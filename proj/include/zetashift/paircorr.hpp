// The pair-correlation engine.
//
// Everything here reduces to sums over ordered pairs (gamma, gamma') of zero
// ordinates up to T, with the damping weight w(u) = 4/(4+u^2):
//
//   F_h(x, T)   = sum cos((gamma - gamma' - h) log x) w(gamma - gamma' - h)
//   F_h(alpha)  = (TL/2pi)^{-1} F_h((T/2pi)^alpha, T),   L = log(T/2pi)
//
// plus Fejer/sinc^2-weighted variants and alpha-integrals of F - F_h over
// blocks, which are evaluated per pair in closed form:
//
//   int_c^{c+k} cos(w L a) da = k sinc(w L k / 2) cos(w L (c + k/2)).
//
// Enumeration visits each unordered pair once (both orders are folded in
// analytically; the double sums are even in the gap), optionally banded to
// |gamma - gamma'| <= window with a dyadic-shell bound on the discarded
// weight.  Reductions are block-deterministic: results do not depend on the
// worker count.

#ifndef ZETASHIFT_PAIRCORR_HPP
#define ZETASHIFT_PAIRCORR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "zetashift/errors.hpp"
#include "zetashift/kernels.hpp"
#include "zetashift/quadrature.hpp"
#include "zetashift/summation.hpp"
#include "zetashift/zeros.hpp"

namespace zetashift {

struct PairSumConfig {
    enum class Mode { exact, windowed };
    Mode mode = Mode::exact;
    double window = 0.0;    // max |gamma - gamma'| kept (windowed mode)
    std::size_t block = 64; // rows per reduction block (fixed, not per-worker)
    unsigned workers = 0;   // 0 = hardware concurrency

    static PairSumConfig exact_all(unsigned workers = 0) {
        PairSumConfig c;
        c.workers = workers;
        return c;
    }
    static PairSumConfig banded(double window, unsigned workers = 0) {
        PairSumConfig c;
        c.mode = Mode::windowed;
        c.window = window;
        c.workers = workers;
        return c;
    }
};

struct PairCorrValue {
    double value = 0.0;
    double truncation_bound = 0.0; // 0 in exact mode
    std::size_t pair_count_used = 0; // ordered pairs, diagonal included
};

struct TailIntegralResult {
    int exponent = 2;
    double a_max = 0.0;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

namespace detail {

inline void validate_pair_cfg(const PairSumConfig& cfg, double h) {
    if (cfg.mode == PairSumConfig::Mode::windowed && cfg.window <= std::abs(h))
        throw usage_error("windowed pair sum: window must exceed |h|");
}

// Visits every unordered pair i < j (gap delta = g[j] - g[i] > 0, within the
// band in windowed mode); per_pair(delta, acc) accumulates into n_out slots.
template <class PerPair>
std::vector<double> pair_sweep(const std::vector<double>& g,
                               const PairSumConfig& cfg, std::size_t n_out,
                               PerPair&& per_pair) {
    const std::size_t n = g.size();
    const bool banded = cfg.mode == PairSumConfig::Mode::windowed;
    const double window = cfg.window;
    auto block_fn = [&](std::size_t, std::size_t i0, std::size_t i1,
                        Accumulator* acc) {
        for (std::size_t i = i0; i < i1; ++i) {
            const double gi = g[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                const double delta = g[j] - gi;
                if (banded && delta > window) break;
                per_pair(delta, acc);
            }
        }
    };
    return block_parallel_reduce(n, cfg.block, n_out, cfg.workers, block_fn);
}

// Dyadic-shell bound on the total w-envelope of the discarded pairs:
// each unordered pair with gap delta > window contributes both orders,
// each at most 4/(4 + (delta - |h|)^2).
inline double excluded_pair_weight(const std::vector<double>& g, double window,
                                   double h) {
    if (g.size() < 2) return 0.0;
    const double span = g.back() - g.front();
    double bound = 0.0;
    double lo = window;
    while (lo < span) {
        const double hi = 2.0 * lo;
        std::size_t count = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto lo_it = std::upper_bound(g.begin() + i + 1, g.end(), g[i] + lo);
            auto hi_it = std::upper_bound(g.begin() + i + 1, g.end(), g[i] + hi);
            count += static_cast<std::size_t>(hi_it - lo_it);
        }
        const double d = std::max(lo - std::abs(h), 0.0);
        bound += 2.0 * static_cast<double>(count) * 4.0 / (4.0 + d * d);
        lo = hi;
    }
    return bound;
}

inline double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

inline double big_l(const ZeroSet& zs) {
    if (!(zs.t_max > 2.0 * M_PI * M_E))
        throw domain_error("scaled pair correlation needs T > 2 pi e");
    return std::log(zs.t_max / (2.0 * M_PI));
}

inline double tl_over_2pi(const ZeroSet& zs) {
    return zs.t_max * big_l(zs) / (2.0 * M_PI);
}

} // namespace detail

// F_h(x, T): full double sum over ordered pairs, diagonal included.
inline PairCorrValue f_pair_sum(const ZeroSet& zs, double x, double h,
                                const PairSumConfig& cfg = {}) {
    if (!(x >= 1.0)) throw domain_error("f_pair_sum: x must be >= 1");
    detail::validate_pair_cfg(cfg, h);
    const double lx = std::log(x);
    const std::size_t n = zs.count();

    auto sums = detail::pair_sweep(
        zs.gammas, cfg, 2, [&](double delta, Accumulator* acc) {
            acc[0].add(std::cos((delta - h) * lx) * kernel_w(delta - h) +
                       std::cos((delta + h) * lx) * kernel_w(delta + h));
            acc[1].add(1.0);
        });

    PairCorrValue out;
    out.value = sums[0] + static_cast<double>(n) * std::cos(h * lx) * kernel_w(h);
    out.pair_count_used = 2 * static_cast<std::size_t>(sums[1]) + n;
    if (cfg.mode == PairSumConfig::Mode::windowed)
        out.truncation_bound = detail::excluded_pair_weight(zs.gammas, cfg.window, h);
    return out;
}

// Scaled form F_h(alpha) at x = (T/2pi)^{|alpha|}; even in alpha.
inline double f_scaled(const ZeroSet& zs, double alpha, double h,
                       const PairSumConfig& cfg = {}) {
    const double L = detail::big_l(zs);
    const double x = std::exp(std::abs(alpha) * L);
    return f_pair_sum(zs, x, h, cfg).value / detail::tl_over_2pi(zs);
}

struct ScaledSweepResult {
    std::vector<double> alphas;
    std::vector<double> f;        // F(alpha), scaled
    std::vector<double> f_h;      // F_h(alpha), scaled
    double bound_f = 0.0;         // windowed-truncation bound on each F value
    double bound_f_h = 0.0;
};

// F(alpha) and F_h(alpha) on a uniform alpha grid in one pass, using one
// phase rotation per pair and frequency.
inline ScaledSweepResult f_scaled_sweep(const ZeroSet& zs, double alpha0,
                                        double dalpha, std::size_t n_alpha,
                                        double h, const PairSumConfig& cfg = {}) {
    if (n_alpha == 0) throw usage_error("f_scaled_sweep: empty grid");
    if (alpha0 < 0.0) throw domain_error("f_scaled_sweep: alpha must be >= 0");
    detail::validate_pair_cfg(cfg, h);
    const double L = detail::big_l(zs);
    const double norm = detail::tl_over_2pi(zs);
    const std::size_t n = zs.count();

    auto sums = detail::pair_sweep(
        zs.gammas, cfg, 2 * n_alpha, [&](double delta, Accumulator* acc) {
            const double om[3] = {delta, delta - h, delta + h};
            const double wts[3] = {2.0 * kernel_w(delta), kernel_w(delta - h),
                                   kernel_w(delta + h)};
            for (int r = 0; r < 3; ++r) {
                const double f0 = om[r] * L * alpha0;
                const double fd = om[r] * L * dalpha;
                double c = std::cos(f0), s = std::sin(f0);
                const double cd = std::cos(fd), sd = std::sin(fd);
                Accumulator* slot = (r == 0) ? acc : acc + n_alpha;
                const double wt = wts[r];
                for (std::size_t m = 0; m < n_alpha; ++m) {
                    slot[m].add(wt * c);
                    const double c2 = c * cd - s * sd;
                    s = s * cd + c * sd;
                    c = c2;
                }
            }
        });

    ScaledSweepResult out;
    out.alphas.resize(n_alpha);
    out.f.resize(n_alpha);
    out.f_h.resize(n_alpha);
    for (std::size_t m = 0; m < n_alpha; ++m) {
        const double alpha = alpha0 + dalpha * static_cast<double>(m);
        out.alphas[m] = alpha;
        out.f[m] = (sums[m] + static_cast<double>(n)) / norm;
        out.f_h[m] = (sums[n_alpha + m] +
                      static_cast<double>(n) * kernel_w(h) * std::cos(h * L * alpha)) /
                     norm;
    }
    if (cfg.mode == PairSumConfig::Mode::windowed) {
        out.bound_f =
            detail::excluded_pair_weight(zs.gammas, cfg.window, 0.0) / norm;
        out.bound_f_h =
            detail::excluded_pair_weight(zs.gammas, cfg.window, h) / norm;
    }
    return out;
}

enum class ModelRegime { below_boundary, above_boundary };

struct ModelValue {
    double value = 0.0;
    ModelRegime regime = ModelRegime::below_boundary;
    double err_order_power = 0.0;  // order of the T^{-(1/2)alpha}-type term
    double err_order_alpha = 0.0;  // order of the alpha T^{alpha-1}-type term
};

// Main-term model for F_h(alpha) on 0 <= alpha <= 1, regime split at
// 1 - 3 log log T / log T.
inline ModelValue f_model(double alpha, double h, double T) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw domain_error("f_model: alpha must lie in [0, 1]");
    if (!(T > 2.0 * M_PI * M_E)) throw domain_error("f_model: T too small");
    const double L = std::log(T / (2.0 * M_PI));
    const double eps_t = 3.0 * std::log(std::log(T)) / std::log(T);
    ModelValue out;
    const double main1 = 4.0 * std::cos(h * L * alpha) / (4.0 + h * h) * alpha -
                         8.0 * h * std::sin(h * L * alpha) /
                             ((4.0 + h * h) * (4.0 + h * h)) / L;
    if (alpha <= 1.0 - eps_t) {
        out.regime = ModelRegime::below_boundary;
        out.value = main1 + std::pow(T / (2.0 * M_PI), -2.0 * alpha) * (L - 2.0);
        out.err_order_power = std::pow(T, -0.5 * alpha) / L;
        out.err_order_alpha = alpha * std::pow(T, alpha - 1.0);
    } else {
        out.regime = ModelRegime::above_boundary;
        out.value = 4.0 * std::cos(h * L * alpha) / (4.0 + h * h) * alpha;
        out.err_order_power = std::pow(T, -0.5 * alpha) / L;
        out.err_order_alpha = alpha * std::pow(T, alpha - 1.0) / L;
    }
    return out;
}

struct L2OracleResult {
    double value = 0.0;      // (1/pi) int |L(x,t) - L(x,t-h)|^2 dt  = F - F_h
    double abs_tol = 0.0;    // quadrature budget used
    double tail_bound = 0.0; // bound on the omitted |t| -> inf part
    bool converged = true;
};

// Independent oracle for F(x,T) - F_h(x,T) via the resolvent-like sum
// L(x,t) = sum_gamma x^{i(gamma-t)} / (1 + (t-gamma)^2).
inline L2OracleResult f_diff_via_l2(const ZeroSet& zs, double x, double h,
                                    double rel_tol = 1e-4) {
    if (!(x >= 1.0)) throw domain_error("f_diff_via_l2: x must be >= 1");
    L2OracleResult out;
    if (h == 0.0) return out;
    const std::size_t n = zs.count();
    const double lx = std::log(x);

    std::vector<std::complex<double>> phase(n);
    for (std::size_t i = 0; i < n; ++i)
        phase[i] = std::polar(1.0, zs.gammas[i] * lx);

    auto a_of_t = [&](double t) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            const double d = t - zs.gammas[i];
            acc += phase[i] / (1.0 + d * d);
        }
        return acc;
    };
    const std::complex<double> shift = std::polar(1.0, h * lx);
    auto integrand = [&](double t) {
        return std::norm(a_of_t(t) - shift * a_of_t(t - h));
    };

    const double scale = static_cast<double>(n); // diagonal-order magnitude
    out.abs_tol = 0.25 * rel_tol * scale;
    const double t0 = std::max(
        50.0, std::cbrt(8.0 * scale * scale / (3.0 * out.abs_tol)));
    const double lo = zs.gammas.front() - t0;
    const double hi = zs.gammas.back() + t0 + h;
    out.tail_bound = 8.0 * scale * scale / (3.0 * t0 * t0 * t0) / M_PI;

    const int min_depth =
        static_cast<int>(std::ceil(std::log2((hi - lo) / 0.4)));
    auto quad = adaptive_simpson(integrand, lo, hi, out.abs_tol, 40, min_depth);
    out.value = quad.value / M_PI;
    out.converged = quad.converged;
    return out;
}

struct FejerBlockResult {
    double rhs_pair_sum = 0.0;
    std::optional<double> lhs_quadrature;
};

// Tent-weighted block integral of F_h around c versus its closed pair-sum
// form: int_{c-1}^{c+1} F_h(a)(1 - |a-c|) da equals the cos(.Lc) sinc^2 sum.
inline FejerBlockResult fejer_block(const ZeroSet& zs, double c, double h,
                                    bool want_lhs = false,
                                    const PairSumConfig& cfg = {}) {
    const double L = detail::big_l(zs);
    const double norm = detail::tl_over_2pi(zs);
    const std::size_t n = zs.count();
    detail::validate_pair_cfg(cfg, h);

    auto term = [&](double om) {
        const double s = detail::sinc(0.5 * om * L);
        return std::cos(om * L * c) * s * s * kernel_w(om);
    };
    auto sums = detail::pair_sweep(zs.gammas, cfg, 1,
                                   [&](double delta, Accumulator* acc) {
                                       acc[0].add(term(delta - h) + term(delta + h));
                                   });
    FejerBlockResult out;
    out.rhs_pair_sum = (sums[0] + static_cast<double>(n) * term(h)) / norm;

    if (want_lhs) {
        if (n > 100)
            throw usage_error(
                "fejer_block: tent-weighted quadrature of the empirical "
                "F_h(alpha) is refused above 100 zeros (the integrand carries "
                "pair frequencies up to gamma_N * L; use the pair-sum form)");
        // piecewise-smooth: split at the tent kink and at alpha = 0
        std::vector<double> cuts = {c - 1.0, c + 1.0};
        if (c - 1.0 < 0.0 && 0.0 < c + 1.0) cuts.push_back(0.0);
        if (c - 1.0 < c && c < c + 1.0) cuts.push_back(c);
        std::sort(cuts.begin(), cuts.end());
        const double freq = (zs.gammas.back() + std::abs(h)) * L;
        Accumulator acc;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            acc.add(integrate_oscillatory(
                [&](double a) {
                    return f_scaled(zs, a, h) * (1.0 - std::abs(a - c));
                },
                cuts[i], cuts[i + 1], freq, 6.0, 16));
        }
        out.lhs_quadrature = acc.value();
    }
    return out;
}

struct FormFactorResult {
    double empirical = 0.0;
    double predicted = 0.0;
};

// sinc^2-weighted pair sum at scale beta versus its main-term prediction
// 1/beta + (8 beta/(4+h^2)) (2 sinc(hL beta) - 1 - cos(hL beta))/(hL beta)^2.
inline FormFactorResult form_factor(const ZeroSet& zs, double beta, double h,
                                    const PairSumConfig& cfg = {}) {
    if (!(beta > 0.0 && beta <= 1.0))
        throw domain_error("form_factor: beta must lie in (0, 1]");
    detail::validate_pair_cfg(cfg, h);
    const double L = detail::big_l(zs);
    const double norm = detail::tl_over_2pi(zs);
    const std::size_t n = zs.count();

    auto term = [&](double om) {
        const double s = detail::sinc(0.5 * beta * om * L);
        return s * s * kernel_w(om);
    };
    auto sums = detail::pair_sweep(zs.gammas, cfg, 1,
                                   [&](double delta, Accumulator* acc) {
                                       acc[0].add(term(delta - h) + term(delta + h));
                                   });
    FormFactorResult out;
    out.empirical = (sums[0] + static_cast<double>(n) * term(h)) / norm;

    const double xarg = h * L * beta;
    double hfactor;
    if (std::abs(xarg) < 1e-6) {
        hfactor = 1.0 / 6.0 - xarg * xarg / 40.0;
    } else {
        hfactor = (2.0 * detail::sinc(xarg) - 1.0 - std::cos(xarg)) / (xarg * xarg);
    }
    out.predicted = 1.0 / beta + 8.0 * beta / (4.0 + h * h) * hfactor;
    return out;
}

struct BlockSums {
    std::vector<double> f_blocks;   // unnormalized  sum_pairs int_block cos(d L a) w
    std::vector<double> f_h_blocks; // same with the h shift
    double excluded_weight = 0.0;   // dyadic-shell bound, windowed mode only
};

namespace detail {

// Per-pair closed-form integrals over K consecutive blocks of width kappa:
// int cos(w L a) da = kappa sinc(w L kappa/2) cos(w L (mid_j)).
inline BlockSums pair_block_sums(const ZeroSet& zs, double e0, double kappa,
                                 std::size_t n_blocks, double h,
                                 const PairSumConfig& cfg) {
    validate_pair_cfg(cfg, h);
    const double L = big_l(zs);
    const std::size_t n = zs.count();

    auto sums = pair_sweep(
        zs.gammas, cfg, 2 * n_blocks, [&](double delta, Accumulator* acc) {
            const double om[3] = {delta, delta - h, delta + h};
            const double wts[3] = {2.0 * kernel_w(delta), kernel_w(delta - h),
                                   kernel_w(delta + h)};
            for (int r = 0; r < 3; ++r) {
                const double wl = om[r] * L;
                const double q = kappa * sinc(0.5 * wl * kappa);
                const double f0 = wl * (e0 + 0.5 * kappa);
                const double fd = wl * kappa;
                double c = std::cos(f0), s = std::sin(f0);
                const double cd = std::cos(fd), sd = std::sin(fd);
                Accumulator* slot = (r == 0) ? acc : acc + n_blocks;
                const double wq = wts[r] * q;
                for (std::size_t m = 0; m < n_blocks; ++m) {
                    slot[m].add(wq * c);
                    const double c2 = c * cd - s * sd;
                    s = s * cd + c * sd;
                    c = c2;
                }
            }
        });

    BlockSums out;
    out.f_blocks.resize(n_blocks);
    out.f_h_blocks.resize(n_blocks);
    const double qh = kappa * sinc(0.5 * h * L * kappa);
    for (std::size_t m = 0; m < n_blocks; ++m) {
        const double mid = e0 + (static_cast<double>(m) + 0.5) * kappa;
        out.f_blocks[m] = sums[m] + static_cast<double>(n) * kappa;
        out.f_h_blocks[m] = sums[n_blocks + m] +
                            static_cast<double>(n) * kernel_w(h) * qh *
                                std::cos(h * L * mid);
    }
    if (cfg.mode == PairSumConfig::Mode::windowed)
        out.excluded_weight = excluded_pair_weight(zs.gammas, cfg.window, h) +
                              excluded_pair_weight(zs.gammas, cfg.window, 0.0);
    return out;
}

// sum_{c >= a, integer} c^{-p}
inline double zeta_tail(double a, int p) {
    Accumulator acc;
    const double cut = a + 20000.0;
    for (double c = a; c < cut; c += 1.0) acc.add(std::pow(c, -p));
    acc.add(std::pow(cut - 0.5, 1 - p) / (p - 1));
    return acc.value();
}

} // namespace detail

// int_c^{c+1} (F - F_h)(alpha) dalpha by per-pair closed forms.
inline double block_integral(const ZeroSet& zs, double c, double h,
                             const PairSumConfig& cfg = {}) {
    if (c < 0.0) throw domain_error("block_integral: c must be >= 0");
    auto bs = detail::pair_block_sums(zs, c, 1.0, 1, h, cfg);
    return (bs.f_blocks[0] - bs.f_h_blocks[0]) / detail::tl_over_2pi(zs);
}

struct TailIntegralOptions {
    double kappa = 0.125; // sub-block width
    PairSumConfig pair;
};

struct TailIntegralPair {
    TailIntegralResult p2;
    TailIntegralResult p4;
};

namespace detail {

inline TailIntegralResult weight_blocks(const BlockSums& bs, double norm,
                                        double kappa, int p, double a_max) {
    TailIntegralResult out;
    out.exponent = p;
    out.a_max = a_max;
    const std::size_t n_blocks = bs.f_blocks.size();
    Accumulator val, lo_acc, hi_acc;
    for (std::size_t m = 0; m < n_blocks; ++m) {
        const double a = 1.0 + kappa * static_cast<double>(m);
        const double b = a + kappa;
        const double mid = 0.5 * (a + b);
        const double bj = (bs.f_blocks[m] - bs.f_h_blocks[m]) / norm;
        const double w_lo = std::pow(b, -p), w_hi = std::pow(a, -p);
        val.add(bj * std::pow(mid, -p));
        lo_acc.add(bj >= 0.0 ? bj * w_lo : bj * w_hi);
        hi_acc.add(bj >= 0.0 ? bj * w_hi : bj * w_lo);
    }
    out.value = val.value();
    double lo = lo_acc.value(), hi = hi_acc.value();
    // discarded-pair slack (windowed): each block off by <= EW * kappa / norm
    if (bs.excluded_weight > 0.0) {
        Accumulator slack;
        for (std::size_t m = 0; m < n_blocks; ++m) {
            const double a = 1.0 + kappa * static_cast<double>(m);
            slack.add(bs.excluded_weight * kappa / norm * std::pow(a, -p));
        }
        lo -= slack.value();
        hi += slack.value();
    }
    // beyond a_max: 0 <= int_c^{c+1}(F - F_h) <= 16/3 + 1/2 per unit block
    hi += (16.0 / 3.0 + 0.5) * detail::zeta_tail(a_max, p);
    out.lower = lo;
    out.upper = hi;
    return out;
}

} // namespace detail

// int_1^{a_max} (F - F_h)/alpha^p for p = 2 and p = 4 from one pair sweep,
// with a monotone-envelope bracket per sub-block; beyond a_max the upper end
// is extended by the uniform per-unit-block bound (16/3 + 1/2) sum c^{-p}.
inline TailIntegralPair tail_integral_both(const ZeroSet& zs, double h,
                                           double a_max,
                                           const TailIntegralOptions& opt = {}) {
    if (!(a_max >= 2.0)) throw domain_error("tail_integral: a_max must be >= 2");
    const double norm = detail::tl_over_2pi(zs);
    const double kappa = opt.kappa;
    const std::size_t n_blocks =
        static_cast<std::size_t>(std::ceil((a_max - 1.0) / kappa - 1e-12));
    auto bs = detail::pair_block_sums(zs, 1.0, kappa, n_blocks, h, opt.pair);
    TailIntegralPair out;
    out.p2 = detail::weight_blocks(bs, norm, kappa, 2, a_max);
    out.p4 = detail::weight_blocks(bs, norm, kappa, 4, a_max);
    return out;
}

inline TailIntegralResult tail_integral(const ZeroSet& zs, double h, int p,
                                        double a_max,
                                        const TailIntegralOptions& opt = {}) {
    if (p != 2 && p != 4) throw usage_error("tail_integral: p must be 2 or 4");
    auto both = tail_integral_both(zs, h, a_max, opt);
    return p == 2 ? both.p2 : both.p4;
}

// Model for F_h(alpha) at alpha >= 1 under the cosine-projection conjecture:
// F(alpha) 4 cos(h L alpha)/(4 + h^2), with F empirical.  Exploratory only.
inline double conjecture51_model(const ZeroSet& zs, double alpha, double h,
                                 const PairSumConfig& cfg = {}) {
    if (!(alpha >= 1.0)) throw domain_error("conjecture51_model: alpha >= 1");
    const double L = detail::big_l(zs);
    const double f = f_scaled(zs, alpha, 0.0, cfg);
    return f * 4.0 * std::cos(h * L * alpha) / (4.0 + h * h);
}

} // namespace zetashift

#endif
