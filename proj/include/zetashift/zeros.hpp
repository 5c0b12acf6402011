// Zero-ordinate tables and the argument function S(t).
//
// N(t) counts ordinates in (0, t]; theta is the Riemann-Siegel phase; the
// three are tied together by N(t) = theta(t)/pi + 1 + S(t), which is how
// S(t) is evaluated here (no zeta evaluations anywhere).  The second moment
// of S(t+h) - S(t) integrates exactly over panels between consecutive
// breakpoints {gamma_i} u {gamma_i - h}, where the jump part is constant and
// the theta-difference is smooth.

#ifndef ZETASHIFT_ZEROS_HPP
#define ZETASHIFT_ZEROS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "zetashift/errors.hpp"
#include "zetashift/quadrature.hpp"
#include "zetashift/summation.hpp"

namespace zetashift {

struct ZeroSet {
    std::vector<double> gammas; // strictly increasing, all > 0
    double t_max = 0.0;         // largest usable height (>= gammas.back())

    std::size_t count() const { return gammas.size(); }

    // View truncated to ordinates <= t_cap.
    ZeroSet truncated(double t_cap) const {
        ZeroSet out;
        auto it = std::upper_bound(gammas.begin(), gammas.end(), t_cap);
        out.gammas.assign(gammas.begin(), it);
        out.t_max = t_cap;
        return out;
    }
};

// One decimal ordinate per line; '#' starts a comment line; blank lines ok.
inline ZeroSet load_zeros(const std::string& path,
                          std::optional<double> t_cap = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open zero table: " + path);
    ZeroSet zs;
    std::string line;
    long lineno = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        double v;
        try {
            std::size_t used = 0;
            v = std::stod(line.substr(pos), &used);
            std::size_t rest = line.find_first_not_of(" \t\r", pos + used);
            if (rest != std::string::npos)
                throw format_error("trailing garbage after ordinate", lineno);
        } catch (const format_error&) {
            throw;
        } catch (const std::exception&) {
            throw format_error("cannot parse ordinate", lineno);
        }
        if (!(v > 0.0))
            throw data_error("ordinate must be positive (line " +
                             std::to_string(lineno) + ")");
        if (v <= prev)
            throw data_error("ordinates must be strictly increasing (line " +
                             std::to_string(lineno) + ")");
        if (t_cap && v > *t_cap) break;
        zs.gammas.push_back(v);
        prev = v;
    }
    if (zs.gammas.empty()) throw data_error("zero table is empty: " + path);
    zs.t_max = t_cap ? *t_cap : zs.gammas.back();
    return zs;
}

// Riemann-Siegel theta by its asymptotic series,
//   theta(t) = t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3),
// supported for t >= 2pi (absolute error < 5e-8 there, < 1e-8 for t >= 10).
inline constexpr double kThetaMinT = 2.0 * M_PI;

inline double theta(double t) {
    if (!(t >= kThetaMinT))
        throw domain_error("theta: supported range is t >= 2*pi");
    return 0.5 * t * std::log(t / (2.0 * M_PI)) - 0.5 * t - M_PI / 8.0 +
           1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
}

// N(t): ordinates <= t, by binary search.
inline long zero_count(const ZeroSet& zs, double t) {
    if (!(t > 0.0) || t > zs.t_max)
        throw domain_error("zero_count: need 0 < t <= t_max");
    return static_cast<long>(
        std::upper_bound(zs.gammas.begin(), zs.gammas.end(), t) -
        zs.gammas.begin());
}

// S(t) = N(t) - 1 - theta(t)/pi, right-continuous at ordinates.
inline double s_of_t(const ZeroSet& zs, double t) {
    return static_cast<double>(zero_count(zs, t)) - 1.0 - theta(t) / M_PI;
}

struct SecondMomentOptions {
    double t_min = 2.0 * M_PI;
    int gauss_order = 8;
    unsigned workers = 0;      // 0 = hardware
    std::size_t block = 1024;  // panels per reduction block
};

struct SecondMomentResult {
    double value = 0.0;        // int_{t_min}^{T} (S(t+h)-S(t))^2 dt
    double sliver_bound = 0.0; // crude bound on the omitted [0, t_min) part
    double tiling_defect = 0.0;// |sum of panel lengths - (T - t_min)|
    std::size_t panels = 0;
};

// Exact breakpoint decomposition of int (S(t+h)-S(t))^2 dt on [t_min, T].
inline SecondMomentResult second_moment_diff(const ZeroSet& zs, double h, double T,
                                             const SecondMomentOptions& opt = {}) {
    if (h < 0.0) throw domain_error("second_moment_diff: h must be >= 0");
    if (!(opt.t_min >= kThetaMinT))
        throw domain_error("second_moment_diff: t_min below theta's range");
    if (T + h > zs.t_max)
        throw data_error("second_moment_diff: zeros needed above T + h "
                         "(coverage ends at t_max)");
    SecondMomentResult res;
    if (T <= opt.t_min) return res;
    if (h == 0.0) { // integrand identically zero
        res.value = 0.0;
        return res;
    }

    std::vector<double> brk;
    brk.reserve(2 * zs.count() + 2);
    brk.push_back(opt.t_min);
    for (double g : zs.gammas) {
        if (g > opt.t_min && g < T) brk.push_back(g);
        const double gh = g - h;
        if (gh > opt.t_min && gh < T) brk.push_back(gh);
    }
    brk.push_back(T);
    std::sort(brk.begin(), brk.end());

    const auto& g = zs.gammas;
    auto count_le = [&](double t) {
        return static_cast<double>(std::upper_bound(g.begin(), g.end(), t) - g.begin());
    };

    const GaussRule& rule = gauss_rule(opt.gauss_order);
    const std::size_t n_panels = brk.size() - 1;
    Accumulator len_acc;

    auto block_fn = [&](std::size_t, std::size_t i0, std::size_t i1, Accumulator* acc) {
        for (std::size_t p = i0; p < i1; ++p) {
            const double a = brk[p], b = brk[p + 1];
            const double w = b - a;
            if (w <= 0.0) continue;
            const double mid = 0.5 * (a + b), half = 0.5 * w;
            const double dn = count_le(mid + h) - count_le(mid);
            Accumulator panel;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                const double t = mid + half * rule.nodes[q];
                const double d = dn - (theta(t + h) - theta(t)) / M_PI;
                panel.add(rule.weights[q] * d * d);
            }
            acc[0].add(panel.value() * half);
        }
    };
    auto sums = block_parallel_reduce(n_panels, opt.block, 1, opt.workers, block_fn);
    res.value = sums[0];
    res.panels = n_panels;

    for (std::size_t p = 0; p < n_panels; ++p) len_acc.add(brk[p + 1] - brk[p]);
    res.tiling_defect = std::abs(len_acc.value() - (T - opt.t_min));

    // |S(t+h)-S(t)| <= N(t_min+h) + h * max|theta'| / pi on [0, t_min)
    const double jumps = count_le(opt.t_min + h);
    res.sliver_bound = opt.t_min * std::pow(jumps + h * 2.5 / M_PI, 2);
    return res;
}

} // namespace zetashift

#endif
