// Gauss-Legendre panels and adaptive Simpson quadrature.

#ifndef ZETASHIFT_QUADRATURE_HPP
#define ZETASHIFT_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "zetashift/errors.hpp"
#include "zetashift/summation.hpp"

namespace zetashift {

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1), open
    std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
inline GaussRule make_gauss_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

inline const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
    return it->second;
}

template <class F>
double integrate_gauss(F&& f, double a, double b, int order) {
    const GaussRule& r = gauss_rule(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Accumulator acc;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc.add(r.weights[i] * f(mid + half * r.nodes[i]));
    return acc.value() * half;
}

template <class F>
double integrate_gauss_panels(F&& f, double a, double b, int n_panels, int order) {
    if (n_panels < 1) n_panels = 1;
    Accumulator acc;
    const double w = (b - a) / n_panels;
    for (int p = 0; p < n_panels; ++p)
        acc.add(integrate_gauss(f, a + p * w, a + (p + 1) * w, order));
    return acc.value();
}

// Panel count sized so each panel sees at most `rad_per_panel` radians of a
// cos(freq * x)-type oscillation; order-16 Gauss then resolves it to spare
// digits.
template <class F>
double integrate_oscillatory(F&& f, double a, double b, double freq,
                             double rad_per_panel = 6.0, int order = 16) {
    double phase = std::abs(freq) * (b - a);
    int n = static_cast<int>(phase / rad_per_panel) + 1;
    return integrate_gauss_panels(f, a, b, n, order);
}

struct AdaptiveResult {
    double value = 0.0;
    bool converged = true;
    std::size_t evals = 0;
};

// Adaptive Simpson with the error budget split in proportion to subinterval
// width, so isolated discontinuities drive local refinement to the depth cap
// without starving the smooth regions.  At the cap the Richardson value is
// accepted; its residual is O(jump^2 * 2^-depth * width) per discontinuity.
// min_depth forces bootstrap subdivision before any acceptance: Simpson's
// error estimate is unreliable on structure finer than the panel, so callers
// with oscillatory or jumpy integrands should set 2^min_depth ~ (b-a)/feature.
template <class F>
AdaptiveResult adaptive_simpson(F&& f, double a, double b, double abs_tol,
                                int max_depth = 38, int min_depth = 0) {
    AdaptiveResult res;
    if (a == b) return res;
    struct Item {
        double a, b, fa, fm, fb, whole;
        int depth;
    };
    const double total = b - a;
    std::vector<Item> stack;
    {
        const double m = 0.5 * (a + b);
        const double fa = f(a), fm = f(m), fb = f(b);
        const double whole = total / 6.0 * (fa + 4.0 * fm + fb);
        stack.push_back({a, b, fa, fm, fb, whole, 0});
        res.evals = 3;
    }
    Accumulator acc;
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const double m = 0.5 * (it.a + it.b);
        const double lm = 0.5 * (it.a + m), rm = 0.5 * (m + it.b);
        const double flm = f(lm), frm = f(rm);
        res.evals += 2;
        const double left = (m - it.a) / 6.0 * (it.fa + 4.0 * flm + it.fm);
        const double right = (it.b - m) / 6.0 * (it.fm + 4.0 * frm + it.fb);
        const double delta = left + right - it.whole;
        const double local_tol = abs_tol * (it.b - it.a) / total;
        if ((it.depth >= min_depth && std::abs(delta) <= 15.0 * local_tol) ||
            it.depth >= max_depth ||
            (it.b - it.a) <= 1e-14 * (std::abs(it.a) + 1.0)) {
            acc.add(left + right + delta / 15.0);
            if (std::abs(delta) > 15.0 * local_tol) res.converged = false;
        } else {
            stack.push_back({it.a, m, it.fa, flm, it.fm, left, it.depth + 1});
            stack.push_back({m, it.b, it.fm, frm, it.fb, right, it.depth + 1});
        }
    }
    res.value = acc.value();
    return res;
}

} // namespace zetashift

#endif
