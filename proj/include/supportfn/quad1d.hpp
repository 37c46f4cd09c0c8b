#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace supportfn {

struct Quad1dResult {
    double value = 0.0;
    double abs_err = 0.0;
    bool converged = false;
    long evals = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights (abscissa, Gauss weight, Kronrod weight).
inline constexpr double kGk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class Func>
double gk15_panel(const Func& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = kGk15[0][1] * y0;
    double k15 = kGk15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGk15[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += kGk15[i][1] * yi;
        k15 += kGk15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    const double diff = 200.0 * std::fabs(g7 - k15);
    err = diff * std::sqrt(diff);
    if (!std::isfinite(err)) err = std::fabs(g7 - k15);
    return k15;
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod on [a,b]. Splits the worst panel until
/// the summed error estimate meets max(atol, rtol*|I|) or the panel budget
/// runs out.
template <class Func>
Quad1dResult integrate_adaptive(const Func& f, double a, double b,
                                double rtol = 1e-10, double atol = 0.0,
                                int max_panels = 2048) {
    Quad1dResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    struct Panel {
        double a, b, value, err;
    };
    std::vector<Panel> panels;
    panels.reserve(64);
    double err0 = 0.0;
    const double v0 = detail::gk15_panel(f, a, b, err0);
    if (!std::isfinite(v0)) {
        res.value = v0;
        res.converged = false;
        res.evals = 15;
        return res;
    }
    panels.push_back({a, b, v0, err0});
    res.evals = 15;

    for (;;) {
        double total = 0.0, toterr = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            toterr += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        const double tol = std::max(atol, rtol * std::fabs(total));
        if (toterr <= tol || (int)panels.size() >= max_panels) {
            res.value = total;
            res.abs_err = toterr;
            res.converged = toterr <= std::max(tol, 1e-300);
            return res;
        }
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        Panel left{p.a, mid, 0, 0}, right{mid, p.b, 0, 0};
        left.value = detail::gk15_panel(f, left.a, left.b, left.err);
        right.value = detail::gk15_panel(f, right.a, right.b, right.err);
        res.evals += 30;
        panels[worst] = left;
        panels.push_back(right);
    }
}

struct TailResult {
    double value = 0.0;
    double abs_err = 0.0;
    bool converged = false;
    bool diverged = false;
    long evals = 0;
};

/// Improper integral of a nonnegative integrand over [a, +inf) by
/// geometrically expanding panels. Divergence is declared when the partial
/// integral grows past `growth_factor` times the first panel (or overflows);
/// convergence when panel contributions decay geometrically and the
/// remainder bound fits rtol.
template <class Func>
TailResult integrate_tail(const Func& f, double a, double rtol = 1e-10,
                          double first_len = 1.0, int max_panels = 200,
                          double growth_factor = 1e9) {
    TailResult res;
    double lo = a;
    double len = first_len;
    double prev_contrib = 0.0;
    double first_scale = 0.0;
    for (int j = 0; j < max_panels; ++j) {
        Quad1dResult panel = integrate_adaptive(f, lo, lo + len, rtol * 0.1,
                                                1e-300, 512);
        res.evals += panel.evals;
        if (!std::isfinite(panel.value)) {
            res.diverged = true;
            res.value = std::numeric_limits<double>::infinity();
            return res;
        }
        res.value += panel.value;
        res.abs_err += panel.abs_err;
        const double contrib = std::fabs(panel.value);
        if (j == 0) first_scale = std::max(contrib, 1e-300);
        if (std::fabs(res.value) > growth_factor * first_scale) {
            res.diverged = true;
            return res;
        }
        if (j > 0 && prev_contrib > 0.0) {
            const double ratio = contrib / prev_contrib;
            if (ratio < 0.9) {
                const double remainder = contrib * ratio / (1.0 - ratio);
                if (remainder <= std::max(rtol * std::fabs(res.value), 1e-300) ||
                    contrib <= 1e-300) {
                    res.abs_err += remainder;
                    res.converged = true;
                    return res;
                }
            }
        } else if (j > 0 && contrib == 0.0 && prev_contrib == 0.0) {
            res.converged = true;
            return res;
        }
        prev_contrib = contrib;
        lo += len;
        len *= 2.0;
    }
    return res; // neither converged nor provably divergent
}

} // namespace supportfn
