#pragma once

#include <cmath>
#include <functional>

#include "bergman/errors.hpp"

namespace bergman {

/// Gauss 7 / Kronrod 15 panel rule on [a, b]: returns the K15 value and an
/// error estimate from the G7 difference.
template <class F>
double quad_g7k15(const F& f, double a, double b, double& err) {
    // node, Gauss weight (0 on Kronrod-only nodes), Kronrod weight
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715526},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.000000000000000, 0.204432940075298},
        {0.586087235467691, 0.000000000000000, 0.169004726639267},
        {0.864864423359769, 0.000000000000000, 0.104790010322250},
        {0.991455371120813, 0.000000000000000, 0.022935322010529},
    };
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double gauss = 0.0, kronrod = 0.0;
    {
        const double fv = f(mid);
        gauss += nw[0][1] * fv;
        kronrod += nw[0][2] * fv;
    }
    for (int i = 1; i < 8; ++i) {
        const double fp = f(mid + half * nw[i][0]);
        const double fm = f(mid - half * nw[i][0]);
        gauss += nw[i][1] * (fp + fm);
        kronrod += nw[i][2] * (fp + fm);
    }
    gauss *= half;
    kronrod *= half;
    err = std::abs(kronrod - gauss);
    return kronrod;
}

/// Adaptive bisection driver: integrates f over [a, b] to the requested
/// absolute tolerance (distributed proportionally to panel length, with a
/// machine-precision relative floor), accumulating the panel error
/// estimates into err_out.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double abs_tol, double& err_out,
                          int max_depth = 48) {
    struct Rec {
        const F& f;
        double abs_tol;
        double inv_len;
        double total_err = 0.0;
        int max_depth;

        double run(double lo, double hi, int depth) {
            double err = 0.0;
            const double v = quad_g7k15(f, lo, hi, err);
            if (err <= abs_tol * (hi - lo) * inv_len || err <= 5e-15 * std::abs(v)) {
                total_err += err;
                return v;
            }
            if (depth >= max_depth)
                throw QuadratureNotConverged("adaptive quadrature hit the depth limit");
            const double mid = 0.5 * (lo + hi);
            return run(lo, mid, depth + 1) + run(mid, hi, depth + 1);
        }
    };
    Rec rec{f, abs_tol, 1.0 / (b - a), 0.0, max_depth};
    const double v = rec.run(a, b, 0);
    err_out = rec.total_err;
    return v;
}

/// Least-squares slope of y against x.
inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = static_cast<double>(n) * sxx - sx * sx;
    return (static_cast<double>(n) * sxy - sx * sy) / den;
}

} // namespace bergman
