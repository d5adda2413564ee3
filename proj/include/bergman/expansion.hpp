#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "bergman/models.hpp"
#include "bergman/recursion.hpp"

namespace bergman {

/// Polynomial evaluation with the certified-radius heuristic: the highest
/// retained total degree must contribute less than `threshold` of the
/// partial sum, otherwise the truncated jet cannot be trusted at the point.
template <class S>
Complex evaluate_certified(const Jet<S>& a, std::span<const Complex> values,
                           double threshold = 1e-3) {
    const int slots = a.layout().total_slots();
    const int top = a.max_stored_degree();
    Complex total = 0.0;
    Complex top_part = 0.0;
    std::vector<std::vector<Complex>> powers(static_cast<std::size_t>(slots));
    for (int s = 0; s < slots; ++s) {
        auto& p = powers[static_cast<std::size_t>(s)];
        p.resize(static_cast<std::size_t>(a.degree_cap()) + 1);
        p[0] = 1.0;
        for (int e = 1; e <= a.degree_cap(); ++e)
            p[static_cast<std::size_t>(e)] =
                p[static_cast<std::size_t>(e - 1)] * values[static_cast<std::size_t>(s)];
    }
    for (const auto& [key, c] : a.terms()) {
        Complex t = scalar_traits<S>::to_complex(c);
        for (int s = 0; s < slots; ++s)
            if (key[static_cast<std::size_t>(s)] != 0)
                t *= powers[static_cast<std::size_t>(s)][key[static_cast<std::size_t>(s)]];
        total += t;
        if (total_degree(key, slots) == top) top_part += t;
    }
    // only a jet filled out to its cap is at risk of losing unseen terms
    if (top > 0 && top == a.degree_cap()) {
        const double scale = std::max(std::abs(total), 1e-300);
        if (std::abs(top_part) > threshold * scale)
            throw TruncationUnreliable("evaluation point is outside the certified radius");
    }
    return total;
}

/// The truncated kernel (k/pi)^n e^{k psi(x, ybar)} (1 + sum_{m<=N} b_m/k^m)
/// with the coefficient jets evaluated as polynomials at (x, ybar).
template <class S>
Complex kernel_expansion_eval(const CoefficientTable<S>& table, const Jet<S>& psi, double k,
                              int N, std::span<const Complex> x, std::span<const Complex> y) {
    if (N > table.max_m)
        throw PreconditionViolated("truncation order exceeds the computed table");
    const int n = table.dimension;
    std::vector<Complex> vals;
    vals.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) vals.push_back(x[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) vals.push_back(std::conj(y[static_cast<std::size_t>(i)]));

    const Complex psi_val = evaluate_certified(psi, vals);
    Complex amp = 1.0;
    double kp = k;
    for (int m = 1; m <= N; ++m) {
        amp += evaluate_certified(polarize_bm(table.b[static_cast<std::size_t>(m)]), vals) / kp;
        kp *= k;
    }
    const double pref = std::pow(k / std::numbers::pi, n);
    return pref * std::exp(k * psi_val) * amp;
}

/// One kernel-expansion evaluation against an optional model truth.
struct ExpansionEvaluation {
    double k = 0.0;
    int trunc = 0;
    std::vector<Complex> x, y;
    Complex value{0.0, 0.0};
    std::optional<Complex> model_truth;
    double abs_error = 0.0;
    double rel_error = 0.0; // |value - truth| / |truth| when truth is nonzero
};

template <class S>
ExpansionEvaluation evaluate_against_model(const KernelModel& model,
                                           const CoefficientTable<S>& table, const Jet<S>& psi,
                                           double k, int N, std::span<const Complex> x,
                                           std::span<const Complex> y) {
    ExpansionEvaluation out;
    out.k = k;
    out.trunc = N;
    out.x.assign(x.begin(), x.end());
    out.y.assign(y.begin(), y.end());
    out.value = kernel_expansion_eval(table, psi, k, N, x, y);
    const Complex truth = kernel_value(model, k, x, y);
    out.model_truth = truth;
    out.abs_error = std::abs(out.value - truth);
    out.rel_error = std::abs(truth) > 0 ? out.abs_error / std::abs(truth) : out.abs_error;
    return out;
}

/// Normalized remainders R_N(k) = |oracle - K^(N)| / ((k/pi)^n |e^{k psi}|)
/// over a (N, k) grid, with the log-log decay slope fitted per N.
struct RemainderScan {
    std::vector<int> n_list;
    std::vector<double> k_list;
    std::vector<std::vector<double>> errors; // [n_index][k_index]
    std::vector<double> slopes;              // d log R / d log k per N
    double oracle_error = 0.0;               // worst oracle error bound seen
};

template <class S>
RemainderScan remainder_scan(const KernelModel& model, const CoefficientTable<S>& table,
                             const Jet<S>& psi, const std::vector<double>& k_list,
                             const std::vector<int>& n_list, std::span<const Complex> x,
                             std::span<const Complex> y) {
    RemainderScan out;
    out.n_list = n_list;
    out.k_list = k_list;
    for (int N : n_list) {
        std::vector<double> row;
        for (double k : k_list) {
            double oracle_err = 0.0;
            const Complex truth = kernel_value(model, k, x, y, &oracle_err);
            out.oracle_error = std::max(out.oracle_error, oracle_err);
            const Complex approx = kernel_expansion_eval(table, psi, k, N, x, y);
            const double norm = std::pow(k / std::numbers::pi, model.dimension) *
                                std::abs(std::exp(k * model.psi_value(x, y)));
            row.push_back(std::abs(truth - approx) / norm);
        }
        out.errors.push_back(std::move(row));
    }
    for (const auto& row : out.errors) {
        std::vector<double> lx, ly;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] <= 0.0) continue;
            lx.push_back(std::log(k_list[i]));
            ly.push_back(std::log(row[i]));
        }
        out.slopes.push_back(lx.size() >= 2 ? least_squares_slope(lx, ly)
                                            : -std::numeric_limits<double>::infinity());
    }
    return out;
}

/// Upper bound sum |c| r^{deg} over the stored coefficients.
template <class S>
double sup_norm_estimate(const Jet<S>& b, double r) {
    if (r <= 0) throw PreconditionViolated("sup norm radius must be positive");
    const int slots = b.layout().total_slots();
    double acc = 0.0;
    for (const auto& [k, c] : b.terms())
        acc += scalar_traits<S>::abs_value(c) * std::pow(r, total_degree(k, slots));
    return acc;
}

/// Growth diagnostics for the coefficient sequence: sup-norm bounds S_m on
/// the polydisc of radius r and the normalized ratios (S_m/m!)^{1/(m+1)},
/// which stay bounded for an analytic symbol (factorial-geometric growth).
struct GrowthReport {
    double radius = 0.0;
    std::vector<double> sup_norms; // S_m, index m
    std::vector<double> ratios;    // (S_m/m!)^{1/(m+1)}
    int reference_m = 4;
    bool plateau = false; // max ratio over all m within 3x of max over m <= reference
};

template <class S>
GrowthReport growth_fit(const CoefficientTable<S>& table, double r, int reference_m = 4) {
    GrowthReport rep;
    rep.radius = r;
    rep.reference_m = reference_m;
    mpz_class mf(1);
    for (int m = 0; m <= table.max_m; ++m) {
        if (m > 0) mf *= m;
        const double s = sup_norm_estimate(table.b[static_cast<std::size_t>(m)], r);
        rep.sup_norms.push_back(s);
        rep.ratios.push_back(std::pow(s / mpq_class(mf).get_d(), 1.0 / (m + 1)));
    }
    double early = 0.0, all = 0.0;
    for (int m = 0; m <= table.max_m; ++m) {
        all = std::max(all, rep.ratios[static_cast<std::size_t>(m)]);
        if (m <= reference_m) early = std::max(early, rep.ratios[static_cast<std::size_t>(m)]);
    }
    rep.plateau = all <= 3.0 * early || all == 0.0;
    return rep;
}

/// Empirical optimal truncation: N* minimizing S_{N+1} (N+1)! / k^{N+1}
/// over the computed range, ties broken toward smaller N.
inline int optimal_truncation(double k, const GrowthReport& report) {
    const int max_n = static_cast<int>(report.sup_norms.size()) - 2;
    if (max_n < 0) throw PreconditionViolated("growth report is too short");
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    mpz_class f(1);
    for (int N = 0; N <= max_n; ++N) {
        f *= N + 1;
        const double val = report.sup_norms[static_cast<std::size_t>(N + 1)] *
                           mpq_class(f).get_d() / std::pow(k, N + 1);
        if (val < best_val) {
            best_val = val;
            best = N;
        }
    }
    return best;
}

/// Off-diagonal decay against the diastasis: the log residual
/// log(|K| e^{-k phi(x)/2 - k phi(y)/2} (pi/k)^n) + k D(x,y)/2
/// should be O(1) in k; the fitted slope in k sits near zero.
struct DecayReport {
    std::vector<std::vector<double>> residuals; // [pair][k]
    std::vector<double> slopes;                 // d residual / d k per pair
};

inline DecayReport diastasis_decay_check(const KernelModel& model,
                                         const std::vector<double>& k_list,
                                         const std::vector<std::pair<Complex, Complex>>& pairs) {
    DecayReport out;
    for (const auto& [xp, yp] : pairs) {
        const std::vector<Complex> x{xp}, y{yp};
        const double phi_x = model.potential_value(x);
        const double phi_y = model.potential_value(y);
        const double dia = phi_x + phi_y - 2.0 * std::real(model.psi_value(x, y));
        std::vector<double> row;
        for (double k : k_list) {
            const Complex kv = kernel_value(model, k, x, y);
            const double res = std::log(std::abs(kv)) - 0.5 * k * (phi_x + phi_y) -
                               model.dimension * std::log(k / std::numbers::pi) + 0.5 * k * dia;
            row.push_back(res);
        }
        out.slopes.push_back(least_squares_slope(k_list, row));
        out.residuals.push_back(std::move(row));
    }
    return out;
}

/// Local reproducing check: integrates chi_x u K^(N)(x, .) e^{-k phi} dV
/// over the cutoff disc by polar quadrature and compares with u(x).
/// The returned error is relative to e^{k phi(x)/2} ||u||_{k phi}.
struct ReproducingResult {
    double relative_error = 0.0;
    double quadrature_error = 0.0;
    Complex integral{0.0, 0.0};
    Complex expected{0.0, 0.0};
};

template <class S>
ReproducingResult reproducing_test(const KernelModel& model, const CoefficientTable<S>& table,
                                   const Jet<S>& psi, double k, int N,
                                   const std::vector<Complex>& u_coeffs, Complex x,
                                   double r_in = 0.5, double r_out = 0.75) {
    if (model.dimension != 1)
        throw PreconditionViolated("the reproducing check is one-dimensional");

    auto u_val = [&](Complex z) {
        Complex acc = 0.0, p = 1.0;
        for (const auto& c : u_coeffs) {
            acc += c * p;
            p *= z;
        }
        return acc;
    };

    // theta resolution: enough for the polynomial harmonics plus the
    // oscillation of e^{k psi(x, ybar)} around the circle of radius r_out
    const int harmonics = static_cast<int>(u_coeffs.size()) + table.cap + 4;
    const int osc = static_cast<int>(std::ceil(k * std::abs(x) * r_out * 4.0));
    const int n_theta = std::max(64, 2 * (harmonics + osc));

    const std::vector<Complex> xv{x};
    auto slice = [&](double rho) -> Complex {
        Complex acc = 0.0;
        for (int t = 0; t < n_theta; ++t) {
            const double theta = 2.0 * std::numbers::pi * t / n_theta;
            const Complex y = x + rho * std::exp(Complex(0.0, theta));
            const std::vector<Complex> yv{y};
            const Complex kv = kernel_expansion_eval(table, psi, k, N, xv, yv);
            const double s = std::norm(y);
            acc += u_val(y) * kv * std::exp(-k * model.phi_radial(s)) * model.volume_density(s);
        }
        return acc * (2.0 * std::numbers::pi / n_theta) * rho * cutoff_chi(rho, r_in, r_out);
    };

    ReproducingResult out;
    double err_re = 0.0, err_im = 0.0;
    const double tol = model.quad.abs_tolerance;
    const double re = integrate_adaptive([&](double rho) { return slice(rho).real(); }, 0.0, r_out,
                                         tol, err_re, model.quad.max_depth);
    const double im = integrate_adaptive([&](double rho) { return slice(rho).imag(); }, 0.0, r_out,
                                         tol, err_im, model.quad.max_depth);
    out.integral = Complex(re, im);
    out.expected = u_val(x);
    out.quadrature_error = err_re + err_im;

    // ||u||^2 = sum |u_j|^2 ||z^j||^2 by radial orthogonality
    KernelModel norm_model = model;
    norm_model.quad.max_monomial_degree = static_cast<int>(u_coeffs.size());
    const GramKernel g = radial_gram_kernel(norm_model, k, 0.0, 0.0);
    double u_norm_sq = 0.0;
    for (std::size_t j = 0; j < u_coeffs.size(); ++j)
        u_norm_sq += std::norm(u_coeffs[j]) * g.norms[j];
    const double scale = std::exp(0.5 * k * model.phi_radial(std::norm(x))) * std::sqrt(u_norm_sq);
    out.relative_error = std::abs(out.integral - out.expected) / scale;
    return out;
}

} // namespace bergman
