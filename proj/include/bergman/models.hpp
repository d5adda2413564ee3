#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "bergman/matrix.hpp"
#include "bergman/potentials.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

using Complex = std::complex<double>;

struct QuadratureSpec {
    int max_monomial_degree = 64; // J
    double abs_tolerance = 1e-13;
    int max_depth = 48;
};

/// A validation model: a potential with an exact or quadrature-backed
/// kernel oracle. All models except fock are one-dimensional.
struct KernelModel {
    enum class Kind { fock, fubini_study, hyperbolic, radial_numeric };

    Kind kind = Kind::fock;
    int dimension = 1;
    std::vector<mpq_class> radial_coeffs; // phi(s) = sum_t c_t s^t, s = |z|^2
    QuadratureSpec quad;

    static KernelModel fock(int n = 1) {
        KernelModel m;
        m.kind = Kind::fock;
        m.dimension = n;
        m.radial_coeffs = {mpq_class(1)};
        return m;
    }
    static KernelModel fubini_study() {
        KernelModel m;
        m.kind = Kind::fubini_study;
        return m;
    }
    static KernelModel hyperbolic() {
        KernelModel m;
        m.kind = Kind::hyperbolic;
        return m;
    }
    static KernelModel radial(std::vector<mpq_class> coeffs, QuadratureSpec spec = {}) {
        KernelModel m;
        m.kind = Kind::radial_numeric;
        m.radial_coeffs = std::move(coeffs);
        m.quad = spec;
        return m;
    }

    /// Radius of the model's natural domain (1 for the disc, inf otherwise).
    double domain_radius() const {
        return kind == Kind::hyperbolic ? 1.0 : std::numeric_limits<double>::infinity();
    }

    template <class S>
    PotentialJet<S> potential_jet(int order) const {
        switch (kind) {
            case Kind::fock: return fock_potential<S>(dimension, order);
            case Kind::fubini_study: return fubini_study_potential<S>(order);
            case Kind::hyperbolic: return hyperbolic_potential<S>(order);
            case Kind::radial_numeric: return radial_potential<S>(radial_coeffs, order);
        }
        throw SpecError("unknown model kind");
    }

    /// phi as a function of s = |z|^2 (dimension 1 models; fock uses sums).
    double phi_radial(double s) const {
        switch (kind) {
            case Kind::fock: return s;
            case Kind::fubini_study: return std::log1p(s);
            case Kind::hyperbolic:
                if (s >= 1.0) throw DomainError("point outside the unit disc");
                return -std::log1p(-s);
            case Kind::radial_numeric: {
                double acc = 0.0, p = s;
                for (const auto& c : radial_coeffs) {
                    acc += c.get_d() * p;
                    p *= s;
                }
                return acc;
            }
        }
        throw SpecError("unknown model kind");
    }

    /// d/ds of phi_radial, used both for kphi(s) - j log(s) derivative tests
    /// and for the volume density v = phi_{z zbar} = d/ds (s phi'(s)).
    double phi_radial_d(double s) const {
        switch (kind) {
            case Kind::fock: return 1.0;
            case Kind::fubini_study: return 1.0 / (1.0 + s);
            case Kind::hyperbolic: return 1.0 / (1.0 - s);
            case Kind::radial_numeric: {
                double acc = 0.0, p = 1.0;
                int t = 1;
                for (const auto& c : radial_coeffs) {
                    acc += c.get_d() * t * p;
                    p *= s;
                    ++t;
                }
                return acc;
            }
        }
        throw SpecError("unknown model kind");
    }

    /// Volume density phi_{z zbar} at |z|^2 = s (dimension 1).
    double volume_density(double s) const {
        switch (kind) {
            case Kind::fock: return 1.0;
            case Kind::fubini_study: return 1.0 / ((1.0 + s) * (1.0 + s));
            case Kind::hyperbolic: return 1.0 / ((1.0 - s) * (1.0 - s));
            case Kind::radial_numeric: {
                // d/ds (s phi'(s)) = sum_t c_t t^2 s^{t-1}
                double acc = 0.0, p = 1.0;
                int t = 1;
                for (const auto& c : radial_coeffs) {
                    acc += c.get_d() * t * t * p;
                    p *= s;
                    ++t;
                }
                return acc;
            }
        }
        throw SpecError("unknown model kind");
    }

    double potential_value(std::span<const Complex> x) const {
        double s = 0.0;
        for (const auto& xi : x) s += std::norm(xi);
        return phi_radial(s);
    }

    /// Polarized potential psi(x, ybar), holomorphic in x, antiholomorphic
    /// in y; psi(x, xbar) = phi(x).
    Complex psi_value(std::span<const Complex> x, std::span<const Complex> y) const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) t += x[i] * std::conj(y[i]);
        switch (kind) {
            case Kind::fock: return t;
            case Kind::fubini_study: return std::log(1.0 + t);
            case Kind::hyperbolic:
                if (std::abs(t) >= 1.0) throw DomainError("point pair outside the unit disc");
                return -std::log(1.0 - t);
            case Kind::radial_numeric: {
                Complex acc = 0.0, p = t;
                for (const auto& c : radial_coeffs) {
                    acc += c.get_d() * p;
                    p *= t;
                }
                return acc;
            }
        }
        throw SpecError("unknown model kind");
    }
};

inline Complex fock_kernel(double k, std::span<const Complex> x, std::span<const Complex> y) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) t += x[i] * std::conj(y[i]);
    const double pref = std::pow(k / std::numbers::pi, static_cast<double>(x.size()));
    return pref * std::exp(k * t);
}

inline Complex fs_kernel(double k, Complex x, Complex y) {
    return (k + 1.0) / std::numbers::pi * std::pow(1.0 + x * std::conj(y), k);
}

inline Complex hyperbolic_kernel(double k, Complex x, Complex y) {
    if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
        throw DomainError("hyperbolic kernel needs |x|, |y| < 1");
    return (k - 1.0) / std::numbers::pi * std::pow(1.0 - x * std::conj(y), -k);
}

/// pi j! / k^{j+1}, the fock monomial norm ||z^j||^2.
inline double fock_monomial_norm(double k, int j) {
    mpq_class f(factorial_mpz(static_cast<unsigned long>(j)));
    return std::numbers::pi * f.get_d() / std::pow(k, j + 1);
}

/// pi j! (k-2)! / (k+j-1)!, the weighted-disc monomial norm ||z^j||^2 for
/// phi = -log(1-|z|^2): the Beta integral pi B(j+1, k-1).
inline double hyperbolic_monomial_norm(long k, int j) {
    if (k < 2) throw DomainError("hyperbolic norms need k >= 2");
    mpq_class v(factorial_mpz(static_cast<unsigned long>(j)) *
                    factorial_mpz(static_cast<unsigned long>(k - 2)),
                factorial_mpz(static_cast<unsigned long>(k) + static_cast<unsigned long>(j) - 1));
    v.canonicalize();
    return std::numbers::pi * v.get_d();
}

/// Quadrature-backed Bergman kernel for a radial weight on C: monomials are
/// orthogonal, so K(x,y) = sum_j (x ybar)^j / ||z^j||^2 with 1-D radial
/// norm integrals.
struct GramKernel {
    Complex value{0.0, 0.0};
    double error_bound = 0.0;     // quadrature + series tail
    std::vector<double> norms;    // ||z^j||^2 for j = 0..J
    double norm_tail_bound = 0.0; // reported domain-truncation bound
};

inline GramKernel radial_gram_kernel(const KernelModel& model, double k, Complex x, Complex y) {
    const QuadratureSpec& spec = model.quad;
    const int J = spec.max_monomial_degree;

    if (model.kind == KernelModel::Kind::radial_numeric && !model.radial_coeffs.empty() &&
        model.radial_coeffs.back() <= 0)
        throw NonIntegrableWeight("radial weight must have a positive leading coefficient");

    GramKernel out;
    std::vector<double> norm_errors;

    const bool disc = std::isfinite(model.domain_radius());
    for (int j = 0; j <= J; ++j) {
        // integrand in s = r^2: pi * s^j e^{-k phi(s)} w(s)
        auto f = [&](double s) {
            return std::pow(s, j) * std::exp(-k * model.phi_radial(s)) * model.volume_density(s);
        };
        double upper;
        if (disc) {
            upper = 1.0;
            out.norm_tail_bound = 0.0;
        } else {
            // peak of j log s - k phi(s) sits where j/s = k phi'(s);
            // march right until the integrand has fallen 10^-20 below it
            double peak = j == 0 ? 0.0 : j / (k * model.phi_radial_d(0.0));
            for (int it = 0; it < 64; ++it) {
                const double g = j / std::max(peak, 1e-30) - k * model.phi_radial_d(peak);
                if (g <= 0) break;
                peak = peak > 0 ? peak * 1.5 : 1.0 / k;
            }
            const double log_peak = (j > 0 ? j * std::log(peak) : 0.0) - k * model.phi_radial(peak);
            upper = std::max(peak * 2, peak + 1.0);
            for (int it = 0; it < 200; ++it) {
                const double log_f = j * std::log(upper) - k * model.phi_radial(upper);
                const double slope = k * model.phi_radial_d(upper) - j / upper;
                if (log_f < log_peak - 46.0 && slope > 0) {
                    out.norm_tail_bound =
                        std::max(out.norm_tail_bound,
                                 std::numbers::pi * std::exp(log_f) *
                                     model.volume_density(upper) / slope);
                    break;
                }
                upper *= 1.5;
                if (it == 199) throw NonIntegrableWeight("radial tail does not decay");
            }
        }
        double err = 0.0;
        const double v = std::numbers::pi *
                         integrate_adaptive(f, 0.0, upper, spec.abs_tolerance, err, spec.max_depth);
        if (v <= 0.0) throw QuadratureNotConverged("non-positive monomial norm");
        out.norms.push_back(v);
        norm_errors.push_back(std::numbers::pi * err + out.norm_tail_bound);
    }

    // K(x, y) = sum_j (x ybar)^j / ||z^j||^2 with a ratio-test tail bound
    const Complex t = x * std::conj(y);
    const double ta = std::abs(t);
    Complex acc = 0.0;
    Complex p = 1.0;
    double last = 0.0, prev = 0.0;
    for (int j = 0; j <= J; ++j) {
        acc += p / out.norms[static_cast<std::size_t>(j)];
        prev = last;
        last = std::pow(ta, j) / out.norms[static_cast<std::size_t>(j)];
        p *= t;
    }
    double series_tail = 0.0;
    if (ta > 0.0) {
        if (prev <= 0.0) throw TailNotConverged("cannot bound the monomial series tail");
        const double ratio = last / prev;
        if (ratio >= 0.9)
            throw TailNotConverged("monomial series not converged at J = " + std::to_string(J));
        series_tail = last * ratio / (1.0 - ratio);
    }
    out.value = acc;
    double propagated = 0.0;
    for (int j = 0; j <= J; ++j) {
        const double nj = out.norms[static_cast<std::size_t>(j)];
        propagated += std::pow(ta, j) / nj * (norm_errors[static_cast<std::size_t>(j)] / nj);
    }
    out.error_bound = series_tail + 2.0 * propagated;
    return out;
}

/// Kernel truth for any model; radial models go through the Gram oracle.
inline Complex kernel_value(const KernelModel& model, double k, std::span<const Complex> x,
                            std::span<const Complex> y, double* error_bound = nullptr) {
    if (error_bound) *error_bound = 0.0;
    switch (model.kind) {
        case KernelModel::Kind::fock: return fock_kernel(k, x, y);
        case KernelModel::Kind::fubini_study: return fs_kernel(k, x[0], y[0]);
        case KernelModel::Kind::hyperbolic: return hyperbolic_kernel(k, x[0], y[0]);
        case KernelModel::Kind::radial_numeric: {
            const GramKernel g = radial_gram_kernel(model, k, x[0], y[0]);
            if (error_bound) *error_bound = g.error_bound;
            return g.value;
        }
    }
    throw SpecError("unknown model kind");
}

/// Exact Gaussian moment over C^n in units of pi^n:
/// integral of u^alpha ubar^beta e^{-k <Q u, u>} dV / pi^n,
/// with <Q u, u> = sum Q_{ab} u_a ubar_b. Computed by Wick pairings: the sum
/// over matchings is the permanent of the covariance submatrix.
inline GaussianRational wick_moment(const MultiIndex& alpha, const MultiIndex& beta,
                                    const Matrix<GaussianRational>& Q, const mpq_class& k) {
    const int n = static_cast<int>(Q.size());
    for (const auto& minor : leading_principal_minors(Q))
        if (!minor.is_real() || minor.real() <= 0)
            throw NotPositiveDefinite("Wick moment needs a Hermitian positive definite form");
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
        throw LayoutMismatch("multi-index length must match the dimension");

    if (order_of(alpha) != order_of(beta)) return GaussianRational(0);
    const int p = order_of(alpha);

    // covariance <u_a ubar_b> * k = (Q^{-1})^T_{ab}
    const Matrix<GaussianRational> qinv = matrix_inverse(Q);
    std::vector<int> a_slots, b_slots;
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < alpha[static_cast<std::size_t>(i)]; ++t) a_slots.push_back(i);
        for (int t = 0; t < beta[static_cast<std::size_t>(i)]; ++t) b_slots.push_back(i);
    }

    std::vector<int> perm(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) perm[static_cast<std::size_t>(i)] = i;
    GaussianRational pairing_sum(0);
    do {
        GaussianRational prod(1);
        for (int s = 0; s < p; ++s)
            prod *= qinv[static_cast<std::size_t>(b_slots[static_cast<std::size_t>(
                        perm[static_cast<std::size_t>(s)])])]
                        [static_cast<std::size_t>(a_slots[static_cast<std::size_t>(s)])];
        pairing_sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const GaussianRational det_q = matrix_det(Q);
    mpq_class kpow(1);
    for (int t = 0; t < n + p; ++t) kpow *= k;
    return pairing_sum / det_q / GaussianRational(kpow);
}

/// The cutoff profile: 1 inside r_in, 0 outside r_out, the bump
/// exp(1 - 1/(1-t^2)) on the transition annulus.
inline double cutoff_chi(double rho, double r_in = 0.5, double r_out = 0.75) {
    if (rho <= r_in) return 1.0;
    if (rho >= r_out) return 0.0;
    const double t = (rho - r_in) / (r_out - r_in);
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

} // namespace bergman
